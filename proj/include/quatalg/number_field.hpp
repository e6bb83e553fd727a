#ifndef QUATALG_NUMBER_FIELD_HPP
#define QUATALG_NUMBER_FIELD_HPP

#include <cstdint>
#include <optional>

#include "quatalg/poly_fp.hpp"
#include "quatalg/poly_q.hpp"

namespace quatalg {

/// An element of Q[x]/(modulus), modulus monic irreducible over Q.
class NumberFieldElem {
 public:
  /// Reduces `value` mod `modulus`. Irreducibility of the modulus is the
  /// caller's responsibility (places produced by factor_poly_q satisfy it).
  NumberFieldElem(PolyQ modulus, PolyQ value);
  /// Same, but certifies irreducibility of the modulus first.
  static NumberFieldElem certified(PolyQ modulus, PolyQ value);

  const PolyQ& modulus() const { return modulus_; }
  const PolyQ& value() const { return value_; }
  int degree() const { return modulus_.degree(); }
  bool is_zero() const { return value_.is_zero(); }

  NumberFieldElem operator*(const NumberFieldElem& rhs) const;
  NumberFieldElem inverse() const;

  friend bool operator==(const NumberFieldElem&, const NumberFieldElem&) = default;

 private:
  PolyQ modulus_;
  PolyQ value_;
};

/// Evidence that c is not a square: an odd prime p with the modulus squarefree
/// mod p, and a monic irreducible factor of the modulus mod p in whose residue
/// field the image of c fails Euler's criterion.
struct NonsquareWitness {
  std::uint64_t prime;
  PolyFp factor;
};

struct SquareClassVerdict {
  bool is_square = false;
  std::optional<PolyQ> root;                 // set iff is_square
  std::optional<NonsquareWitness> witness;   // set iff !is_square
  bool verified = false;
};

struct SquareTestBudget {
  std::uint64_t max_prime = 100000;
  unsigned min_exponent = 16;
  unsigned max_exponent = 1024;
  /// Lifting is only attempted at primes where the modulus has at most this many factors.
  int max_lift_factors = 8;

  /// Defaults, with max_prime overridden by QUATALG_SQUARE_BUDGET when set.
  static SquareTestBudget from_environment();
};

/// Las Vegas square test. Every returned verdict carries a certificate that
/// has been re-verified; throws BudgetExhausted when neither a root nor a
/// witness is found within the budget, and MathError when c = 0.
SquareClassVerdict is_square_in_number_field(const NumberFieldElem& c, const SquareTestBudget& budget = {});

/// Independent re-check of a certificate against c.
bool verify_certificate(const SquareClassVerdict& verdict, const NumberFieldElem& c);

}  // namespace quatalg

#endif
