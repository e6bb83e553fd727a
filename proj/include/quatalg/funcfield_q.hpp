#ifndef QUATALG_FUNCFIELD_Q_HPP
#define QUATALG_FUNCFIELD_Q_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quatalg/brauer_q.hpp"
#include "quatalg/integer.hpp"
#include "quatalg/number_field.hpp"
#include "quatalg/poly_q.hpp"

namespace quatalg {

/// A nonzero element of Q(x)^x: constant * prod pi^e over monic irreducible pi.
class FactoredFunc {
 public:
  FactoredFunc() = default;
  /// Certifies every key as monic and irreducible over Q.
  FactoredFunc(FactoredRational constant, std::map<PolyQ, int> factors);

  static FactoredFunc from_poly(const PolyQ& f);
  static FactoredFunc from_rational(const BigRational& q);
  /// Polynomial text, or "N / D" with both sides parenthesized polynomials.
  static FactoredFunc parse(std::string_view text);

  const FactoredRational& constant() const { return constant_; }
  const std::map<PolyQ, int>& factors() const { return factors_; }
  int valuation(const PolyQ& place) const;
  bool is_constant() const { return factors_.empty(); }

  FactoredFunc operator*(const FactoredFunc& rhs) const;
  FactoredFunc inverse() const;
  FactoredFunc pow(int e) const;

  PolyQ numerator() const;
  PolyQ denominator() const;

  /// True when no factor vanishes at `at`.
  bool is_unit_at(const BigRational& at) const;
  /// Value at a point where this function is a unit; throws MathError otherwise.
  BigRational operator()(const BigRational& at) const;

  std::string str() const;

  friend bool operator==(const FactoredFunc&, const FactoredFunc&) = default;

 private:
  struct Trusted {};
  FactoredFunc(FactoredRational constant, std::map<PolyQ, int> factors, Trusted);

  FactoredRational constant_;
  std::map<PolyQ, int> factors_;
};

/// The quaternion algebra (f, g / Q(x)).
struct QuaternionFF {
  FactoredFunc f, g;
  friend bool operator==(const QuaternionFF&, const QuaternionFF&) = default;
};

/// Order <= 2 character of the residue field Q[x]/(place), stored as a square
/// class: the tame symbol reduced mod the place, with exponents taken mod 2.
struct ResidueCharacter {
  PolyQ place;
  PolyQ symbol;
  bool trivial = true;
  SquareClassVerdict certificate;  // square test on `symbol`
};

/// Tame symbol (-1)^{v(f)v(g)} f^{v(g)} g^{-v(f)} mod place, as a square-class representative.
NumberFieldElem tame_symbol(const QuaternionFF& d, const PolyQ& place);

ResidueCharacter residue_at(const QuaternionFF& d, const PolyQ& place, const SquareTestBudget& budget = {});

/// Distinct irreducible factors of f and g, sorted.
std::vector<PolyQ> candidate_places(const QuaternionFF& d);

/// Residues at every candidate place; places are evaluated in parallel.
std::vector<ResidueCharacter> residue_table(const QuaternionFF& d, const SquareTestBudget& budget = {});
/// Serial reference for residue_table.
std::vector<ResidueCharacter> residue_table_serial(const QuaternionFF& d, const SquareTestBudget& budget = {});

/// Places with a nontrivial residue.
std::vector<PolyQ> ramification_set(const QuaternionFF& d, const SquareTestBudget& budget = {});

/// (f(at), g(at)) over Q; throws MathError when an entry has a zero or pole at `at`.
QuaternionQ specialize(const QuaternionFF& d, const BigRational& at);

struct ResidueMismatch {
  PolyQ place;
  PolyQ symbol1, symbol2;
  SquareClassVerdict ratio_certificate;  // nonsquare certificate for symbol1 * symbol2
};

struct IsomorphismVerdict {
  bool isomorphic = false;
  std::optional<ResidueMismatch> residue_witness;
  std::optional<BigRational> specialization_point;
  std::optional<QuaternionQ> specialized1, specialized2;
  /// class(specialized1) + class(specialized2); zero iff isomorphic when set.
  std::optional<BrauerClassQ> constant_difference;
  std::vector<std::string> citations;
};

/// Smallest |a| (a in Z, positive first) at which every entry is a unit.
BigRational unit_point(const std::vector<const FactoredFunc*>& entries);

/// Compare residues at every place dividing an entry; on agreement the
/// difference class is constant and is decided by specializing at a unit point.
IsomorphismVerdict is_isomorphic_qx(const QuaternionFF& d1, const QuaternionFF& d2,
                                    const SquareTestBudget& budget = {});

struct DivisionCertificate {
  bool division = false;
  std::optional<ResidueCharacter> ramified;  // a nontrivial residue, if any
  std::optional<BigRational> specialization_point;
  std::optional<BrauerClassQ> constant_class;  // when all residues are trivial
};

/// A quaternion algebra over Q(x) is a division algebra iff its class is nonzero.
DivisionCertificate division_certificate(const QuaternionFF& d, const SquareTestBudget& budget = {});

struct MaximalSubfieldsVerdict {
  bool same = false;
  IsomorphismVerdict isomorphism;
  std::string summary;
  std::vector<std::string> citations;
};

/// Over Q(x) two quaternion division algebras share their maximal subfields
/// iff they are isomorphic. Throws MathError when either input is split.
MaximalSubfieldsVerdict same_maximal_subfields_qx(const QuaternionFF& d1, const QuaternionFF& d2,
                                                  const SquareTestBudget& budget = {});

/// An element of Q(x) as num/den with den monic and gcd(num, den) = 1.
struct RationalFunctionQ {
  PolyQ num, den;

  RationalFunctionQ(PolyQ n = {}, PolyQ d = PolyQ::constant(1));
  static RationalFunctionQ from(const FactoredFunc& f);
  bool is_zero() const { return num.is_zero(); }

  friend RationalFunctionQ operator+(const RationalFunctionQ& a, const RationalFunctionQ& b);
  friend RationalFunctionQ operator-(const RationalFunctionQ& a, const RationalFunctionQ& b);
  friend RationalFunctionQ operator*(const RationalFunctionQ& a, const RationalFunctionQ& b);
  friend bool operator==(const RationalFunctionQ&, const RationalFunctionQ&) = default;
};

/// Checks f s^2 + g t^2 - f g u^2 = value exactly.
bool qform_represents(const QuaternionFF& d, const FactoredFunc& value, const RationalFunctionQ& s,
                      const RationalFunctionQ& t, const RationalFunctionQ& u);

}  // namespace quatalg

#endif
