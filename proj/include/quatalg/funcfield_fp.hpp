#ifndef QUATALG_FUNCFIELD_FP_HPP
#define QUATALG_FUNCFIELD_FP_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quatalg/poly_fp.hpp"

namespace quatalg {

/// Largest input degree accepted for F_p(x) work.
inline constexpr int kMaxDegreeFp = 64;

/// Throws MathError unless p is an odd prime below 2^31.
void check_characteristic(std::uint64_t p);

/// A nonzero element of F_p(x): constant * prod pi^e over monic irreducible pi.
class FactoredFuncFp {
 public:
  explicit FactoredFuncFp(std::uint64_t p = 3) : p_(p) {}
  /// Certifies every key as monic irreducible over F_p.
  FactoredFuncFp(std::uint64_t p, std::uint64_t constant, std::map<PolyFp, int> factors);

  static FactoredFuncFp from_poly(const PolyFp& f);
  /// Polynomial text, or "(N)/(D)".
  static FactoredFuncFp parse(std::string_view text, std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }
  std::uint64_t constant() const { return constant_; }
  const std::map<PolyFp, int>& factors() const { return factors_; }
  int valuation(const PolyFp& place) const;
  /// Sum of e * deg(pi); the valuation at infinity is its negative.
  int degree() const;

  FactoredFuncFp operator*(const FactoredFuncFp& rhs) const;
  FactoredFuncFp pow(int e) const;

  PolyFp numerator() const;
  PolyFp denominator() const;
  std::string str() const;

  friend bool operator==(const FactoredFuncFp&, const FactoredFuncFp&) = default;

 private:
  std::uint64_t p_;
  std::uint64_t constant_ = 1;
  std::map<PolyFp, int> factors_;
};

/// A place of F_p(x): a monic irreducible polynomial or the degree place.
class PlaceFFp {
 public:
  static PlaceFFp infinity() { return PlaceFFp(); }
  /// Throws MathError unless m is monic irreducible.
  static PlaceFFp finite(const PolyFp& m);
  /// "inf" or a polynomial.
  static PlaceFFp parse(std::string_view text, std::uint64_t p);

  bool is_infinity() const { return !modulus_.has_value(); }
  const PolyFp& modulus() const { return *modulus_; }
  std::string str() const;

  /// Finite places by polynomial order, infinity last.
  friend std::strong_ordering operator<=>(const PlaceFFp& a, const PlaceFFp& b);
  friend bool operator==(const PlaceFFp& a, const PlaceFFp& b) { return a.modulus_ == b.modulus_; }

 private:
  PlaceFFp() = default;
  std::optional<PolyFp> modulus_;
};

struct QuaternionFFp {
  FactoredFuncFp f, g;
  friend bool operator==(const QuaternionFFp&, const QuaternionFFp&) = default;
};

/// A quaternion class over F_p(x) is its residue vector; only places with
/// residue -1 are stored.
struct QuatClassFp {
  std::uint64_t characteristic = 3;
  std::map<PlaceFFp, int> residues;
  bool is_zero() const { return residues.empty(); }
  friend bool operator==(const QuatClassFp&, const QuatClassFp&) = default;
};

/// Tame symbol reduced into the residue field, then Euler's criterion.
int residue_fp(const QuaternionFFp& d, const PlaceFFp& v);

/// Finite places dividing f or g, then infinity.
std::vector<PlaceFFp> candidate_places_fp(const QuaternionFFp& d);

/// Residues at every candidate place, computed in parallel. Throws
/// std::logic_error if the residues do not multiply to +1.
QuatClassFp class_fp(const QuaternionFFp& d);
/// Serial reference for class_fp.
QuatClassFp class_fp_serial(const QuaternionFFp& d);

struct IsomorphismVerdictFp {
  bool isomorphic = false;
  QuatClassFp class1, class2;
  std::optional<PlaceFFp> witness;  // first place where the residues differ
};

/// Throws MathError when the characteristics differ.
IsomorphismVerdictFp is_isomorphic_fpx(const QuaternionFFp& d1, const QuaternionFFp& d2);

}  // namespace quatalg

#endif
