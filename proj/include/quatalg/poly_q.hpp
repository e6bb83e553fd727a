#ifndef QUATALG_POLY_Q_HPP
#define QUATALG_POLY_Q_HPP

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quatalg/integer.hpp"

namespace quatalg {

/// Dense univariate polynomial over Q, lowest degree first.
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and structural equality is equality.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<BigRational> coeffs);
  PolyQ(std::initializer_list<long> coeffs);

  static PolyQ constant(const BigRational& c);
  static PolyQ x();
  static PolyQ monomial(const BigRational& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  std::span<const BigRational> coeffs() const { return coeffs_; }
  BigRational coeff(int i) const;
  const BigRational& leading() const;

  PolyQ monic() const;
  BigRational operator()(const BigRational& at) const;

  PolyQ operator-() const;
  PolyQ& operator+=(const PolyQ& rhs);
  PolyQ& operator-=(const PolyQ& rhs);
  PolyQ& operator*=(const PolyQ& rhs);
  PolyQ& operator*=(const BigRational& s);

  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(PolyQ a, const PolyQ& b) { return a *= b; }
  friend PolyQ operator*(PolyQ a, const BigRational& s) { return a *= s; }
  friend PolyQ operator*(const BigRational& s, PolyQ a) { return a *= s; }

  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.coeffs_ == b.coeffs_; }
  /// Degree first, then coefficients from the top down.
  friend std::strong_ordering operator<=>(const PolyQ& a, const PolyQ& b);

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

/// Euclidean division; throws MathError on a zero divisor.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);
PolyQ operator/(const PolyQ& a, const PolyQ& b);
PolyQ operator%(const PolyQ& a, const PolyQ& b);

/// Monic gcd; gcd(0, 0) = 0.
PolyQ gcd(const PolyQ& a, const PolyQ& b);

struct XgcdQ {
  PolyQ g, s, t;  // s*a + t*b = g, g monic
};
XgcdQ xgcd(const PolyQ& a, const PolyQ& b);

BigRational resultant(const PolyQ& a, const PolyQ& b);
PolyQ derivative(const PolyQ& a);
PolyQ pow(const PolyQ& a, unsigned e);

/// lcm of coefficient denominators times a, divided by the integer content,
/// sign fixed so the leading coefficient is positive.
PolyQ primitive_part(const PolyQ& a);

/// Parses `3*x^2 - 1/2*x + 7`, with parentheses and integer powers.
PolyQ parse_poly_q(std::string_view text, char var = 'x');
std::string to_string(const PolyQ& p, char var = 'x');

}  // namespace quatalg

#endif
