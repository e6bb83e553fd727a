#ifndef QUATALG_POLY_FP_HPP
#define QUATALG_POLY_FP_HPP

#include <compare>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quatalg/integer.hpp"
#include "quatalg/poly_q.hpp"

namespace quatalg {

/// Dense polynomial over F_p for an odd prime p < 2^31, lowest degree first.
class PolyFp {
 public:
  using Coeff = std::uint64_t;

  PolyFp() = default;
  explicit PolyFp(Coeff p) : p_(p) {}
  PolyFp(Coeff p, std::vector<Coeff> coeffs);
  PolyFp(Coeff p, std::initializer_list<long> coeffs);

  static PolyFp constant(Coeff p, Coeff c);
  static PolyFp x(Coeff p);
  /// Reduces a polynomial with p-integral rational coefficients; throws
  /// MathError when p divides a denominator.
  static PolyFp reduce(const PolyQ& f, Coeff p);

  Coeff modulus() const { return p_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  std::span<const Coeff> coeffs() const { return coeffs_; }
  Coeff coeff(int i) const { return (i < 0 || i > degree()) ? 0 : coeffs_[static_cast<std::size_t>(i)]; }
  Coeff leading() const;

  PolyFp monic() const;
  Coeff operator()(Coeff at) const;

  PolyFp operator-() const;
  PolyFp& operator+=(const PolyFp& rhs);
  PolyFp& operator-=(const PolyFp& rhs);
  PolyFp& operator*=(const PolyFp& rhs);
  PolyFp& scale(Coeff s);

  friend PolyFp operator+(PolyFp a, const PolyFp& b) { return a += b; }
  friend PolyFp operator-(PolyFp a, const PolyFp& b) { return a -= b; }
  friend PolyFp operator*(PolyFp a, const PolyFp& b) { return a *= b; }

  friend bool operator==(const PolyFp& a, const PolyFp& b) { return a.p_ == b.p_ && a.coeffs_ == b.coeffs_; }
  friend std::strong_ordering operator<=>(const PolyFp& a, const PolyFp& b);

 private:
  void trim();
  Coeff p_ = 3;
  std::vector<Coeff> coeffs_;
};

namespace fp {
std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
/// Euler's criterion: +1, -1, or 0 when p | a.
int euler(std::uint64_t a, std::uint64_t p);
}  // namespace fp

std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b);
PolyFp operator/(const PolyFp& a, const PolyFp& b);
PolyFp operator%(const PolyFp& a, const PolyFp& b);
PolyFp gcd(const PolyFp& a, const PolyFp& b);

struct XgcdFp {
  PolyFp g, s, t;  // s*a + t*b = g, g monic
};
XgcdFp xgcd(const PolyFp& a, const PolyFp& b);

PolyFp derivative(const PolyFp& a);
PolyFp mulmod(const PolyFp& a, const PolyFp& b, const PolyFp& m);
PolyFp powmod(const PolyFp& base, const BigInt& e, const PolyFp& m);
/// Inverse of a modulo m; throws MathError when gcd(a, m) != 1.
PolyFp invmod(const PolyFp& a, const PolyFp& m);

bool is_squarefree(const PolyFp& f);
/// Irreducibility via gcd(f, x^(p^d) - x) = 1 for d <= deg/2.
bool is_irreducible(const PolyFp& f);

struct FactorFp {
  PolyFp factor;  // monic irreducible
  int multiplicity;
  friend bool operator==(const FactorFp&, const FactorFp&) = default;
};

struct FactorizationFp {
  std::uint64_t unit = 1;
  std::vector<FactorFp> factors;  // sorted
};

/// Squarefree decomposition, distinct-degree, then Cantor-Zassenhaus
/// equal-degree splitting. Throws MathError on zero or p = 2.
FactorizationFp factor_poly_fp(const PolyFp& f, std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

/// Euler's criterion in F_p[x]/(m) for m irreducible of degree d:
/// a^((p^d - 1)/2) in {+1, -1}, or 0 when m | a.
int euler_criterion(const PolyFp& a, const PolyFp& m);

/// A square root of a in F_p[x]/(m) (m irreducible), if a is a square.
bool sqrt_mod(const PolyFp& a, const PolyFp& m, PolyFp& root, std::mt19937_64& rng);

PolyFp parse_poly_fp(std::string_view text, std::uint64_t p, char var = 'x');
std::string to_string(const PolyFp& f, char var = 'x');

}  // namespace quatalg

#endif
