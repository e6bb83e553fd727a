#ifndef QUATALG_INTEGER_HPP
#define QUATALG_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace quatalg {

using BigInt = mpz_class;
using BigRational = mpq_class;

enum class Certainty { Deterministic, Probabilistic };

struct PrimalityResult {
  bool prime = false;
  Certainty certainty = Certainty::Deterministic;
};

/// Miller-Rabin; a fixed base set makes it deterministic below 2^64,
/// above that 64 pseudo-random rounds are run and the answer is flagged.
PrimalityResult test_prime(const BigInt& n);
inline bool is_prime(const BigInt& n) { return test_prime(n).prime; }
bool is_prime_u64(std::uint64_t n);

/// Odd primes in increasing order starting after `after`.
std::uint64_t next_prime(std::uint64_t after);

/// The primes below 10^6, used for trial division.
const std::vector<std::uint32_t>& small_primes();

/// sign * prod p^e, a nonzero rational in factored form.
class FactoredRational {
 public:
  FactoredRational() = default;

  int sign() const { return sign_; }
  const std::map<BigInt, int>& factors() const { return factors_; }
  /// True when some key above 2^64 was only certified probabilistically.
  bool probabilistic() const { return probabilistic_; }

  BigRational value() const;
  int valuation(const BigInt& p) const;

  FactoredRational operator*(const FactoredRational& rhs) const;
  FactoredRational inverse() const;
  FactoredRational pow(int e) const;

  /// Squarefree integer t with value / t a rational square.
  BigInt square_class() const;

  friend bool operator==(const FactoredRational&, const FactoredRational&) = default;

 private:
  friend FactoredRational factor_int(const BigInt& n);
  friend FactoredRational make_factored(int sign, std::map<BigInt, int> factors, bool probabilistic);

  int sign_ = 1;
  std::map<BigInt, int> factors_;
  bool probabilistic_ = false;
};

/// Trial division to 10^6, then Brent's variant of Pollard rho. Throws MathError on 0.
FactoredRational factor_int(const BigInt& n);
FactoredRational factor_rational(const BigRational& q);
/// Checks every key for primality and drops zero exponents.
FactoredRational make_factored(int sign, std::map<BigInt, int> factors, bool probabilistic = false);

/// v_p(n) for n != 0.
int valuation(const BigInt& n, const BigInt& p);
int valuation(const BigRational& q, const BigInt& p);

BigInt lcm(const BigInt& a, const BigInt& b);

/// Accepts "a" or "a/b" with an optional leading sign; canonicalizes.
BigRational parse_rational(std::string_view text);
std::string to_string(const BigInt& n);
std::string to_string(const BigRational& q);

/// n/d with |n|, d <= sqrt(m/2) and n/d = a mod m, if such a fraction exists.
bool rational_reconstruct(const BigInt& a, const BigInt& m, BigRational& out);

}  // namespace quatalg

#endif
