#include "quatalg/integer.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>

#include "quatalg/errors.hpp"

namespace quatalg {

namespace {

constexpr std::uint32_t kTrialBound = 1000000;

bool miller_rabin_round(const BigInt& n, const BigInt& n_minus_1, const BigInt& d, unsigned s,
                        const BigInt& base) {
  BigInt x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

BigInt pollard_brent(const BigInt& n, std::mt19937_64& rng) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (;;) {
    BigInt y = BigInt(static_cast<unsigned long>(rng() % 1000003)) % n;
    BigInt c = BigInt(static_cast<unsigned long>(rng() % 1000003 + 1)) % n;
    const unsigned long m = 128;
    BigInt g = 1, q = 1, x, ys;
    unsigned long r = 1;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const unsigned long steps = std::min<unsigned long>(m, r - k);
        for (unsigned long i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          BigInt diff = abs(x - y);
          q = q * diff % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        BigInt diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_cofactor(const BigInt& n, std::map<BigInt, int>& out, bool& probabilistic,
                     std::mt19937_64& rng) {
  if (n == 1) return;
  PrimalityResult pr = test_prime(n);
  if (pr.prime) {
    out[n] += 1;
    if (pr.certainty == Certainty::Probabilistic) probabilistic = true;
    return;
  }
  BigInt root;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    std::map<BigInt, int> half;
    factor_cofactor(root, half, probabilistic, rng);
    for (auto& [p, e] : half) out[p] += 2 * e;
    return;
  }
  BigInt d = pollard_brent(n, rng);
  factor_cofactor(d, out, probabilistic, rng);
  factor_cofactor(BigInt(n / d), out, probabilistic, rng);
}

}  // namespace

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialBound + 1, false);
    std::vector<std::uint32_t> ps;
    for (std::uint32_t i = 2; i <= kTrialBound; ++i) {
      if (composite[i]) continue;
      ps.push_back(i);
      for (std::uint64_t j = std::uint64_t(i) * i; j <= kTrialBound; j += i) composite[j] = true;
    }
    return ps;
  }();
  return primes;
}

PrimalityResult test_prime(const BigInt& n) {
  if (n < 2) return {false, Certainty::Deterministic};
  static constexpr unsigned kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned b : kBases) {
    if (n == b) return {true, Certainty::Deterministic};
    if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return {false, Certainty::Deterministic};
  }
  BigInt n_minus_1 = n - 1;
  BigInt d = n_minus_1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  const bool small = mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
  for (unsigned b : kBases) {
    if (!miller_rabin_round(n, n_minus_1, d, s, BigInt(b))) return {false, Certainty::Deterministic};
  }
  if (small) return {true, Certainty::Deterministic};

  // Seeded from n so the verdict is reproducible.
  gmp_randclass rand(gmp_randinit_default);
  rand.seed(n);
  for (int round = 0; round < 64; ++round) {
    BigInt base = rand.get_z_range(BigInt(n - 3)) + 2;
    if (!miller_rabin_round(n, n_minus_1, d, s, base)) return {false, Certainty::Deterministic};
  }
  return {true, Certainty::Probabilistic};
}

bool is_prime_u64(std::uint64_t n) { return test_prime(BigInt(static_cast<unsigned long>(n))).prime; }

std::uint64_t next_prime(std::uint64_t after) {
  std::uint64_t n = after < 2 ? 2 : after + 1;
  while (!is_prime_u64(n)) ++n;
  return n;
}

BigRational FactoredRational::value() const {
  BigInt num = 1, den = 1;
  for (const auto& [p, e] : factors_) {
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(std::abs(e)));
    if (e > 0)
      num *= pe;
    else
      den *= pe;
  }
  BigRational q(sign_ * num, den);
  q.canonicalize();
  return q;
}

int FactoredRational::valuation(const BigInt& p) const {
  auto it = factors_.find(p);
  return it == factors_.end() ? 0 : it->second;
}

FactoredRational FactoredRational::operator*(const FactoredRational& rhs) const {
  FactoredRational out = *this;
  out.sign_ *= rhs.sign_;
  out.probabilistic_ = probabilistic_ || rhs.probabilistic_;
  for (const auto& [p, e] : rhs.factors_) {
    int& slot = out.factors_[p];
    slot += e;
    if (slot == 0) out.factors_.erase(p);
  }
  return out;
}

FactoredRational FactoredRational::inverse() const { return pow(-1); }

FactoredRational FactoredRational::pow(int e) const {
  FactoredRational out;
  out.probabilistic_ = probabilistic_;
  if (e == 0) return out;
  out.sign_ = (e % 2 == 0) ? 1 : sign_;
  for (const auto& [p, k] : factors_) out.factors_[p] = k * e;
  return out;
}

BigInt FactoredRational::square_class() const {
  BigInt t = sign_;
  for (const auto& [p, e] : factors_)
    if (e % 2 != 0) t *= p;
  return t;
}

FactoredRational make_factored(int sign, std::map<BigInt, int> factors, bool probabilistic) {
  if (sign != 1 && sign != -1) throw MathError("factored rational: sign must be +1 or -1");
  FactoredRational out;
  out.sign_ = sign;
  out.probabilistic_ = probabilistic;
  for (auto& [p, e] : factors) {
    if (e == 0) continue;
    PrimalityResult pr = test_prime(p);
    if (!pr.prime) throw MathError("factored rational: key " + p.get_str() + " is not prime");
    if (pr.certainty == Certainty::Probabilistic) out.probabilistic_ = true;
    out.factors_.emplace(p, e);
  }
  return out;
}

FactoredRational factor_int(const BigInt& n) {
  if (n == 0) throw MathError("factor_int: zero has no factorization");
  FactoredRational out;
  out.sign_ = sgn(n) < 0 ? -1 : 1;
  BigInt m = abs(n);
  for (std::uint32_t p : small_primes()) {
    if (BigInt(p) * p > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      int e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      }
      out.factors_[BigInt(p)] = e;
    }
  }
  if (m == 1) return out;
  if (m <= BigInt(kTrialBound) * kTrialBound) {
    // Every prime below the trial bound has been removed, so m is prime.
    out.factors_[m] += 1;
    return out;
  }
  std::mt19937_64 rng(0x5eed);
  factor_cofactor(m, out.factors_, out.probabilistic_, rng);
  return out;
}

FactoredRational factor_rational(const BigRational& q) {
  if (q == 0) throw MathError("factor_rational: zero has no factorization");
  return factor_int(q.get_num()) * factor_int(q.get_den()).inverse();
}

int valuation(const BigInt& n, const BigInt& p) {
  if (n == 0) throw MathError("valuation of zero");
  BigInt m = n;
  int v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

int valuation(const BigRational& q, const BigInt& p) {
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

BigRational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty rational");
  auto slash = s.find('/');
  auto parse_int = [](const std::string& t) {
    std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (start == t.size()) throw ParseError("malformed integer '" + t + "'");
    for (std::size_t i = start; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) throw ParseError("malformed integer '" + t + "'");
    return BigInt(t[0] == '+' ? t.substr(1) : t);
  };
  if (slash == std::string::npos) return BigRational(parse_int(s));
  BigInt num = parse_int(s.substr(0, slash));
  BigInt den = parse_int(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + s + "'");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigInt& n) { return n.get_str(); }

std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool rational_reconstruct(const BigInt& a, const BigInt& m, BigRational& out) {
  BigInt bound;
  mpz_sqrt(bound.get_mpz_t(), BigInt(m / 2).get_mpz_t());
  BigInt r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  BigInt t0 = 0, t1 = 1;
  while (r1 > bound) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return false;
  out = BigRational(r1, t1);
  out.canonicalize();
  return true;
}

}  // namespace quatalg
