#include "quatalg/poly_fp.hpp"

#include <algorithm>

#include "quatalg/errors.hpp"

namespace quatalg {

namespace fp {

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e != 0) {
    if (e & 1U) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw MathError("inverse of zero mod " + std::to_string(p));
  return pow(a, p - 2, p);
}

int euler(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  return pow(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace fp

PolyFp::PolyFp(Coeff p, std::vector<Coeff> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= p_;
  trim();
}

PolyFp::PolyFp(Coeff p, std::initializer_list<long> coeffs) : p_(p) {
  for (long c : coeffs) {
    long r = c % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    coeffs_.push_back(static_cast<Coeff>(r));
  }
  trim();
}

PolyFp PolyFp::constant(Coeff p, Coeff c) { return PolyFp(p, std::vector<Coeff>{c % p}); }

PolyFp PolyFp::x(Coeff p) { return PolyFp(p, std::vector<Coeff>{0, 1}); }

PolyFp PolyFp::reduce(const PolyQ& f, Coeff p) {
  std::vector<Coeff> out;
  out.reserve(f.coeffs().size());
  BigInt pz(static_cast<unsigned long>(p));
  for (const auto& c : f.coeffs()) {
    BigInt num = c.get_num() % pz;
    BigInt den = c.get_den() % pz;
    if (den == 0) throw MathError("prime " + std::to_string(p) + " divides a coefficient denominator");
    if (num < 0) num += pz;
    out.push_back(fp::mul(num.get_ui(), fp::inv(den.get_ui(), p), p));
  }
  return PolyFp(p, std::move(out));
}

void PolyFp::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolyFp::Coeff PolyFp::leading() const {
  if (coeffs_.empty()) throw MathError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

PolyFp PolyFp::monic() const {
  if (is_zero()) return *this;
  PolyFp out = *this;
  return out.scale(fp::inv(leading(), p_));
}

PolyFp::Coeff PolyFp::operator()(Coeff at) const {
  Coeff acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = (fp::mul(acc, at, p_) + *it) % p_;
  return acc;
}

PolyFp PolyFp::operator-() const {
  PolyFp out = *this;
  for (auto& c : out.coeffs_) c = c == 0 ? 0 : p_ - c;
  return out;
}

PolyFp& PolyFp::operator+=(const PolyFp& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = (coeffs_[i] + rhs.coeffs_[i]) % p_;
  trim();
  return *this;
}

PolyFp& PolyFp::operator-=(const PolyFp& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = (coeffs_[i] + p_ - rhs.coeffs_[i]) % p_;
  trim();
  return *this;
}

PolyFp& PolyFp::operator*=(const PolyFp& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  // Accumulate in 128 bits; reduce once per output coefficient.
  std::vector<unsigned __int128> acc(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      acc[i + j] += static_cast<unsigned __int128>(coeffs_[i]) * rhs.coeffs_[j];
  }
  coeffs_.assign(acc.size(), 0);
  for (std::size_t k = 0; k < acc.size(); ++k) coeffs_[k] = static_cast<Coeff>(acc[k] % p_);
  trim();
  return *this;
}

PolyFp& PolyFp::scale(Coeff s) {
  s %= p_;
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c = fp::mul(c, s, p_);
  return *this;
}

std::strong_ordering operator<=>(const PolyFp& a, const PolyFp& b) {
  if (a.p_ != b.p_) return a.p_ <=> b.p_;
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    auto c = a.coeffs_[static_cast<std::size_t>(i)] <=> b.coeffs_[static_cast<std::size_t>(i)];
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  const auto p = a.modulus();
  if (a.degree() < b.degree()) return {PolyFp(p), a};
  std::vector<std::uint64_t> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<std::uint64_t> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
  const std::uint64_t inv_lead = fp::inv(b.leading(), p);
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    std::uint64_t q = fp::mul(rem[static_cast<std::size_t>(i)], inv_lead, p);
    if (q == 0) continue;
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - db + j)];
      slot = (slot + p - fp::mul(q, b.coeffs()[static_cast<std::size_t>(j)], p)) % p;
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {PolyFp(p, std::move(quo)), PolyFp(p, std::move(rem))};
}

PolyFp operator/(const PolyFp& a, const PolyFp& b) { return divmod(a, b).first; }
PolyFp operator%(const PolyFp& a, const PolyFp& b) { return divmod(a, b).second; }

PolyFp gcd(const PolyFp& a, const PolyFp& b) {
  PolyFp r0 = a, r1 = b;
  while (!r1.is_zero()) {
    PolyFp r2 = r0 % r1;
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return r0.monic();
}

XgcdFp xgcd(const PolyFp& a, const PolyFp& b) {
  const auto p = a.modulus();
  PolyFp r0 = a, r1 = b;
  PolyFp s0 = PolyFp::constant(p, 1), s1(p);
  PolyFp t0(p), t1 = PolyFp::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    PolyFp s2 = s0 - q * s1;
    PolyFp t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  std::uint64_t inv = fp::inv(r0.leading(), p);
  return {r0.scale(inv), s0.scale(inv), t0.scale(inv)};
}

PolyFp derivative(const PolyFp& a) {
  const auto p = a.modulus();
  if (a.degree() < 1) return PolyFp(p);
  std::vector<std::uint64_t> d(static_cast<std::size_t>(a.degree()));
  for (int i = 1; i <= a.degree(); ++i)
    d[static_cast<std::size_t>(i - 1)] = fp::mul(a.coeffs()[static_cast<std::size_t>(i)], static_cast<std::uint64_t>(i) % p, p);
  return PolyFp(p, std::move(d));
}

PolyFp mulmod(const PolyFp& a, const PolyFp& b, const PolyFp& m) { return (a * b) % m; }

PolyFp powmod(const PolyFp& base, const BigInt& e, const PolyFp& m) {
  if (e < 0) return powmod(invmod(base, m), BigInt(-e), m);
  const auto p = m.modulus();
  PolyFp result = PolyFp::constant(p, 1) % m;
  PolyFp b = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, b, m);
  }
  return result;
}

PolyFp invmod(const PolyFp& a, const PolyFp& m) {
  XgcdFp r = xgcd(a % m, m);
  if (!r.g.is_one()) throw MathError("element is not invertible modulo " + to_string(m));
  return r.s % m;
}

bool is_squarefree(const PolyFp& f) {
  if (f.degree() < 1) return true;
  PolyFp d = derivative(f);
  if (d.is_zero()) return false;
  return gcd(f, d).degree() == 0;
}

namespace {

BigInt p_power(std::uint64_t p, int d) {
  BigInt q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, static_cast<unsigned long>(d));
  return q;
}

// Square-free decomposition over F_p (handles p-th powers). Input monic.
std::vector<std::pair<PolyFp, int>> squarefree_decomposition(const PolyFp& f) {
  const auto p = f.modulus();
  std::vector<std::pair<PolyFp, int>> out;
  if (f.degree() < 1) return out;
  PolyFp d = derivative(f);
  if (d.is_zero()) {
    // f = g(x^p) = g(x)^p since coefficients are fixed by Frobenius.
    std::vector<std::uint64_t> root;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) root.push_back(f.coeff(i));
    for (auto& [g, e] : squarefree_decomposition(PolyFp(p, std::move(root)))) out.emplace_back(g, e * static_cast<int>(p));
    return out;
  }
  PolyFp c = gcd(f, d);
  PolyFp w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    PolyFp y = gcd(w, c);
    PolyFp z = w / y;
    if (z.degree() > 0) out.emplace_back(z.monic(), i);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) {
    // The remaining c is a p-th power.
    std::vector<std::uint64_t> root;
    for (int k = 0; k <= c.degree(); k += static_cast<int>(p)) root.push_back(c.coeff(k));
    for (auto& [g, e] : squarefree_decomposition(PolyFp(p, std::move(root)).monic()))
      out.emplace_back(g, e * static_cast<int>(p));
  }
  return out;
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<PolyFp, int>> distinct_degree(const PolyFp& f) {
  const auto p = f.modulus();
  std::vector<std::pair<PolyFp, int>> out;
  PolyFp rest = f;
  PolyFp x = PolyFp::x(p);
  PolyFp h = x % rest;
  const BigInt pz(static_cast<unsigned long>(p));
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    h = powmod(h, pz, rest);
    PolyFp g = gcd(rest, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest.monic(), rest.degree());
  return out;
}

PolyFp random_poly(std::uint64_t p, int max_degree, std::mt19937_64& rng) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(max_degree) + 1);
  for (auto& v : c) v = rng() % p;
  return PolyFp(p, std::move(c));
}

// Equal-degree splitting of a product of distinct irreducibles of degree d.
void equal_degree(const PolyFp& f, int d, std::mt19937_64& rng, std::vector<PolyFp>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const auto p = f.modulus();
  const BigInt e = (p_power(p, d) - 1) / 2;
  for (;;) {
    PolyFp a = random_poly(p, f.degree() - 1, rng);
    if (a.degree() < 1) continue;
    PolyFp g = gcd(a, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
    PolyFp b = powmod(a, e, f) - PolyFp::constant(p, 1);
    g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

bool is_irreducible(const PolyFp& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const auto p = f.modulus();
  PolyFp m = f.monic();
  PolyFp x = PolyFp::x(p);
  PolyFp h = x;
  const BigInt pz(static_cast<unsigned long>(p));
  for (int d = 1; 2 * d <= m.degree(); ++d) {
    h = powmod(h, pz, m);
    if (gcd(m, h - x).degree() > 0) return false;
  }
  return true;
}

FactorizationFp factor_poly_fp(const PolyFp& f, std::uint64_t seed) {
  if (f.is_zero()) throw MathError("factor_poly_fp: zero polynomial");
  if (f.modulus() == 2) throw MathError("factor_poly_fp: characteristic 2 is unsupported");
  FactorizationFp out;
  out.unit = f.leading();
  std::mt19937_64 rng(seed);
  for (auto& [sqf, mult] : squarefree_decomposition(f.monic())) {
    for (auto& [block, d] : distinct_degree(sqf)) {
      std::vector<PolyFp> pieces;
      equal_degree(block, d, rng, pieces);
      for (auto& piece : pieces) out.factors.push_back({std::move(piece), mult});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const FactorFp& a, const FactorFp& b) { return a.factor < b.factor; });
  return out;
}

int euler_criterion(const PolyFp& a, const PolyFp& m) {
  PolyFp r = a % m;
  if (r.is_zero()) return 0;
  const BigInt e = (p_power(m.modulus(), m.degree()) - 1) / 2;
  PolyFp v = powmod(r, e, m);
  if (v.is_one()) return 1;
  if (v == PolyFp::constant(m.modulus(), m.modulus() - 1)) return -1;
  throw MathError("euler_criterion: modulus " + to_string(m) + " is not irreducible");
}

bool sqrt_mod(const PolyFp& a, const PolyFp& m, PolyFp& root, std::mt19937_64& rng) {
  const auto p = m.modulus();
  PolyFp r = a % m;
  if (r.is_zero()) {
    root = r;
    return true;
  }
  if (euler_criterion(r, m) != 1) return false;
  // Tonelli-Shanks in F_q, q = p^d.
  const BigInt q = p_power(p, m.degree());
  BigInt t = q - 1;
  unsigned long s = 0;
  while (mpz_even_p(t.get_mpz_t())) {
    t >>= 1;
    ++s;
  }
  PolyFp z;
  for (;;) {
    z = random_poly(p, m.degree() - 1, rng);
    if (!z.is_zero() && euler_criterion(z, m) == -1) break;
  }
  PolyFp c = powmod(z, t, m);
  PolyFp x = powmod(r, BigInt((t + 1) / 2), m);
  PolyFp b = powmod(r, t, m);
  unsigned long e = s;
  while (!b.is_one()) {
    unsigned long i = 0;
    PolyFp bb = b;
    while (!bb.is_one()) {
      bb = mulmod(bb, bb, m);
      ++i;
    }
    PolyFp g = c;
    for (unsigned long k = 0; k + i + 1 < e; ++k) g = mulmod(g, g, m);
    x = mulmod(x, g, m);
    c = mulmod(g, g, m);
    b = mulmod(b, c, m);
    e = i;
  }
  root = x;
  return true;
}

PolyFp parse_poly_fp(std::string_view text, std::uint64_t p, char var) {
  return PolyFp::reduce(parse_poly_q(text, var), p);
}

std::string to_string(const PolyFp& f, char var) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    auto c = f.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace quatalg
