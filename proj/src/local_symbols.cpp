#include "quatalg/local_symbols.hpp"

#include <set>

#include "quatalg/errors.hpp"

namespace quatalg {

PlaceQ PlaceQ::finite(const BigInt& p) {
  if (!is_prime(p)) throw MathError("place: " + p.get_str() + " is not a prime");
  PlaceQ v;
  v.real_ = false;
  v.p_ = p;
  return v;
}

const BigInt& PlaceQ::prime() const {
  if (real_) throw MathError("the real place has no prime");
  return p_;
}

std::string PlaceQ::str() const { return real_ ? "real" : p_.get_str(); }

PlaceQ PlaceQ::parse(const std::string& text) {
  if (text == "real" || text == "inf" || text == "oo") return real();
  BigRational q = parse_rational(text);
  if (q.get_den() != 1 || q <= 1) throw ParseError("place '" + text + "' is neither 'real' nor a prime");
  return finite(q.get_num());
}

std::strong_ordering operator<=>(const PlaceQ& a, const PlaceQ& b) {
  if (a.real_ != b.real_) return a.real_ ? std::strong_ordering::greater : std::strong_ordering::less;
  int c = cmp(a.p_, b.p_);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

namespace {

// Splits x = p^v * (n/d) with p not dividing n or d.
struct UnitSplit {
  int v;
  BigInt num, den;
};

UnitSplit split(const BigRational& x, const BigInt& p) {
  UnitSplit s{0, x.get_num(), x.get_den()};
  s.v += static_cast<int>(mpz_remove(s.num.get_mpz_t(), s.num.get_mpz_t(), p.get_mpz_t()));
  s.v -= static_cast<int>(mpz_remove(s.den.get_mpz_t(), s.den.get_mpz_t(), p.get_mpz_t()));
  return s;
}

int euler_unchecked(const BigInt& a, const BigInt& p) {
  BigInt r = a % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  BigInt e = (p - 1) / 2, out;
  mpz_powm(out.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return out == 1 ? 1 : -1;
}

unsigned mod8(const BigInt& n) {
  BigInt r = n % 8;
  if (r < 0) r += 8;
  return static_cast<unsigned>(r.get_ui());
}

}  // namespace

int legendre(const BigInt& a, const BigInt& p) {
  if (p <= 2 || !is_prime(p)) throw MathError("legendre: " + p.get_str() + " is not an odd prime");
  return euler_unchecked(a, p);
}

int hilbert(const BigRational& a, const BigRational& b, const PlaceQ& v) {
  if (a == 0 || b == 0) throw MathError("hilbert: arguments must be nonzero");
  if (v.is_real()) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
  const BigInt& p = v.prime();
  UnitSplit sa = split(a, p), sb = split(b, p);
  if (p == 2) {
    // Unit parts mod 8: n/d = n*d since d^2 = 1 mod 8.
    const unsigned u = (mod8(sa.num) * mod8(sa.den)) % 8;
    const unsigned w = (mod8(sb.num) * mod8(sb.den)) % 8;
    auto eps = [](unsigned x) { return ((x - 1) / 2) % 2; };
    auto omega = [](unsigned x) { return ((x * x - 1) / 8) % 2; };
    const long alpha = ((sa.v % 2) + 2) % 2, beta = ((sb.v % 2) + 2) % 2;
    const long e = static_cast<long>(eps(u) * eps(w)) + alpha * static_cast<long>(omega(w)) +
                   beta * static_cast<long>(omega(u));
    return e % 2 == 0 ? 1 : -1;
  }
  const long alpha = ((sa.v % 2) + 2) % 2, beta = ((sb.v % 2) + 2) % 2;
  int out = 1;
  if (alpha * beta == 1 && mod8(p) % 4 == 3) out = -out;
  if (beta == 1) out *= euler_unchecked(sa.num, p) * euler_unchecked(sa.den, p);
  if (alpha == 1) out *= euler_unchecked(sb.num, p) * euler_unchecked(sb.den, p);
  return out;
}

std::vector<PlaceQ> hilbert_support_candidates(const BigRational& a, const BigRational& b) {
  if (a == 0 || b == 0) throw MathError("hilbert: arguments must be nonzero");
  std::set<PlaceQ> places{PlaceQ::real(), PlaceQ::finite(2)};
  for (const BigInt* n : {&a.get_num(), &a.get_den(), &b.get_num(), &b.get_den()})
  {
    const FactoredRational f = factor_int(*n);
    for (const auto& [p, e] : f.factors()) places.insert(PlaceQ::finite(p));
  }
  return {places.begin(), places.end()};
}

std::map<PlaceQ, int> hilbert_all(const BigRational& a, const BigRational& b) {
  std::map<PlaceQ, int> out;
  for (const auto& v : hilbert_support_candidates(a, b)) out.emplace(v, hilbert(a, b, v));
  return out;
}

BigInt square_class_q(const BigRational& a) {
  if (a == 0) throw MathError("square_class_q: zero has no square class");
  return factor_rational(a).square_class();
}

bool rational_sqrt(const BigRational& a, BigRational& root) {
  if (sgn(a) < 0) return false;
  if (!mpz_perfect_square_p(a.get_num().get_mpz_t()) || !mpz_perfect_square_p(a.get_den().get_mpz_t())) return false;
  BigInt n, d;
  mpz_sqrt(n.get_mpz_t(), a.get_num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), a.get_den().get_mpz_t());
  root = BigRational(n, d);
  root.canonicalize();
  return true;
}

}  // namespace quatalg
