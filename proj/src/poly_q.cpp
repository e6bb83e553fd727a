#include "quatalg/poly_q.hpp"

#include <cctype>

#include "quatalg/errors.hpp"

namespace quatalg {

PolyQ::PolyQ(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

PolyQ::PolyQ(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

PolyQ PolyQ::constant(const BigRational& c) { return PolyQ(std::vector<BigRational>{c}); }

PolyQ PolyQ::x() { return PolyQ{0, 1}; }

PolyQ PolyQ::monomial(const BigRational& c, int degree) {
  std::vector<BigRational> v(static_cast<std::size_t>(degree) + 1, BigRational(0));
  v.back() = c;
  return PolyQ(std::move(v));
}

void PolyQ::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational PolyQ::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const BigRational& PolyQ::leading() const {
  if (coeffs_.empty()) throw MathError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

PolyQ PolyQ::monic() const {
  if (is_zero()) return *this;
  PolyQ out = *this;
  BigRational inv = 1 / leading();
  return out *= inv;
}

BigRational PolyQ::operator()(const BigRational& at) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

PolyQ PolyQ::operator-() const {
  PolyQ out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

PolyQ& PolyQ::operator+=(const PolyQ& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigRational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigRational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const PolyQ& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigRational> out(coeffs_.size() + rhs.coeffs_.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const BigRational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

std::strong_ordering operator<=>(const PolyQ& a, const PolyQ& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    int c = cmp(a.coeffs_[static_cast<std::size_t>(i)], b.coeffs_[static_cast<std::size_t>(i)]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  if (a.degree() < b.degree()) return {PolyQ(), a};
  std::vector<BigRational> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<BigRational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, BigRational(0));
  const BigRational inv_lead = 1 / b.leading();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    BigRational q = rem[static_cast<std::size_t>(i)] * inv_lead;
    if (q == 0) continue;
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {PolyQ(std::move(quo)), PolyQ(std::move(rem))};
}

PolyQ operator/(const PolyQ& a, const PolyQ& b) { return divmod(a, b).first; }
PolyQ operator%(const PolyQ& a, const PolyQ& b) { return divmod(a, b).second; }

PolyQ gcd(const PolyQ& a, const PolyQ& b) {
  PolyQ r0 = a, r1 = b;
  while (!r1.is_zero()) {
    PolyQ r2 = r0 % r1;
    r0 = std::move(r1);
    r1 = std::move(r2).monic();
  }
  return r0.monic();
}

XgcdQ xgcd(const PolyQ& a, const PolyQ& b) {
  PolyQ r0 = a, r1 = b;
  PolyQ s0 = PolyQ::constant(1), s1;
  PolyQ t0, t1 = PolyQ::constant(1);
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    PolyQ s2 = s0 - q * s1;
    PolyQ t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  BigRational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

BigRational resultant(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  if (b.degree() == 0) {
    BigRational out = 1;
    for (int i = 0; i < a.degree(); ++i) out *= b.leading();
    return out;
  }
  if (a.degree() == 0) {
    BigRational out = 1;
    for (int i = 0; i < b.degree(); ++i) out *= a.leading();
    return out;
  }
  // Res(A,B) = (-1)^{deg A deg B} lc(B)^{deg A - deg R} Res(B, R), R = A mod B.
  PolyQ r = a % b;
  if (r.is_zero()) return 0;
  BigRational out = resultant(b, r);
  for (int i = 0; i < a.degree() - r.degree(); ++i) out *= b.leading();
  if ((a.degree() * b.degree()) % 2 != 0) out = -out;
  return out;
}

PolyQ derivative(const PolyQ& a) {
  if (a.degree() < 1) return PolyQ();
  std::vector<BigRational> d(static_cast<std::size_t>(a.degree()));
  for (int i = 1; i <= a.degree(); ++i) d[static_cast<std::size_t>(i - 1)] = a.coeffs()[static_cast<std::size_t>(i)] * i;
  return PolyQ(std::move(d));
}

PolyQ pow(const PolyQ& a, unsigned e) {
  PolyQ out = PolyQ::constant(1), base = a;
  while (e != 0) {
    if (e & 1U) out *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return out;
}

PolyQ primitive_part(const PolyQ& a) {
  if (a.is_zero()) return a;
  BigInt den = 1;
  for (const auto& c : a.coeffs()) den = lcm(den, c.get_den());
  std::vector<BigRational> ints;
  BigInt content = 0;
  for (const auto& c : a.coeffs()) {
    BigInt v = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.emplace_back(v);
  }
  if (sgn(a.leading()) < 0) content = -content;
  for (auto& c : ints) c /= content;
  return PolyQ(std::move(ints));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, char var) : text_(text), var_(var) {}

  PolyQ parse() {
    PolyQ p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(text_) + "': " + what + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  PolyQ expr() {
    PolyQ acc;
    bool first = true;
    for (;;) {
      skip_ws();
      int sign = 1;
      if (accept('+')) {
      } else if (accept('-')) {
        sign = -1;
      } else if (!first) {
        break;
      }
      PolyQ t = term();
      if (sign < 0) t = -t;
      acc += t;
      first = false;
    }
    return acc;
  }

  PolyQ term() {
    PolyQ acc = power();
    for (;;) {
      if (accept('*')) {
        acc *= power();
      } else if (accept('/')) {
        PolyQ d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc *= 1 / d.leading();
      } else {
        skip_ws();
        // Implicit multiplication: "3x", "2(x+1)", "x(x-1)".
        if (pos_ < text_.size() && (text_[pos_] == var_ || text_[pos_] == '(' )) {
          acc *= power();
        } else {
          break;
        }
      }
    }
    return acc;
  }

  PolyQ power() {
    PolyQ base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 4096) fail("exponent too large");
      base = pow(base, static_cast<unsigned>(e));
    }
    return base;
  }

  PolyQ primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      PolyQ inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == var_) {
      ++pos_;
      return PolyQ::x();
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return PolyQ::constant(BigRational(BigInt(std::string(text_.substr(start, pos_ - start)))));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  char var_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyQ parse_poly_q(std::string_view text, char var) { return PolyParser(text, var).parse(); }

std::string to_string(const PolyQ& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const BigRational& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    BigRational mag = abs(c);
    if (sgn(c) < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (i == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace quatalg
