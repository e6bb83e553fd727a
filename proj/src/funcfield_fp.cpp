#include "quatalg/funcfield_fp.hpp"

#include <set>
#include <stdexcept>

#include "quatalg/errors.hpp"
#include "parallel.hpp"

namespace quatalg {

void check_characteristic(std::uint64_t p) {
  if (p == 2) throw MathError("characteristic 2 is not supported");
  if (p >= (1ULL << 31) || !is_prime_u64(p))
    throw MathError("characteristic must be an odd prime below 2^31, got " + std::to_string(p));
}

FactoredFuncFp::FactoredFuncFp(std::uint64_t p, std::uint64_t constant, std::map<PolyFp, int> factors)
    : p_(p), constant_(constant % p) {
  check_characteristic(p);
  if (constant_ == 0) throw MathError("factored function: zero constant");
  for (auto& [m, e] : factors) {
    if (e == 0) continue;
    if (m.modulus() != p) throw MathError("factored function: factor over the wrong field");
    if (m.degree() < 1 || m.leading() != 1 || !is_irreducible(m))
      throw MathError("factored function: " + to_string(m) + " is not monic irreducible");
    factors_.emplace(m, e);
  }
}

FactoredFuncFp FactoredFuncFp::from_poly(const PolyFp& f) {
  const std::uint64_t p = f.modulus();
  check_characteristic(p);
  if (f.is_zero()) throw MathError("factored function: zero is not a unit of F_p(x)");
  if (f.degree() > kMaxDegreeFp)
    throw MathError("degree " + std::to_string(f.degree()) + " exceeds the cap of " + std::to_string(kMaxDegreeFp));
  FactoredFuncFp out(p);
  if (f.degree() == 0) {
    out.constant_ = f.leading();
    return out;
  }
  FactorizationFp fac = factor_poly_fp(f);
  out.constant_ = fac.unit;
  for (auto& [m, e] : fac.factors) out.factors_.emplace(m, e);
  return out;
}

FactoredFuncFp FactoredFuncFp::parse(std::string_view text, std::uint64_t p) {
  check_characteristic(p);
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == '/' && depth == 0) {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] == ' ') ++j;
      if (j < text.size() && text[j] == '(') {
        PolyFp den = parse_poly_fp(text.substr(i + 1), p);
        if (den.is_zero()) throw ParseError("rational function with zero denominator");
        return from_poly(parse_poly_fp(text.substr(0, i), p)) * from_poly(den).pow(-1);
      }
    }
  }
  return from_poly(parse_poly_fp(text, p));
}

int FactoredFuncFp::valuation(const PolyFp& place) const {
  auto it = factors_.find(place);
  return it == factors_.end() ? 0 : it->second;
}

int FactoredFuncFp::degree() const {
  int d = 0;
  for (const auto& [m, e] : factors_) d += e * m.degree();
  return d;
}

FactoredFuncFp FactoredFuncFp::operator*(const FactoredFuncFp& rhs) const {
  if (p_ != rhs.p_) throw MathError("factored function: characteristics differ");
  FactoredFuncFp out(p_);
  out.constant_ = fp::mul(constant_, rhs.constant_, p_);
  std::map<PolyFp, int> sum = factors_;
  for (const auto& [m, e] : rhs.factors_) sum[m] += e;
  for (auto& [m, e] : sum)
    if (e != 0) out.factors_.emplace(m, e);
  return out;
}

FactoredFuncFp FactoredFuncFp::pow(int e) const {
  FactoredFuncFp out(p_);
  const std::uint64_t base = e < 0 ? fp::inv(constant_, p_) : constant_;
  out.constant_ = fp::pow(base, static_cast<std::uint64_t>(e < 0 ? -static_cast<long>(e) : e), p_);
  if (e != 0)
    for (const auto& [m, k] : factors_) out.factors_.emplace(m, k * e);
  return out;
}

PolyFp FactoredFuncFp::numerator() const {
  PolyFp out = PolyFp::constant(p_, constant_);
  for (const auto& [m, e] : factors_)
    for (int i = 0; i < e; ++i) out *= m;
  return out;
}

PolyFp FactoredFuncFp::denominator() const {
  PolyFp out = PolyFp::constant(p_, 1);
  for (const auto& [m, e] : factors_)
    for (int i = 0; i < -e; ++i) out *= m;
  return out;
}

std::string FactoredFuncFp::str() const {
  PolyFp den = denominator();
  if (den.degree() == 0) return to_string(numerator());
  return "(" + to_string(numerator()) + ")/(" + to_string(den) + ")";
}

PlaceFFp PlaceFFp::finite(const PolyFp& m) {
  if (m.degree() < 1 || m.leading() != 1 || !is_irreducible(m))
    throw MathError("place: " + to_string(m) + " is not monic irreducible");
  PlaceFFp out;
  out.modulus_ = m;
  return out;
}

PlaceFFp PlaceFFp::parse(std::string_view text, std::uint64_t p) {
  if (text == "inf" || text == "oo" || text == "infinity") return infinity();
  return finite(parse_poly_fp(text, p));
}

std::string PlaceFFp::str() const { return is_infinity() ? "inf" : to_string(*modulus_); }

std::strong_ordering operator<=>(const PlaceFFp& a, const PlaceFFp& b) {
  if (a.is_infinity() || b.is_infinity()) return a.is_infinity() <=> b.is_infinity();
  return *a.modulus_ <=> *b.modulus_;
}

namespace {

// Unit part of F at a finite place, up to squares, reduced mod the place.
PolyFp unit_part_mod(const FactoredFuncFp& F, const PolyFp& place) {
  PolyFp acc = PolyFp::constant(F.characteristic(), F.constant());
  for (const auto& [m, e] : F.factors()) {
    if (m == place || e % 2 == 0) continue;
    acc = mulmod(acc, m, place);
  }
  return acc;
}

}  // namespace

int residue_fp(const QuaternionFFp& d, const PlaceFFp& v) {
  const std::uint64_t p = d.f.characteristic();
  check_characteristic(p);
  if (d.g.characteristic() != p) throw MathError("quaternion entries over different fields");

  if (v.is_infinity()) {
    // Monic factors: the leading-term ratio at infinity is the constant.
    const int vf = -d.f.degree(), vg = -d.g.degree();
    std::uint64_t t = (vf * vg) % 2 != 0 ? p - 1 : 1;
    if (vg % 2 != 0) t = fp::mul(t, d.f.constant(), p);
    if (vf % 2 != 0) t = fp::mul(t, d.g.constant(), p);
    return fp::euler(t, p);
  }

  const PolyFp& place = v.modulus();
  const int vf = d.f.valuation(place), vg = d.g.valuation(place);
  PolyFp t = PolyFp::constant(p, (vf * vg) % 2 != 0 ? p - 1 : 1);
  if (vg % 2 != 0) t = mulmod(t, unit_part_mod(d.f, place), place);
  if (vf % 2 != 0) t = mulmod(t, unit_part_mod(d.g, place), place);
  const int r = euler_criterion(t, place);
  if (r == 0) throw std::logic_error("tame symbol vanished at " + v.str());
  return r;
}

std::vector<PlaceFFp> candidate_places_fp(const QuaternionFFp& d) {
  std::set<PlaceFFp> places;
  for (const auto* F : {&d.f, &d.g})
    for (const auto& [m, e] : F->factors()) places.insert(PlaceFFp::finite(m));
  places.insert(PlaceFFp::infinity());
  return {places.begin(), places.end()};
}

namespace {

QuatClassFp assemble(const QuaternionFFp& d, const std::vector<PlaceFFp>& places, const std::vector<int>& values) {
  QuatClassFp out;
  out.characteristic = d.f.characteristic();
  int product = 1;
  for (std::size_t i = 0; i < places.size(); ++i) {
    product *= values[i];
    if (values[i] == -1) out.residues.emplace(places[i], -1);
  }
  if (product != 1) throw std::logic_error("residue product is -1 for (" + d.f.str() + ", " + d.g.str() + ")");
  return out;
}

}  // namespace

QuatClassFp class_fp(const QuaternionFFp& d) {
  const std::vector<PlaceFFp> places = candidate_places_fp(d);
  std::vector<int> values(places.size());
  detail::parallel_for(places.size(), [&](std::size_t i) { values[i] = residue_fp(d, places[i]); });
  return assemble(d, places, values);
}

QuatClassFp class_fp_serial(const QuaternionFFp& d) {
  const std::vector<PlaceFFp> places = candidate_places_fp(d);
  std::vector<int> values;
  for (const auto& v : places) values.push_back(residue_fp(d, v));
  return assemble(d, places, values);
}

IsomorphismVerdictFp is_isomorphic_fpx(const QuaternionFFp& d1, const QuaternionFFp& d2) {
  if (d1.f.characteristic() != d2.f.characteristic())
    throw MathError("characteristic mismatch: " + std::to_string(d1.f.characteristic()) + " vs " +
                    std::to_string(d2.f.characteristic()));
  IsomorphismVerdictFp out;
  out.class1 = class_fp(d1);
  out.class2 = class_fp(d2);
  out.isomorphic = out.class1 == out.class2;
  if (!out.isomorphic) {
    std::set<PlaceFFp> places;
    for (const auto& [v, r] : out.class1.residues) places.insert(v);
    for (const auto& [v, r] : out.class2.residues) places.insert(v);
    for (const auto& v : places) {
      if (out.class1.residues.count(v) != out.class2.residues.count(v)) {
        out.witness = v;
        break;
      }
    }
  }
  return out;
}

}  // namespace quatalg
