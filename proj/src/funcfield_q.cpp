#include "quatalg/funcfield_q.hpp"

#include <set>

#include "quatalg/errors.hpp"
#include "quatalg/factor_q.hpp"
#include "parallel.hpp"

namespace quatalg {

// ---------------------------------------------------------------------------
// FactoredFunc

FactoredFunc::FactoredFunc(FactoredRational constant, std::map<PolyQ, int> factors, Trusted)
    : constant_(std::move(constant)) {
  for (auto& [p, e] : factors)
    if (e != 0) factors_.emplace(p, e);
}

FactoredFunc::FactoredFunc(FactoredRational constant, std::map<PolyQ, int> factors)
    : FactoredFunc(std::move(constant), std::move(factors), Trusted{}) {
  for (const auto& [p, e] : factors_) {
    if (!p.is_monic() || !is_irreducible_q(p))
      throw MathError("factored function: " + to_string(p) + " is not monic irreducible");
  }
}

FactoredFunc FactoredFunc::from_poly(const PolyQ& f) {
  if (f.is_zero()) throw MathError("factored function: zero is not a unit of Q(x)");
  FactorizationQ fac = factor_poly_q(f);
  std::map<PolyQ, int> factors;
  for (auto& [p, e] : fac.factors) factors.emplace(p, e);
  return FactoredFunc(factor_rational(fac.unit), std::move(factors), Trusted{});
}

FactoredFunc FactoredFunc::from_rational(const BigRational& q) { return FactoredFunc(factor_rational(q), {}, Trusted{}); }

FactoredFunc FactoredFunc::parse(std::string_view text) {
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '/' && depth == 0) {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] == ' ') ++j;
      if (j < text.size() && text[j] == '(') {
        PolyQ num = parse_poly_q(text.substr(0, i));
        PolyQ den = parse_poly_q(text.substr(i + 1));
        if (den.is_zero()) throw ParseError("rational function with zero denominator");
        return from_poly(num) * from_poly(den).inverse();
      }
    }
  }
  return from_poly(parse_poly_q(text));
}

int FactoredFunc::valuation(const PolyQ& place) const {
  auto it = factors_.find(place);
  return it == factors_.end() ? 0 : it->second;
}

FactoredFunc FactoredFunc::operator*(const FactoredFunc& rhs) const {
  std::map<PolyQ, int> out = factors_;
  for (const auto& [p, e] : rhs.factors_) out[p] += e;
  return FactoredFunc(constant_ * rhs.constant_, std::move(out), Trusted{});
}

FactoredFunc FactoredFunc::inverse() const { return pow(-1); }

FactoredFunc FactoredFunc::pow(int e) const {
  std::map<PolyQ, int> out;
  for (const auto& [p, k] : factors_) out.emplace(p, k * e);
  return FactoredFunc(constant_.pow(e), std::move(out), Trusted{});
}

PolyQ FactoredFunc::numerator() const {
  PolyQ out = PolyQ::constant(constant_.value());
  for (const auto& [p, e] : factors_)
    if (e > 0) out *= quatalg::pow(p, static_cast<unsigned>(e));
  return out;
}

PolyQ FactoredFunc::denominator() const {
  PolyQ out = PolyQ::constant(1);
  for (const auto& [p, e] : factors_)
    if (e < 0) out *= quatalg::pow(p, static_cast<unsigned>(-e));
  return out;
}

bool FactoredFunc::is_unit_at(const BigRational& at) const {
  for (const auto& [p, e] : factors_)
    if (p(at) == 0) return false;
  return true;
}

BigRational FactoredFunc::operator()(const BigRational& at) const {
  BigRational out = constant_.value();
  for (const auto& [p, e] : factors_) {
    BigRational v = p(at);
    if (v == 0) throw MathError("factored function has a zero or pole at " + to_string(at));
    BigRational pe = 1;
    for (int i = 0; i < std::abs(e); ++i) pe *= v;
    out *= e > 0 ? pe : BigRational(1 / pe);
  }
  out.canonicalize();
  return out;
}

std::string FactoredFunc::str() const {
  PolyQ den = denominator();
  if (den.degree() == 0) return to_string(numerator());
  return "(" + to_string(numerator()) + ")/(" + to_string(den) + ")";
}

// ---------------------------------------------------------------------------
// Residues

namespace {

// Square-class representative of F / place^{v(F)} reduced mod place.
PolyQ unit_part_mod(const FactoredFunc& F, const PolyQ& place) {
  PolyQ acc = PolyQ::constant(BigRational(F.constant().square_class()));
  for (const auto& [p, e] : F.factors()) {
    if (p == place || e % 2 == 0) continue;
    acc = (acc * (p % place)) % place;
  }
  return acc;
}

const char* const kFaddeev =
    "Faddeev exact sequence 0 -> Br(Q) -> Br(Q(x)) -> sum_v Hom(G(v), Q/Z): residues at the finite places "
    "determine a class up to a constant class";
const char* const kSpecialization =
    "specialization at a point where all entries are units is a homomorphism that is the identity on constant "
    "classes";
const char* const kLocalGlobal = "Albert-Brauer-Hasse-Noether: a class over Q is determined by its local invariants";
const char* const kMaxSubfields =
    "over Q(x), quaternion division algebras with the same maximal subfields are isomorphic, so the predicate "
    "coincides with isomorphism";

}  // namespace

NumberFieldElem tame_symbol(const QuaternionFF& d, const PolyQ& place) {
  const int vf = d.f.valuation(place), vg = d.g.valuation(place);
  PolyQ value = PolyQ::constant((vf * vg) % 2 != 0 ? -1 : 1);
  if (vg % 2 != 0) value = (value * unit_part_mod(d.f, place)) % place;
  if (vf % 2 != 0) value = (value * unit_part_mod(d.g, place)) % place;
  NumberFieldElem t(place, value);
  if (t.is_zero()) throw MathError("tame symbol vanished mod " + to_string(place) + " (internal error)");
  return t;
}

ResidueCharacter residue_at(const QuaternionFF& d, const PolyQ& place, const SquareTestBudget& budget) {
  NumberFieldElem t = tame_symbol(d, place);
  ResidueCharacter r;
  r.place = place;
  r.symbol = t.value();
  r.certificate = is_square_in_number_field(t, budget);
  r.trivial = r.certificate.is_square;
  return r;
}

std::vector<PolyQ> candidate_places(const QuaternionFF& d) {
  std::set<PolyQ> places;
  for (const auto& [p, e] : d.f.factors()) places.insert(p);
  for (const auto& [p, e] : d.g.factors()) places.insert(p);
  return {places.begin(), places.end()};
}

std::vector<ResidueCharacter> residue_table(const QuaternionFF& d, const SquareTestBudget& budget) {
  const std::vector<PolyQ> places = candidate_places(d);
  std::vector<ResidueCharacter> out(places.size());
  detail::parallel_for(places.size(), [&](std::size_t i) { out[i] = residue_at(d, places[i], budget); });
  return out;
}

std::vector<ResidueCharacter> residue_table_serial(const QuaternionFF& d, const SquareTestBudget& budget) {
  std::vector<ResidueCharacter> out;
  for (const auto& place : candidate_places(d)) out.push_back(residue_at(d, place, budget));
  return out;
}

std::vector<PolyQ> ramification_set(const QuaternionFF& d, const SquareTestBudget& budget) {
  std::vector<PolyQ> out;
  for (auto& r : residue_table(d, budget))
    if (!r.trivial) out.push_back(r.place);
  return out;
}

QuaternionQ specialize(const QuaternionFF& d, const BigRational& at) {
  if (!d.f.is_unit_at(at) || !d.g.is_unit_at(at))
    throw MathError("specialize: an entry has a zero or pole at x = " + to_string(at) + "; choose another point");
  return QuaternionQ(d.f(at), d.g(at));
}

BigRational unit_point(const std::vector<const FactoredFunc*>& entries) {
  for (long k = 0;; ++k) {
    for (long a : {k, -k}) {
      if (k == 0 && a != 0) continue;
      bool ok = true;
      for (const FactoredFunc* e : entries) ok = ok && e->is_unit_at(BigRational(a));
      if (ok) return BigRational(a);
      if (k == 0) break;
    }
  }
}

IsomorphismVerdict is_isomorphic_qx(const QuaternionFF& d1, const QuaternionFF& d2, const SquareTestBudget& budget) {
  IsomorphismVerdict verdict;
  verdict.citations = {kFaddeev};

  std::set<PolyQ> place_set;
  for (const auto& p : candidate_places(d1)) place_set.insert(p);
  for (const auto& p : candidate_places(d2)) place_set.insert(p);
  const std::vector<PolyQ> places(place_set.begin(), place_set.end());

  // Characters agree iff the product of the two tame symbols is a square.
  std::vector<SquareClassVerdict> ratios(places.size());
  std::vector<NumberFieldElem> t1s, t2s;
  for (const auto& place : places) {
    t1s.push_back(tame_symbol(d1, place));
    t2s.push_back(tame_symbol(d2, place));
  }
  detail::parallel_for(places.size(), [&](std::size_t i) {
    ratios[i] = is_square_in_number_field(t1s[i] * t2s[i], budget);
  });
  for (std::size_t i = 0; i < places.size(); ++i) {
    if (!ratios[i].is_square) {
      verdict.isomorphic = false;
      verdict.residue_witness = ResidueMismatch{places[i], t1s[i].value(), t2s[i].value(), ratios[i]};
      return verdict;
    }
  }

  const BigRational at = unit_point({&d1.f, &d1.g, &d2.f, &d2.g});
  verdict.specialization_point = at;
  verdict.specialized1 = specialize(d1, at);
  verdict.specialized2 = specialize(d2, at);
  verdict.constant_difference = class_of_quaternion(*verdict.specialized1) + class_of_quaternion(*verdict.specialized2);
  verdict.isomorphic = verdict.constant_difference->is_zero();
  verdict.citations.push_back(kSpecialization);
  verdict.citations.push_back(kLocalGlobal);
  return verdict;
}

DivisionCertificate division_certificate(const QuaternionFF& d, const SquareTestBudget& budget) {
  DivisionCertificate cert;
  for (auto& r : residue_table(d, budget)) {
    if (!r.trivial) {
      cert.division = true;
      cert.ramified = std::move(r);
      return cert;
    }
  }
  const BigRational at = unit_point({&d.f, &d.g});
  cert.specialization_point = at;
  cert.constant_class = class_of_quaternion(specialize(d, at));
  cert.division = !cert.constant_class->is_zero();
  return cert;
}

MaximalSubfieldsVerdict same_maximal_subfields_qx(const QuaternionFF& d1, const QuaternionFF& d2,
                                                  const SquareTestBudget& budget) {
  int which = 1;
  for (const QuaternionFF* d : {&d1, &d2}) {
    DivisionCertificate cert = division_certificate(*d, budget);
    if (!cert.division) {
      QuaternionQ s = specialize(*d, *cert.specialization_point);
      throw MathError("algebra " + std::to_string(which) + " (" + d->f.str() + ", " + d->g.str() +
                      ") is not a division algebra: every residue is trivial and its specialization at x = " +
                      to_string(*cert.specialization_point) + ", (" + to_string(s.a) + ", " + to_string(s.b) +
                      "), is split at every place of Q");
    }
    ++which;
  }
  MaximalSubfieldsVerdict out;
  out.isomorphism = is_isomorphic_qx(d1, d2, budget);
  out.same = out.isomorphism.isomorphic;
  out.summary = out.same ? "same maximal subfields" : "distinct maximal-subfield sets";
  out.citations = out.isomorphism.citations;
  out.citations.push_back(kMaxSubfields);
  return out;
}

// ---------------------------------------------------------------------------
// Quadratic form check

RationalFunctionQ::RationalFunctionQ(PolyQ n, PolyQ d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw MathError("rational function with zero denominator");
  if (num.is_zero()) {
    den = PolyQ::constant(1);
    return;
  }
  PolyQ g = gcd(num, den);
  num = num / g;
  den = den / g;
  BigRational lc = den.leading();
  num *= BigRational(1 / lc);
  den *= BigRational(1 / lc);
}

RationalFunctionQ RationalFunctionQ::from(const FactoredFunc& f) { return {f.numerator(), f.denominator()}; }

RationalFunctionQ operator+(const RationalFunctionQ& a, const RationalFunctionQ& b) {
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

RationalFunctionQ operator-(const RationalFunctionQ& a, const RationalFunctionQ& b) {
  return {a.num * b.den - b.num * a.den, a.den * b.den};
}

RationalFunctionQ operator*(const RationalFunctionQ& a, const RationalFunctionQ& b) {
  return {a.num * b.num, a.den * b.den};
}

bool qform_represents(const QuaternionFF& d, const FactoredFunc& value, const RationalFunctionQ& s,
                      const RationalFunctionQ& t, const RationalFunctionQ& u) {
  if (s.is_zero() && t.is_zero() && u.is_zero()) throw MathError("qform_represents: (s, t, u) must be nonzero");
  const RationalFunctionQ f = RationalFunctionQ::from(d.f), g = RationalFunctionQ::from(d.g);
  const RationalFunctionQ q = f * s * s + g * t * t - f * g * u * u;
  return q == RationalFunctionQ::from(value);
}

}  // namespace quatalg
