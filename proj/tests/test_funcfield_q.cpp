#include <doctest.h>

#include "quatalg/errors.hpp"
#include "quatalg/funcfield_q.hpp"
#include "quatalg/properties.hpp"

using namespace quatalg;

namespace {

FactoredFunc F(const char* text) { return FactoredFunc::parse(text); }
QuaternionFF D(const char* f, const char* g) { return {F(f), F(g)}; }
const PolyQ X{0, 1};

}  // namespace

TEST_CASE("factored functions") {
  const FactoredFunc f = F("2*x^3 - 2*x");
  CHECK(f.constant().value() == 2);
  CHECK(f.valuation(X) == 1);
  CHECK(f.valuation(PolyQ{1, 1}) == 1);
  CHECK(f.numerator() == parse_poly_q("2*x^3-2*x"));

  const FactoredFunc r = F("(x+1)/(x^2)");
  CHECK(r.valuation(X) == -2);
  CHECK(r.denominator() == PolyQ{0, 0, 1});
  CHECK(FactoredFunc::parse(r.str()) == r);
  CHECK(r(BigRational(1)) == 2);
  CHECK_THROWS_AS(r(BigRational(0)), MathError);
  CHECK((r * r.inverse()).is_constant());

  CHECK_THROWS_AS(F("0"), MathError);
  CHECK_THROWS_AS(F("x^"), ParseError);
  CHECK_THROWS_AS(FactoredFunc(FactoredRational{}, {{PolyQ{-1, 0, 1}, 1}}), MathError);
}

TEST_CASE("residue_at examples") {
  auto r1 = residue_at(D("x", "3"), X);
  CHECK_FALSE(r1.trivial);
  CHECK(r1.certificate.verified);

  auto r2 = residue_at(D("x", "x"), X);
  CHECK_FALSE(r2.trivial);
  CHECK(r2.symbol == PolyQ{-1});

  auto r3 = residue_at(D("5", "7"), X);
  CHECK(r3.trivial);

  auto r4 = residue_at(D("x^2+1", "2"), PolyQ{1, 0, 1});
  CHECK_FALSE(r4.trivial);
  CHECK(r4.certificate.witness.has_value());
}

TEST_CASE("ramification sets") {
  auto s1 = ramification_set(D("x", "3"));
  CHECK(s1 == std::vector<PolyQ>{X});
  CHECK(ramification_set(D("-1", "-1")).empty());
  // (x, 3x^2): symbol at (x) is 3 up to squares.
  CHECK(ramification_set(D("x", "3*x^2")) == std::vector<PolyQ>{X});
  // (x, x^2) is (x, 1), split.
  CHECK(ramification_set(D("x", "x^2")).empty());
}

TEST_CASE("specialize") {
  auto q = specialize(D("x+1", "2*x-1"), 1);
  CHECK(q == QuaternionQ(2, 1));
  CHECK(class_of_quaternion(q).is_zero());
  CHECK_THROWS_AS(specialize(D("x", "3"), 0), MathError);
  CHECK(specialize(D("-1", "-1"), 17) == QuaternionQ(-1, -1));
}

TEST_CASE("is_isomorphic_qx examples") {
  auto v1 = is_isomorphic_qx(D("x", "3"), D("x", "12"));
  CHECK(v1.isomorphic);
  REQUIRE(v1.specialization_point);
  CHECK(*v1.specialization_point == 1);
  CHECK(v1.constant_difference->is_zero());

  auto v2 = is_isomorphic_qx(D("x", "3"), D("x", "5"));
  CHECK_FALSE(v2.isomorphic);
  REQUIRE(v2.residue_witness);
  CHECK(v2.residue_witness->place == X);
  CHECK(v2.residue_witness->ratio_certificate.verified);

  auto v3 = is_isomorphic_qx(D("-1", "-1"), D("2", "5"));
  CHECK_FALSE(v3.isomorphic);
  CHECK_FALSE(v3.residue_witness);
  REQUIRE(v3.constant_difference);
  std::map<PlaceQ, BigRational> expected{{PlaceQ::finite(5), BigRational(1, 2)}, {PlaceQ::real(), BigRational(1, 2)}};
  CHECK(*v3.constant_difference == BrauerClassQ(expected));
  CHECK_FALSE(v3.citations.empty());
}

TEST_CASE("same_maximal_subfields_qx") {
  CHECK(same_maximal_subfields_qx(D("x", "3"), D("x", "12")).same);
  CHECK_FALSE(same_maximal_subfields_qx(D("x", "3"), D("x", "5")).same);
  CHECK_THROWS_WITH_AS(same_maximal_subfields_qx(D("1", "x"), D("x", "3")),
                       doctest::Contains("not a division algebra"), MathError);
  auto cert = division_certificate(D("-1", "-1"));
  CHECK(cert.division);
  CHECK(cert.constant_class.has_value());
}

TEST_CASE("qform_represents") {
  const QuaternionFF d = D("x", "3");
  const RationalFunctionQ one(PolyQ{1}), zero;
  CHECK(qform_represents(d, F("x"), one, zero, zero));
  CHECK(qform_represents(d, F("3"), zero, one, zero));
  CHECK(qform_represents(d, F("x+3"), one, one, zero));
  CHECK(qform_represents(d, F("-3*x"), zero, zero, one));
  CHECK_FALSE(qform_represents(d, F("x+1"), one, one, zero));
  CHECK_THROWS_AS(qform_represents(d, F("x"), zero, zero, zero), MathError);
}

TEST_CASE("residue laws on random samples") {
  gen::Rng rng(31);
  auto random_func = [&](int max_degree) {
    return FactoredFunc::from_poly(gen::poly_q(rng, static_cast<int>(gen::integer(rng, 0, max_degree)), 4));
  };
  for (int i = 0; i < 25; ++i) {
    const FactoredFunc f = random_func(2), g1 = random_func(2), g2 = random_func(2);
    const QuaternionFF d1{f, g1}, d2{f, g2}, d12{f, g1 * g2}, swapped{g1, f};
    for (const auto& place : candidate_places(d12)) {
      // bimultiplicativity: class of t(f, g1 g2) = class of t(f, g1) t(f, g2)
      const NumberFieldElem lhs = tame_symbol(d12, place);
      const NumberFieldElem rhs = tame_symbol(d1, place) * tame_symbol(d2, place);
      CHECK(is_square_in_number_field(lhs * rhs).is_square);
    }
    for (const auto& place : candidate_places(d1))
      CHECK(residue_at(d1, place).trivial == residue_at(swapped, place).trivial);

    const auto par = residue_table(d1), ser = residue_table_serial(d1);
    REQUIRE(par.size() == ser.size());
    for (std::size_t k = 0; k < par.size(); ++k) {
      CHECK(par[k].place == ser[k].place);
      CHECK(par[k].symbol == ser[k].symbol);
      CHECK(par[k].trivial == ser[k].trivial);
    }
  }
}

TEST_CASE("constant classes are unramified and specialize to themselves") {
  gen::Rng rng(41);
  for (int i = 0; i < 20; ++i) {
    const BigRational a = gen::nonzero_rational(rng, 30), b = gen::nonzero_rational(rng, 30);
    const QuaternionFF c{FactoredFunc::from_rational(a), FactoredFunc::from_rational(b)};
    const PolyQ place = gen::irreducible_q(rng, static_cast<int>(gen::integer(rng, 1, 3)), 5);
    CHECK(residue_at(c, place).trivial);
    CHECK(class_of_quaternion(specialize(c, gen::integer(rng, -9, 9))) == class_of_quaternion(QuaternionQ(a, b)));
  }
}

TEST_CASE("isomorphic pairs have equal specializations at common unit points") {
  gen::Rng rng(43);
  for (int i = 0; i < 15; ++i) {
    const FactoredFunc f = FactoredFunc::from_poly(gen::poly_q(rng, 1, 4));
    const FactoredFunc g = FactoredFunc::from_poly(gen::poly_q(rng, 1, 4));
    const FactoredFunc h = FactoredFunc::from_poly(gen::poly_q(rng, 1, 3));
    const QuaternionFF d1{f, g}, d2{f, g * h.pow(2)};
    REQUIRE(is_isomorphic_qx(d1, d2).isomorphic);
    for (long a = -4; a <= 4; ++a) {
      if (!f.is_unit_at(a) || !g.is_unit_at(a) || !h.is_unit_at(a)) continue;
      CHECK(class_of_quaternion(specialize(d1, a)) == class_of_quaternion(specialize(d2, a)));
    }
  }
}
