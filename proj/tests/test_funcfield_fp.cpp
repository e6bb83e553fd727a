#include <doctest.h>

#include "quatalg/errors.hpp"
#include "quatalg/funcfield_fp.hpp"
#include "quatalg/properties.hpp"

using namespace quatalg;

namespace {

QuaternionFFp D(const char* f, const char* g, std::uint64_t p) {
  return {FactoredFuncFp::parse(f, p), FactoredFuncFp::parse(g, p)};
}

PlaceFFp place(const char* m, std::uint64_t p) { return PlaceFFp::parse(m, p); }

// Searches f X^2 + g Y^2 = Z^2 with X, Y, Z of degree <= 1, not all zero.
bool conic_has_small_point(const QuaternionFFp& d) {
  const std::uint64_t p = d.f.characteristic();
  const PolyFp fn = d.f.numerator() * d.g.denominator(), gn = d.g.numerator() * d.f.denominator();
  const PolyFp den = d.f.denominator() * d.g.denominator();
  std::vector<PolyFp> small;
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b) small.push_back(PolyFp(p, {static_cast<long>(a), static_cast<long>(b)}));
  for (const auto& X : small)
    for (const auto& Y : small)
      for (const auto& Z : small) {
        if (X.is_zero() && Y.is_zero() && Z.is_zero()) continue;
        if (fn * X * X + gn * Y * Y == den * Z * Z) return true;
      }
  return false;
}

}  // namespace

TEST_CASE("residue_fp examples over F_5") {
  CHECK(residue_fp(D("x", "x", 5), place("x", 5)) == 1);
  CHECK(residue_fp(D("x", "2", 5), place("x", 5)) == -1);
  CHECK(residue_fp(D("x", "2", 5), PlaceFFp::infinity()) == -1);
  CHECK_THROWS_AS(D("x", "2", 2), MathError);
  CHECK_THROWS_AS(D("x", "2", 9), MathError);
}

TEST_CASE("class_fp examples") {
  QuatClassFp c = class_fp(D("x", "2", 5));
  CHECK(c.residues == std::map<PlaceFFp, int>{{place("x", 5), -1}, {PlaceFFp::infinity(), -1}});
  CHECK(class_fp(D("2", "3", 5)).is_zero());
  // (x, x+1): symbols 1 at (x), -1 = 2^2 at (x+1), -1 at infinity; all squares mod 5.
  CHECK(class_fp(D("x", "x+1", 5)).is_zero());
  // Over F_3, -1 is a nonsquare, so (x, x+1) ramifies at (x+1) and infinity.
  QuatClassFp c3 = class_fp(D("x", "x+1", 3));
  CHECK(c3.residues == std::map<PlaceFFp, int>{{place("x+1", 3), -1}, {PlaceFFp::infinity(), -1}});
}

TEST_CASE("is_isomorphic_fpx examples") {
  CHECK(is_isomorphic_fpx(D("x", "2", 5), D("x", "8", 5)).isomorphic);
  auto v = is_isomorphic_fpx(D("x", "2", 5), D("x", "1", 5));
  CHECK_FALSE(v.isomorphic);
  REQUIRE(v.witness);
  CHECK(*v.witness == place("x", 5));
  CHECK(is_isomorphic_fpx(D("x^2+x+1", "x-2", 7), D("x^2+x+1", "x-2", 7)).isomorphic);
  CHECK_THROWS_AS(is_isomorphic_fpx(D("x", "2", 5), D("x", "2", 7)), MathError);
}

TEST_CASE("places") {
  CHECK(place("x", 5) < PlaceFFp::infinity());
  CHECK(place("inf", 5).is_infinity());
  CHECK(place("x^2+2", 5).str() == "x^2+2");
  CHECK_THROWS_AS(place("x^2+1", 5), MathError);  // reducible mod 5
  CHECK_THROWS_AS(place("2*x+1", 5), MathError);  // not monic
}

TEST_CASE("degree cap") {
  CHECK_THROWS_AS(FactoredFuncFp::from_poly(PolyFp::x(5) * PolyFp(5, std::vector<std::uint64_t>(65, 1))), MathError);
}

TEST_CASE("residue laws on random samples") {
  gen::Rng rng(77);
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 101ULL}) {
    for (int i = 0; i < 30; ++i) {
      const FactoredFuncFp f = FactoredFuncFp::from_poly(gen::poly_fp(rng, p, 4));
      const FactoredFuncFp g1 = FactoredFuncFp::from_poly(gen::poly_fp(rng, p, 4));
      const FactoredFuncFp g2 = FactoredFuncFp::from_poly(gen::poly_fp(rng, p, 4));
      const QuaternionFFp d1{f, g1}, d2{f, g2}, d12{f, g1 * g2};
      int product = 1;
      for (const auto& v : candidate_places_fp(d12)) {
        CHECK(residue_fp(d12, v) == residue_fp(d1, v) * residue_fp(d2, v));
        CHECK(residue_fp(d12, v) == residue_fp(QuaternionFFp{g1 * g2, f}, v));
        product *= residue_fp(d12, v);
      }
      CHECK(product == 1);
      CHECK(class_fp(d12) == class_fp_serial(d12));
      const FactoredFuncFp h = FactoredFuncFp::from_poly(gen::poly_fp(rng, p, 3));
      CHECK(class_fp(QuaternionFFp{f, g1 * h.pow(2)}) == class_fp(d1));
    }
  }
}

TEST_CASE("small conic points only occur for split classes") {
  gen::Rng rng(5);
  int found = 0;
  for (int i = 0; i < 50; ++i) {
    const QuaternionFFp d{FactoredFuncFp::from_poly(gen::poly_fp(rng, 5, 1)),
                          FactoredFuncFp::from_poly(gen::poly_fp(rng, 5, 1))};
    if (conic_has_small_point(d)) {
      ++found;
      CHECK(class_fp(d).is_zero());
    }
  }
  CHECK(found > 0);
}
