#include <doctest.h>

#include <algorithm>
#include <set>

#include "quatalg/errors.hpp"
#include "quatalg/factor_q.hpp"
#include "quatalg/poly_fp.hpp"
#include "quatalg/poly_q.hpp"
#include "quatalg/properties.hpp"

using namespace quatalg;

namespace {

std::vector<std::pair<PolyQ, int>> pairs(const FactorizationQ& f) {
  std::vector<std::pair<PolyQ, int>> out;
  for (const auto& e : f.factors) out.emplace_back(e.factor, e.multiplicity);
  return out;
}

}  // namespace

TEST_CASE("polynomial parsing and printing") {
  PolyQ f = parse_poly_q("3*x^2 - 1/2*x + 7");
  CHECK(f == PolyQ({BigRational(7), BigRational(-1, 2), BigRational(3)}));
  CHECK(to_string(f) == "3*x^2-1/2*x+7");
  CHECK(parse_poly_q(to_string(f)) == f);
  CHECK(parse_poly_q("(x+1)^2") == PolyQ{1, 2, 1});
  CHECK(parse_poly_q("2x(x-1)") == PolyQ{0, -2, 2});
  CHECK(parse_poly_q("0").is_zero());
  CHECK_THROWS_AS(parse_poly_q("x^"), ParseError);
  CHECK_THROWS_AS(parse_poly_q("1/x"), ParseError);
  CHECK_THROWS_AS(parse_poly_q("y+1"), ParseError);
}

TEST_CASE("gcd, divmod, resultant") {
  CHECK(gcd(PolyQ{-1, 0, 1}, PolyQ{-1, 1}) == PolyQ{-1, 1});
  auto [q, r] = divmod(PolyQ{1, 0, 1}, PolyQ{0, 1});
  CHECK(q == PolyQ{0, 1});
  CHECK(r == PolyQ{1});
  CHECK(resultant(PolyQ{1, 0, 1}, PolyQ{-2, 1}) == 5);
  CHECK_THROWS_AS(divmod(PolyQ{1, 1}, PolyQ{}), MathError);

  gen::Rng rng(3);
  for (int i = 0; i < 60; ++i) {
    PolyQ a = gen::poly_q(rng, static_cast<int>(gen::integer(rng, 1, 3)), 3);
    PolyQ b = gen::poly_q(rng, static_cast<int>(gen::integer(rng, 1, 3)), 3);
    CHECK((resultant(a, b) == 0) == (gcd(a, b).degree() > 0));
    auto x = xgcd(a, b);
    CHECK(x.s * a + x.t * b == x.g);
  }
}

TEST_CASE("factor_poly_q examples") {
  auto f1 = factor_poly_q(PolyQ{-1, 0, 1});
  CHECK(f1.unit == 1);
  CHECK(pairs(f1) == std::vector<std::pair<PolyQ, int>>{{PolyQ{-1, 1}, 1}, {PolyQ{1, 1}, 1}});

  auto f2 = factor_poly_q(PolyQ{1, 0, 0, 0, 1});
  CHECK(pairs(f2) == std::vector<std::pair<PolyQ, int>>{{PolyQ{1, 0, 0, 0, 1}, 1}});

  auto f3 = factor_poly_q(PolyQ{0, 2, 2});
  CHECK(f3.unit == 2);
  CHECK(pairs(f3) == std::vector<std::pair<PolyQ, int>>{{PolyQ{0, 1}, 1}, {PolyQ{1, 1}, 1}});

  CHECK_THROWS_AS(factor_poly_q(PolyQ{}), MathError);
  CHECK_THROWS_AS(factor_poly_q(pow(PolyQ{1, 1}, 25)), MathError);
  CHECK(factor_poly_q(pow(PolyQ{1, 1}, 25), FactorOptions{30}).factors.size() == 1);
}

TEST_CASE("factor_poly_q recombination stress") {
  // x^8 - 1 style inputs split into many modular factors.
  auto f = factor_poly_q(parse_poly_q("x^16-1"));
  CHECK(f.factors.size() == 5);
  CHECK(f.expand() == parse_poly_q("x^16-1"));

  gen::Rng rng(11);
  for (int i = 0; i < 25; ++i) {
    const int k = static_cast<int>(gen::integer(rng, 4, 6));
    PolyQ product = PolyQ::constant(1);
    std::vector<PolyQ> parts;
    for (int j = 0; j < k; ++j) {
      parts.push_back(gen::irreducible_q(rng, static_cast<int>(gen::integer(rng, 1, 3)), 4));
      product *= parts.back();
    }
    auto fac = factor_poly_q(product);
    CHECK(fac.expand() == product);
    int total = 0;
    for (const auto& e : fac.factors) {
      total += e.multiplicity;
      // Claimed-irreducible factors of degree <= 3 have no rational root among +-divisors.
      if (e.factor.degree() >= 2 && e.factor.degree() <= 3) {
        PolyQ z = primitive_part(e.factor);
        for (long c = -60; c <= 60; ++c)
          for (long d = 1; d <= 12; ++d) CHECK(z(BigRational(c, d)) != 0);
      }
    }
    CHECK(total == k);
  }
}

TEST_CASE("factor_poly_fp examples") {
  auto a = factor_poly_fp(PolyFp(5, {1, 0, 1}));
  REQUIRE(a.factors.size() == 2);
  CHECK(a.factors[0].factor == PolyFp(5, {2, 1}));
  CHECK(a.factors[1].factor == PolyFp(5, {3, 1}));

  auto b = factor_poly_fp(PolyFp(3, {1, 0, 1}));
  REQUIRE(b.factors.size() == 1);
  CHECK(b.factors[0].factor == PolyFp(3, {1, 0, 1}));

  auto c = factor_poly_fp(PolyFp(7, {0, 0, 0, 1}));
  REQUIRE(c.factors.size() == 1);
  CHECK(c.factors[0].multiplicity == 3);

  CHECK_THROWS_AS(factor_poly_fp(PolyFp(5)), MathError);
  CHECK_THROWS_AS(factor_poly_fp(PolyFp(2, {1, 1})), MathError);
}

TEST_CASE("factor_poly_fp products and irreducibility") {
  gen::Rng rng(5);
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 1000003ULL}) {
    for (int i = 0; i < 20; ++i) {
      PolyFp f = gen::poly_fp(rng, p, 12);
      if (f.degree() < 1) continue;
      auto fac = factor_poly_fp(f);
      PolyFp prod = PolyFp::constant(p, 1);
      for (const auto& e : fac.factors) {
        CHECK(is_irreducible(e.factor));
        for (int k = 0; k < e.multiplicity; ++k) prod *= e.factor;
      }
      CHECK(prod == f.monic());
      CHECK(fac.unit == f.leading());
    }
  }
}

TEST_CASE("residue-field helpers") {
  std::mt19937_64 rng(1);
  const PolyFp m(7, {1, 0, 1});  // F_49
  for (std::uint64_t a = 1; a < 7; ++a) {
    PolyFp c = PolyFp::constant(7, a);
    CHECK(euler_criterion(c, m) == 1);  // every element of F_7 is a square in F_49
    PolyFp root;
    REQUIRE(sqrt_mod(c, m, root, rng));
    CHECK(mulmod(root, root, m) == c);
  }
  // Euler's criterion against brute-force squaring of all 49 elements.
  std::set<PolyFp> squares;
  for (std::uint64_t u = 0; u < 7; ++u)
    for (std::uint64_t v = 0; v < 7; ++v) {
      PolyFp e(7, {static_cast<long>(u), static_cast<long>(v)});
      squares.insert(mulmod(e, e, m));
    }
  int nonsquares = 0;
  for (std::uint64_t u = 0; u < 7; ++u)
    for (std::uint64_t v = 0; v < 7; ++v) {
      PolyFp e(7, {static_cast<long>(u), static_cast<long>(v)});
      if (e.is_zero()) continue;
      const int chi = euler_criterion(e, m);
      CHECK(chi == (squares.count(e) ? 1 : -1));
      nonsquares += chi == -1;
    }
  CHECK(nonsquares == 24);
  CHECK_THROWS_AS(euler_criterion(PolyFp(7, {1, 1}), PolyFp(7, {0, 0, 1})), MathError);
}
