#include <doctest.h>

#include <cstdlib>

#include "quatalg/errors.hpp"
#include "quatalg/local_symbols.hpp"
#include "quatalg/number_field.hpp"
#include "quatalg/properties.hpp"

using namespace quatalg;

TEST_CASE("square test examples") {
  const PolyQ i2 = PolyQ{1, 0, 1};
  auto v = is_square_in_number_field(NumberFieldElem(i2, PolyQ{-1}));
  CHECK(v.is_square);
  CHECK(v.verified);
  REQUIRE(v.root);
  CHECK((*v.root * *v.root) % i2 == PolyQ{-1});

  auto w = is_square_in_number_field(NumberFieldElem(i2, PolyQ{2}));
  CHECK_FALSE(w.is_square);
  CHECK(w.verified);
  REQUIRE(w.witness);
  CHECK(verify_certificate(w, NumberFieldElem(i2, PolyQ{2})));

  auto t = is_square_in_number_field(NumberFieldElem(PolyQ{-3, 1}, PolyQ{9}));
  CHECK(t.is_square);
  REQUIRE(t.root);
  CHECK(((*t.root) * (*t.root)) == PolyQ{9});

  CHECK_THROWS_AS(is_square_in_number_field(NumberFieldElem(i2, i2)), MathError);
  CHECK_THROWS_AS(NumberFieldElem::certified(PolyQ{-1, 0, 1}, PolyQ{1}), MathError);
}

TEST_CASE("forged certificates are rejected") {
  const NumberFieldElem c(PolyQ{1, 0, 1}, PolyQ{2});
  SquareClassVerdict fake;
  fake.is_square = true;
  fake.root = PolyQ{0, 1};
  CHECK_FALSE(verify_certificate(fake, c));
  SquareClassVerdict fake_witness;
  fake_witness.witness = NonsquareWitness{5, PolyFp(5, {2, 1})};
  CHECK_FALSE(verify_certificate(fake_witness, NumberFieldElem(PolyQ{1, 0, 1}, PolyQ{-1})));
}

TEST_CASE("degree-one residue fields agree with square_class_q") {
  gen::Rng rng(9);
  for (int i = 0; i < 80; ++i) {
    const BigRational q = gen::nonzero_rational(rng, 400);
    const PolyQ modulus{gen::integer(rng, -5, 5), 1};
    auto v = is_square_in_number_field(NumberFieldElem(modulus, PolyQ::constant(q)));
    CHECK(v.is_square == (square_class_q(q) == 1));
    CHECK(v.verified);
  }
}

TEST_CASE("squares and twisted squares in random fields") {
  gen::Rng rng(21);
  for (int i = 0; i < 30; ++i) {
    const PolyQ modulus = gen::irreducible_q(rng, static_cast<int>(gen::integer(rng, 2, 5)), 4);
    const PolyQ r = gen::poly_q(rng, modulus.degree() - 1, 6);
    if ((r % modulus).is_zero()) continue;
    const NumberFieldElem root(modulus, r);
    const NumberFieldElem sq = root * root;
    auto v = is_square_in_number_field(sq);
    CHECK(v.is_square);
    CHECK(verify_certificate(v, sq));
    auto w = is_square_in_number_field(root * root * NumberFieldElem(modulus, PolyQ{3}));
    CHECK(verify_certificate(w, root * root * NumberFieldElem(modulus, PolyQ{3})));
  }
}

TEST_CASE("budget exhaustion is reported, never guessed") {
  // A nonsquare whose only cheap witnesses lie above a tiny prime budget.
  SquareTestBudget tiny;
  tiny.max_prime = 3;
  tiny.max_exponent = 16;
  CHECK_THROWS_AS(is_square_in_number_field(NumberFieldElem(PolyQ{1, 0, 1}, PolyQ{2}), tiny), BudgetExhausted);
}

TEST_CASE("budget from the environment") {
  setenv("QUATALG_SQUARE_BUDGET", "500", 1);
  CHECK(SquareTestBudget::from_environment().max_prime == 500);
  setenv("QUATALG_SQUARE_BUDGET", "lots", 1);
  CHECK_THROWS_AS(SquareTestBudget::from_environment(), ParseError);
  unsetenv("QUATALG_SQUARE_BUDGET");
  CHECK(SquareTestBudget::from_environment().max_prime == SquareTestBudget{}.max_prime);
}
