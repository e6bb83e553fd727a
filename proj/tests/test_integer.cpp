#include <doctest.h>

#include <random>

#include "quatalg/errors.hpp"
#include "quatalg/integer.hpp"

using namespace quatalg;

TEST_CASE("factor_int on small inputs") {
  FactoredRational f = factor_int(12);
  CHECK(f.sign() == 1);
  CHECK(f.factors() == std::map<BigInt, int>{{2, 2}, {3, 1}});

  FactoredRational u = factor_int(-1);
  CHECK(u.sign() == -1);
  CHECK(u.factors().empty());

  FactoredRational m = factor_int(2147483647);
  CHECK(m.factors() == std::map<BigInt, int>{{BigInt(2147483647), 1}});
  CHECK_FALSE(m.probabilistic());

  CHECK_THROWS_AS(factor_int(0), MathError);
}

TEST_CASE("factor_int reproduces its input") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    BigInt n = BigInt(static_cast<unsigned long>(rng() % 1000000000000ULL)) + 1;
    if (rng() & 1) n = -n;
    CHECK(factor_int(n).value() == BigRational(n));
  }
}

TEST_CASE("factor_int beyond trial division") {
  // 1000003 * 1000033 has both factors above the trial-division bound.
  BigInt n = BigInt(1000003) * BigInt(1000033);
  FactoredRational f = factor_int(n);
  CHECK(f.factors().size() == 2);
  CHECK(f.value() == BigRational(n));
}

TEST_CASE("factor_rational and square classes") {
  FactoredRational f = factor_rational(BigRational(-18, 25));
  CHECK(f.sign() == -1);
  CHECK(f.valuation(2) == 1);
  CHECK(f.valuation(3) == 2);
  CHECK(f.valuation(5) == -2);
  CHECK(f.square_class() == -2);
  CHECK(f.inverse().value() == BigRational(-25, 18));
  CHECK((f * f.inverse()).value() == 1);
}

TEST_CASE("primality") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(18446744073709551557ULL));
  CHECK_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK_FALSE(is_prime_u64(1));
  PrimalityResult big = test_prime(BigInt("170141183460469231731687303715884105727"));  // 2^127 - 1
  CHECK(big.prime);
  CHECK(big.certainty == Certainty::Probabilistic);
  CHECK(next_prime(7) == 11);
}

TEST_CASE("rational parsing and reconstruction") {
  CHECK(parse_rational("-6/4") == BigRational(-3, 2));
  CHECK(to_string(BigRational(-3, 2)) == "-3/2");
  CHECK(to_string(BigRational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);

  const BigInt m = BigInt(1) << 64;
  BigRational target(-7, 13), out;
  BigInt inv13;
  mpz_invert(inv13.get_mpz_t(), BigInt(13).get_mpz_t(), m.get_mpz_t());
  BigInt a = (BigInt(-7) * inv13) % m;
  if (a < 0) a += m;
  REQUIRE(rational_reconstruct(a, m, out));
  CHECK(out == target);
}
