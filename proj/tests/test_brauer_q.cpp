#include <doctest.h>

#include <numeric>

#include "quatalg/brauer_q.hpp"
#include "quatalg/errors.hpp"
#include "quatalg/properties.hpp"

using namespace quatalg;

namespace {

PlaceQ P(long p) { return PlaceQ::finite(p); }

BrauerClassQ cls(std::initializer_list<std::pair<const PlaceQ, BigRational>> inv) {
  return BrauerClassQ(std::map<PlaceQ, BigRational>(inv));
}

}  // namespace

TEST_CASE("class_of_quaternion examples") {
  CHECK(class_of_quaternion(QuaternionQ(-1, -1)) == cls({{P(2), BigRational(1, 2)}, {PlaceQ::real(), BigRational(1, 2)}}));
  CHECK(class_of_quaternion(QuaternionQ(1, 7)).is_zero());
  CHECK(class_of_quaternion(QuaternionQ(2, 5)) == cls({{P(2), BigRational(1, 2)}, {P(5), BigRational(1, 2)}}));
  CHECK_THROWS_AS(QuaternionQ(0, 5), MathError);
}

TEST_CASE("construction enforces the invariants") {
  CHECK_THROWS_AS(cls({{P(2), BigRational(1, 3)}}), MathError);
  CHECK_THROWS_AS(cls({{PlaceQ::real(), BigRational(1, 3)}, {P(2), BigRational(2, 3)}}), MathError);
  CHECK(cls({{P(2), BigRational(3, 2)}, {P(3), BigRational(-1, 2)}}) ==
        cls({{P(2), BigRational(1, 2)}, {P(3), BigRational(1, 2)}}));
  CHECK(cls({{P(2), BigRational(1)}}).is_zero());
}

TEST_CASE("group law and orders") {
  const BrauerClassQ a = cls({{P(2), BigRational(1, 5)}, {P(3), BigRational(4, 5)}});
  const BrauerClassQ b = cls({{P(2), BigRational(4, 5)}, {P(3), BigRational(1, 5)}});
  CHECK((a + b).is_zero());
  CHECK((a + (-a)).is_zero());
  const BrauerClassQ q = class_of_quaternion(QuaternionQ(-1, -1));
  CHECK(-q == q);
  CHECK(exponent(BrauerClassQ{}) == 1);
  CHECK(index(BrauerClassQ{}) == 1);
  CHECK(exponent(q) == 2);
  const BrauerClassQ five =
      cls({{P(2), BigRational(1, 5)}, {P(3), BigRational(1, 5)}, {P(5), BigRational(4, 5)}, {P(7), BigRational(4, 5)}});
  CHECK(exponent(five) == 5);
  CHECK(index(five) == 5);

  gen::Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    const BrauerClassQ x = gen::brauer_class_of_index(rng, gen::integer(rng, 2, 8));
    const BrauerClassQ y = gen::brauer_class_of_index(rng, gen::integer(rng, 2, 8));
    const BrauerClassQ z = gen::brauer_class_of_index(rng, gen::integer(rng, 2, 8));
    CHECK((x + y) + z == x + (y + z));
    CHECK(x + y == y + x);
    // exponent = smallest m >= 1 with m x = 0
    long m = 1;
    while (!scale_class(x, m).is_zero()) ++m;
    CHECK(exponent(x) == m);
  }
}

TEST_CASE("same_maximal_subfields_q") {
  auto [c1, c2] = four_place_pair(5, {P(2), P(3), P(5), P(7)});
  CHECK(same_maximal_subfields_q(c1, c2));
  CHECK(same_maximal_subfields_q(c1, c1));
  const BrauerClassQ d1 = cls({{P(2), BigRational(1, 2)}, {P(3), BigRational(1, 2)}});
  const BrauerClassQ d2 = cls({{P(2), BigRational(1, 2)}, {P(5), BigRational(1, 2)}});
  CHECK_FALSE(same_maximal_subfields_q(d1, d2));
  CHECK_THROWS_WITH_AS(same_maximal_subfields_q(c1, d1), doctest::Contains("degrees differ"), MathError);

  gen::Rng rng(12);
  for (int i = 0; i < 40; ++i) {
    const long n = gen::integer(rng, 3, 6);
    const BrauerClassQ x = gen::brauer_class_of_index(rng, n), y = gen::brauer_class_of_index(rng, n),
                       z = gen::brauer_class_of_index(rng, n);
    CHECK(same_maximal_subfields_q(x, y) == same_maximal_subfields_q(y, x));
    if (same_maximal_subfields_q(x, y) && same_maximal_subfields_q(y, z)) CHECK(same_maximal_subfields_q(x, z));
    CHECK(same_maximal_subfields_q(x, -x));
  }
}

TEST_CASE("same_subgroup and the four-place pair") {
  auto [c1, c2] = four_place_pair(5, {P(2), P(3), P(5), P(7)});
  CHECK_FALSE(same_subgroup(c1, c2));
  CHECK(same_subgroup(c1, -c1));
  CHECK(same_subgroup(BrauerClassQ{}, BrauerClassQ{}));
  CHECK(c1 != c2);

  auto [e1, e2] = four_place_pair(2, {P(2), P(3), P(5), P(7)});
  CHECK(e1 == e2);

  auto [t1, t2] = four_place_pair(3, {P(3), P(7), P(11), P(13)});
  CHECK(same_maximal_subfields_q(t1, t2));
  CHECK_FALSE(same_subgroup(t1, t2));
  CHECK(t1 != t2);

  CHECK_THROWS_AS(four_place_pair(1, {P(2), P(3), P(5), P(7)}), MathError);
  CHECK_THROWS_AS(four_place_pair(3, {P(2), P(2), P(5), P(7)}), MathError);
  CHECK_THROWS_AS(four_place_pair(3, {P(2), P(3), P(5)}), MathError);
}

TEST_CASE("scale_class") {
  auto [c1, c2] = four_place_pair(5, {P(2), P(3), P(5), P(7)});
  CHECK(scale_class(c1, 1) == c1);
  CHECK(local_index_vector(scale_class(c1, 2)) == local_index_vector(c1));
  const BrauerClassQ q = class_of_quaternion(QuaternionQ(2, 5));
  CHECK(scale_class(q, 3) == q);
  CHECK(scale_class(q, 2).is_zero());
  CHECK(scale_class(c1, -1) == -c1);
}

TEST_CASE("quaternion_of_class round trip") {
  CHECK(quaternion_of_class(BrauerClassQ{}) == QuaternionQ(1, 1));
  const BrauerClassQ q = cls({{P(2), BigRational(1, 2)}, {PlaceQ::real(), BigRational(1, 2)}});
  CHECK(class_of_quaternion(quaternion_of_class(q)) == q);
  const BrauerClassQ three = cls({{P(2), BigRational(1, 3)}, {P(3), BigRational(2, 3)}});
  CHECK_THROWS_AS(quaternion_of_class(three), MathError);

  gen::Rng rng(8);
  for (int i = 0; i < 30; ++i) {
    const BigRational a = gen::nonzero_rational(rng, 60), b = gen::nonzero_rational(rng, 60);
    const BrauerClassQ c = class_of_quaternion(QuaternionQ(a, b));
    CHECK(c.invariants().size() % 2 == 0);
    CHECK(class_of_quaternion(quaternion_of_class(c, {static_cast<std::uint64_t>(i) + 1, 100000})) == c);
  }
}
