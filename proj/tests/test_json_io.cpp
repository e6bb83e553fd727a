#include <doctest.h>

#include "quatalg/errors.hpp"
#include "quatalg/json_io.hpp"
#include "quatalg/properties.hpp"

using namespace quatalg;

namespace {

template <class T>
Json reparsed(const T& x) {
  return encode(decode<T>(parse_json(encode(x).dump())));
}

}  // namespace

TEST_CASE("Brauer class schema") {
  const Json j = parse_json(R"({"invariants":[{"place":"2","inv":"1/2"},{"place":"real","inv":"1/2"}]})");
  const BrauerClassQ c = decode<BrauerClassQ>(j);
  CHECK(c == class_of_quaternion(QuaternionQ(-1, -1)));
  CHECK(encode(c) == j);
  CHECK_THROWS_AS(decode<BrauerClassQ>(parse_json(R"({"invariants":[{"place":"2","inv":"1/3"}]})")), MathError);
  CHECK_THROWS_AS(decode<BrauerClassQ>(parse_json(R"({"inv":[]})")), ParseError);
  CHECK_THROWS_AS(decode<BrauerClassQ>(parse_json(R"({"invariants":[{"place":2,"inv":"1/2"}]})")), ParseError);
  CHECK_THROWS_AS(parse_json("{"), ParseError);
}

TEST_CASE("factorization schema") {
  const FactorizationQ f = factor_poly_q(PolyQ{0, 2, 2});
  CHECK(encode(f).dump() == R"({"unit":"2","factors":[["x",1],["x+1",1]]})");
  const FactorizationQ back = decode<FactorizationQ>(encode(f));
  CHECK(back.unit == f.unit);
  CHECK(back.factors == f.factors);
}

TEST_CASE("round trips of every result type") {
  gen::Rng rng(6);
  for (int i = 0; i < 10; ++i) {
    const BrauerClassQ c = gen::brauer_class_of_index(rng, gen::integer(rng, 2, 7));
    CHECK(decode<BrauerClassQ>(parse_json(encode(c).dump())) == c);
    const QuaternionQ q(gen::nonzero_rational(rng, 50), gen::nonzero_rational(rng, 50));
    CHECK(decode<QuaternionQ>(encode(q)) == q);
    const HilbertTable t{hilbert_all(q.a, q.b)};
    CHECK(decode<HilbertTable>(encode(t)) == t);
  }

  const QuaternionFF d{FactoredFunc::parse("x^2+1"), FactoredFunc::parse("(2*x)/(x-1)")};
  CHECK(decode<QuaternionFF>(encode(d)) == d);
  const ResidueTableQ table{d, residue_table(d)};
  CHECK(reparsed(table) == encode(table));
  const Json tj = encode(table);
  CHECK(tj["residues"].contains("x^2+1"));
  CHECK(tj["residues"]["x^2+1"]["certificate"]["verified"] == true);

  for (auto [f2, g2] : {std::pair{"x", "12"}, std::pair{"x", "5"}, std::pair{"2", "5"}}) {
    const QuaternionFF e{FactoredFunc::parse(f2), FactoredFunc::parse(g2)};
    const IsomorphismVerdict v = is_isomorphic_qx(QuaternionFF{FactoredFunc::parse("x"), FactoredFunc::parse("3")}, e);
    CHECK(reparsed(v) == encode(v));
  }

  const QuaternionFFp p{FactoredFuncFp::parse("x", 5), FactoredFuncFp::parse("2", 5)};
  CHECK(decode<QuaternionFFp>(encode(p)) == p);
  const QuatClassFp c = class_fp(p);
  CHECK(decode<QuatClassFp>(encode(c)) == c);
  CHECK(encode(c)["residues"].contains("inf"));
  const IsomorphismVerdictFp vf =
      is_isomorphic_fpx(p, QuaternionFFp{FactoredFuncFp::parse("x", 5), FactoredFuncFp::parse("1", 5)});
  CHECK(reparsed(vf) == encode(vf));
}

TEST_CASE("certificate consistency is checked on decode") {
  CHECK_THROWS_AS(decode<SquareClassVerdict>(parse_json(R"({"is_square":true,"verified":true})")), ParseError);
  const SquareClassVerdict v = decode<SquareClassVerdict>(
      parse_json(R"({"is_square":false,"witness":{"prime":5,"factor":"x+2"},"verified":true})"));
  CHECK(v.witness->factor == PolyFp(5, {2, 1}));
}
