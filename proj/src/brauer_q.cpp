#include "quatalg/brauer_q.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "quatalg/errors.hpp"

namespace quatalg {

QuaternionQ::QuaternionQ(BigRational a_, BigRational b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a == 0 || b == 0) throw MathError("quaternion algebra entries must be nonzero");
  a.canonicalize();
  b.canonicalize();
}

BigRational mod_one(const BigRational& q) {
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  BigRational r = q - BigRational(fl);
  r.canonicalize();
  return r;
}

BrauerClassQ::BrauerClassQ(std::map<PlaceQ, BigRational> invariants) {
  BigRational total = 0;
  for (auto& [v, x] : invariants) {
    BigRational r = mod_one(x);
    if (r == 0) continue;
    if (v.is_real() && r != BigRational(1, 2))
      throw MathError("Brauer class: the real invariant must be 0 or 1/2, got " + to_string(r));
    total += r;
    inv_.emplace(v, r);
  }
  if (mod_one(total) != 0) throw MathError("Brauer class: local invariants sum to " + to_string(mod_one(total)) + ", not 0");
}

BigRational BrauerClassQ::invariant(const PlaceQ& v) const {
  auto it = inv_.find(v);
  return it == inv_.end() ? BigRational(0) : it->second;
}

BrauerClassQ BrauerClassQ::operator+(const BrauerClassQ& rhs) const {
  std::map<PlaceQ, BigRational> sum = inv_;
  for (const auto& [v, x] : rhs.inv_) sum[v] += x;
  return BrauerClassQ(std::move(sum));
}

BrauerClassQ BrauerClassQ::operator-() const {
  std::map<PlaceQ, BigRational> neg;
  for (const auto& [v, x] : inv_) neg.emplace(v, -x);
  return BrauerClassQ(std::move(neg));
}

BrauerClassQ class_of_quaternion(const QuaternionQ& q) {
  std::map<PlaceQ, BigRational> inv;
  for (const auto& [v, s] : hilbert_all(q.a, q.b))
    if (s == -1) inv.emplace(v, BigRational(1, 2));
  if (inv.size() % 2 != 0) throw MathError("Hilbert reciprocity violated (internal error)");
  return BrauerClassQ(std::move(inv));
}

BrauerClassQ scale_class(const BrauerClassQ& c, const BigInt& m) {
  std::map<PlaceQ, BigRational> out;
  for (const auto& [v, x] : c.invariants()) out.emplace(v, x * BigRational(m));
  return BrauerClassQ(std::move(out));
}

BigInt exponent(const BrauerClassQ& c) {
  BigInt e = 1;
  for (const auto& [v, x] : c.invariants()) e = lcm(e, x.get_den());
  return e;
}

BigInt index(const BrauerClassQ& c) { return exponent(c); }

std::map<PlaceQ, BigInt> local_index_vector(const BrauerClassQ& c) {
  std::map<PlaceQ, BigInt> out;
  for (const auto& [v, x] : c.invariants()) out.emplace(v, x.get_den());
  return out;
}

bool same_maximal_subfields_q(const BrauerClassQ& c1, const BrauerClassQ& c2) {
  const BigInt n1 = index(c1), n2 = index(c2);
  if (n1 != n2)
    throw MathError("same_maximal_subfields_q: degrees differ (index " + n1.get_str() + " vs " + n2.get_str() + ")");
  return local_index_vector(c1) == local_index_vector(c2);
}

namespace {

bool in_cyclic_subgroup(const BrauerClassQ& target, const BrauerClassQ& generator) {
  const BigInt e = exponent(generator);
  for (BigInt m = 0; m < e; ++m)
    if (scale_class(generator, m) == target) return true;
  return false;
}

}  // namespace

bool same_subgroup(const BrauerClassQ& c1, const BrauerClassQ& c2) {
  return in_cyclic_subgroup(c2, c1) && in_cyclic_subgroup(c1, c2);
}

std::pair<BrauerClassQ, BrauerClassQ> four_place_pair(long n, const std::vector<PlaceQ>& places) {
  if (n < 2) throw MathError("four_place_pair: n must be at least 2");
  if (places.size() != 4) throw MathError("four_place_pair: exactly four places are required");
  std::set<PlaceQ> distinct(places.begin(), places.end());
  if (distinct.size() != 4) throw MathError("four_place_pair: places must be distinct");
  for (const auto& v : places)
    if (v.is_real()) throw MathError("four_place_pair: places must be finite");
  const BigRational plus(1, n), minus(-1, n);
  std::map<PlaceQ, BigRational> first{{places[0], plus}, {places[1], plus}, {places[2], minus}, {places[3], minus}};
  std::map<PlaceQ, BigRational> second{{places[0], plus}, {places[1], minus}, {places[2], plus}, {places[3], minus}};
  return {BrauerClassQ(std::move(first)), BrauerClassQ(std::move(second))};
}

QuaternionQ quaternion_of_class(const BrauerClassQ& c, const QuaternionSearchOptions& opts) {
  if (exponent(c) > 2) throw MathError("quaternion_of_class: class has exponent " + exponent(c).get_str() + " > 2");
  if (c.is_zero()) return QuaternionQ(1, 1);

  bool real_ramified = false;
  std::vector<BigInt> support;
  for (const auto& [v, x] : c.invariants()) {
    if (v.is_real())
      real_ramified = true;
    else
      support.push_back(v.prime());
  }
  std::vector<BigInt> pool = support;
  for (unsigned p : {2U, 3U, 5U, 7U, 11U, 13U, 17U, 19U, 23U, 29U})
    if (std::find(pool.begin(), pool.end(), BigInt(p)) == pool.end()) pool.emplace_back(p);

  BigInt support_product = 1;
  for (const auto& p : support) support_product *= p;

  std::mt19937_64 rng(opts.seed);
  auto random_product = [&]() {
    BigInt out = 1;
    for (const auto& p : pool)
      if (rng() & 1U) out *= p;
    if (rng() % 4 == 0) out *= BigInt(static_cast<unsigned long>(next_prime(30 + rng() % 2000)));
    return out;
  };

  for (std::uint64_t attempt = 0; attempt < opts.budget; ++attempt) {
    BigInt a = (rng() & 1U) ? support_product : random_product();
    BigInt b = random_product();
    if (real_ramified) {
      a = -a;
      b = -b;
    } else if (rng() & 1U) {
      (rng() & 1U ? a : b) *= -1;
    }
    QuaternionQ cand{BigRational(a), BigRational(b)};
    if (class_of_quaternion(cand) == c) return cand;
  }
  throw BudgetExhausted("quaternion_of_class: no presentation found within " + std::to_string(opts.budget) +
                        " candidates");
}

}  // namespace quatalg
