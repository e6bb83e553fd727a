#include "quatalg/factor_q.hpp"

#include <algorithm>
#include <numeric>

#include "quatalg/errors.hpp"
#include "quatalg/poly_fp.hpp"
#include "zpoly.hpp"

namespace quatalg {

namespace {

using namespace zpoly;

struct Lifted {
  ZPoly g, h;
};

// Quadratic Hensel lifting of f = g*h (mod p), s*g + t*h = 1 (mod p),
// h monic, up to modulus p^k with k a power of two.
Lifted hensel_lift(const ZPoly& f, ZPoly g, ZPoly h, ZPoly s, ZPoly t, const BigInt& p, unsigned k) {
  BigInt m = p;
  for (unsigned e = 1; e < k; e *= 2) {
    BigInt mm = m * m;
    ZPoly fm = f;
    reduce(fm, mm);
    ZPoly err = sub(fm, mul(g, h, mm), mm);
    auto [q, r] = divmod_monic(mul(s, err, mm), h, mm);
    ZPoly g2 = add(g, add(mul(t, err, mm), mul(q, g, mm), mm), mm);
    ZPoly h2 = add(h, r, mm);
    ZPoly b = sub(add(mul(s, g2, mm), mul(t, h2, mm), mm), ZPoly{BigInt(1)}, mm);
    auto [c, d] = divmod_monic(mul(s, b, mm), h2, mm);
    ZPoly s2 = sub(s, d, mm);
    ZPoly t2 = sub(sub(t, mul(t, b, mm), mm), mul(c, g2, mm), mm);
    g = std::move(g2);
    h = std::move(h2);
    s = std::move(s2);
    t = std::move(t2);
    m = mm;
  }
  return {g, h};
}

// Lifts F = lc * prod(u_i) mod p to monic u_i mod p^k.
std::vector<ZPoly> multifactor_lift(const ZPoly& F, const std::vector<PolyFp>& mods, const BigInt& p, unsigned k) {
  BigInt pk;
  mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
  std::vector<ZPoly> out;
  ZPoly cur = F;
  reduce(cur, pk);
  BigInt lc = F.back();
  const std::uint64_t pu = p.get_ui();
  for (std::size_t i = 0; i + 1 < mods.size(); ++i) {
    BigInt lc_mod = lc % p;
    if (lc_mod < 0) lc_mod += p;
    PolyFp g0 = mods[i];
    g0.scale(lc_mod.get_ui());
    PolyFp h0 = PolyFp::constant(pu, 1);
    for (std::size_t j = i + 1; j < mods.size(); ++j) h0 *= mods[j];
    XgcdFp x = xgcd(g0, h0);
    if (!x.g.is_one()) throw MathError("internal: modular factors not coprime");
    Lifted lifted = hensel_lift(cur, from_fp(g0), from_fp(h0), from_fp(x.s), from_fp(x.t), p, k);
    BigInt lc_inv;
    BigInt lc_red = lc % pk;
    if (lc_red < 0) lc_red += pk;
    mpz_invert(lc_inv.get_mpz_t(), lc_red.get_mpz_t(), pk.get_mpz_t());
    out.push_back(scale(lifted.g, lc_inv, pk));
    cur = lifted.h;
    lc = 1;
  }
  out.push_back(cur);
  return out;
}

BigInt coefficient_bound(const ZPoly& F) {
  BigInt norm2 = 0;
  for (const auto& c : F) norm2 += c * c;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  BigInt two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, F.size() - 1);
  return two_n * root * abs(F.back());
}

// Splits a primitive squarefree integer polynomial of degree >= 2 into
// primitive irreducible factors.
std::vector<ZPoly> zassenhaus(const ZPoly& F) {
  const PolyQ Fq = to_q(F);

  // Pick the good prime (among the first few) with the fewest modular factors.
  std::uint64_t best_p = 0;
  std::vector<PolyFp> best_mods;
  int good = 0;
  for (std::uint64_t p = 3; good < 6; p = next_prime(p)) {
    BigInt lc_mod = F.back() % BigInt(static_cast<unsigned long>(p));
    if (lc_mod == 0) continue;
    PolyFp fbar = PolyFp::reduce(Fq, p);
    if (!is_squarefree(fbar)) continue;
    ++good;
    FactorizationFp fac = factor_poly_fp(fbar);
    if (best_p == 0 || fac.factors.size() < best_mods.size()) {
      best_p = p;
      best_mods.clear();
      for (auto& f : fac.factors) best_mods.push_back(f.factor);
    }
    if (best_mods.size() == 1) return {F};
  }

  const BigInt p(static_cast<unsigned long>(best_p));
  const BigInt bound = 2 * coefficient_bound(F) + 1;
  unsigned k = 1;
  BigInt pk = p;
  while (pk <= bound) {
    k *= 2;
    pk = pk * pk;
  }
  std::vector<ZPoly> lifted = multifactor_lift(F, best_mods, p, k);

  std::vector<ZPoly> result;
  std::vector<std::size_t> remaining(lifted.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  PolyQ cur = Fq;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    const BigInt lc = cur.leading().get_num();
    const BigInt const_term = cur.coeff(0).get_num();
    for (;;) {
      ZPoly g{lc};
      for (std::size_t i : idx) g = mul(g, lifted[remaining[i]], pk);
      g = symmetric(g, pk);
      PolyQ cand = primitive_part(to_q(g));
      bool plausible = true;
      if (const_term != 0) {
        BigInt c0 = cand.coeff(0).get_num();
        plausible = c0 != 0 && mpz_divisible_p(const_term.get_mpz_t(), c0.get_mpz_t());
      }
      if (plausible) {
        auto [quo, rem] = divmod(cur, cand);
        if (rem.is_zero()) {
          result.push_back(from_q(cand));
          cur = primitive_part(quo);
          std::vector<std::size_t> keep;
          for (std::size_t i = 0; i < remaining.size(); ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(remaining[i]);
          remaining = std::move(keep);
          found = true;
          break;
        }
      }
      // Next s-subset in lexicographic order.
      std::size_t pos = s;
      while (pos > 0 && idx[pos - 1] == remaining.size() - s + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (cur.degree() > 0) result.push_back(from_q(cur));
  return result;
}

// Yun's squarefree decomposition of a monic polynomial over Q.
std::vector<std::pair<PolyQ, int>> yun(const PolyQ& f) {
  std::vector<std::pair<PolyQ, int>> out;
  PolyQ df = derivative(f);
  PolyQ a = gcd(f, df);
  PolyQ b = f / a;
  PolyQ c = df / a;
  PolyQ d = c - derivative(b);
  int i = 1;
  while (b.degree() > 0) {
    PolyQ ai = gcd(b, d);
    b = b / ai;
    c = d / ai;
    d = c - derivative(b);
    if (ai.degree() > 0) out.emplace_back(ai.monic(), i);
    ++i;
  }
  return out;
}

}  // namespace

PolyQ FactorizationQ::expand() const {
  PolyQ out = PolyQ::constant(unit);
  for (const auto& [f, e] : factors) out *= pow(f, static_cast<unsigned>(e));
  return out;
}

FactorizationQ factor_poly_q(const PolyQ& f, const FactorOptions& opts) {
  if (f.is_zero()) throw MathError("factor_poly_q: zero polynomial");
  if (f.degree() > opts.max_degree)
    throw MathError("factor_poly_q: degree " + std::to_string(f.degree()) + " exceeds the cap of " +
                    std::to_string(opts.max_degree));
  FactorizationQ out;
  out.unit = f.leading();
  if (f.degree() == 0) return out;
  for (auto& [part, mult] : yun(f.monic())) {
    if (part.degree() == 1) {
      out.factors.push_back({part, mult});
      continue;
    }
    for (auto& z : zassenhaus(from_q(primitive_part(part)))) out.factors.push_back({to_q(z).monic(), mult});
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const FactorQ& a, const FactorQ& b) { return a.factor < b.factor; });
  return out;
}

bool is_irreducible_q(const PolyQ& f, const FactorOptions& opts) {
  if (f.degree() < 1) return false;
  FactorizationQ fac = factor_poly_q(f, opts);
  return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

}  // namespace quatalg
