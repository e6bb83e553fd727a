#ifndef QUATALG_SRC_ZPOLY_HPP
#define QUATALG_SRC_ZPOLY_HPP

// Integer polynomials (lowest degree first) with arithmetic modulo m,
// shared by Hensel lifting and p-adic square roots.

#include <algorithm>
#include <utility>
#include <vector>

#include "quatalg/errors.hpp"
#include "quatalg/poly_fp.hpp"
#include "quatalg/poly_q.hpp"

namespace quatalg::zpoly {

using ZPoly = std::vector<BigInt>;

inline void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline void reduce(ZPoly& a, const BigInt& m) {
  for (auto& c : a) {
    mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  }
  trim(a);
}

inline ZPoly symmetric(ZPoly a, const BigInt& m) {
  reduce(a, m);
  BigInt half = m / 2;
  for (auto& c : a)
    if (c > half) c -= m;
  trim(a);
  return a;
}

inline ZPoly mul(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  reduce(out, m);
  return out;
}

inline ZPoly add(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  ZPoly out(std::max(a.size(), b.size()), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  reduce(out, m);
  return out;
}

inline ZPoly sub(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  ZPoly out(std::max(a.size(), b.size()), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  reduce(out, m);
  return out;
}

inline ZPoly scale(const ZPoly& a, const BigInt& s, const BigInt& m) {
  ZPoly out = a;
  for (auto& c : out) c *= s;
  reduce(out, m);
  return out;
}

// Division by a monic polynomial modulo m.
inline std::pair<ZPoly, ZPoly> divmod_monic(const ZPoly& a, const ZPoly& h, const BigInt& m) {
  const int dh = static_cast<int>(h.size()) - 1;
  const int da = static_cast<int>(a.size()) - 1;
  if (da < dh) return {{}, a};
  ZPoly rem = a;
  ZPoly quo(static_cast<std::size_t>(da - dh) + 1, BigInt(0));
  for (int i = da; i >= dh; --i) {
    BigInt q = rem[static_cast<std::size_t>(i)] % m;
    if (q < 0) q += m;
    if (q == 0) continue;
    quo[static_cast<std::size_t>(i - dh)] = q;
    for (int j = 0; j <= dh; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - dh + j)];
      slot = (slot - q * h[static_cast<std::size_t>(j)]) % m;
    }
  }
  rem.resize(static_cast<std::size_t>(dh));
  reduce(rem, m);
  reduce(quo, m);
  return {quo, rem};
}

inline ZPoly from_fp(const PolyFp& f) {
  ZPoly out;
  for (auto c : f.coeffs()) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

inline ZPoly from_q(const PolyQ& f) {
  ZPoly out;
  for (const auto& c : f.coeffs()) {
    if (c.get_den() != 1) throw MathError("internal: expected an integer polynomial");
    out.push_back(c.get_num());
  }
  return out;
}

inline PolyQ to_q(const ZPoly& f) {
  std::vector<BigRational> c;
  for (const auto& v : f) c.emplace_back(v);
  return PolyQ(std::move(c));
}

}  // namespace quatalg::zpoly

#endif
