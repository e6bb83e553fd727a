#ifndef QUATALG_PROPERTIES_HPP
#define QUATALG_PROPERTIES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "quatalg/brauer_q.hpp"
#include "quatalg/funcfield_fp.hpp"
#include "quatalg/poly_fp.hpp"
#include "quatalg/poly_q.hpp"

namespace quatalg {

/// Seeded generators shared by the self-test, the test suites and the benchmark.
namespace gen {

using Rng = std::mt19937_64;

long integer(Rng& rng, long lo, long hi);
/// Nonzero n/d with |n| <= bound and 1 <= d <= bound.
BigRational nonzero_rational(Rng& rng, long bound);
/// Integer coefficients in [-bound, bound], exact degree `degree`, leading coefficient nonzero.
PolyQ poly_q(Rng& rng, int degree, long bound, bool monic = false);
/// Monic irreducible of exact degree `degree` over Q.
PolyQ irreducible_q(Rng& rng, int degree, long bound);
/// Polynomial over F_p of degree at most `max_degree`, nonzero.
PolyFp poly_fp(Rng& rng, std::uint64_t p, int max_degree);
/// Random Brauer class of Q whose index is exactly n (finite support only).
BrauerClassQ brauer_class_of_index(Rng& rng, long n);

}  // namespace gen

struct PropertyResult {
  std::string name;
  bool passed = true;
  int cases = 0;
  std::string detail;  // first counterexample when failed
};

struct SelftestOptions {
  std::uint64_t seed = 1;
  int cases = 40;
};

/// Runs every property suite; deterministic for a fixed seed.
std::vector<PropertyResult> run_selftest(const SelftestOptions& opts);

}  // namespace quatalg

#endif
