#ifndef QUATALG_FACTOR_Q_HPP
#define QUATALG_FACTOR_Q_HPP

#include <vector>

#include "quatalg/poly_q.hpp"

namespace quatalg {

struct FactorQ {
  PolyQ factor;  // monic, irreducible over Q
  int multiplicity;
  friend bool operator==(const FactorQ&, const FactorQ&) = default;
};

struct FactorizationQ {
  BigRational unit;
  std::vector<FactorQ> factors;  // sorted by PolyQ ordering

  PolyQ expand() const;
};

struct FactorOptions {
  int max_degree = 24;
};

/// Exact factorization over Q: squarefree decomposition, factorization modulo
/// a good prime, quadratic Hensel lifting, and subset recombination.
/// Throws MathError on the zero polynomial or when the degree cap is exceeded.
FactorizationQ factor_poly_q(const PolyQ& f, const FactorOptions& opts = {});

/// Certifies irreducibility over Q by factoring.
bool is_irreducible_q(const PolyQ& f, const FactorOptions& opts = {});

}  // namespace quatalg

#endif
