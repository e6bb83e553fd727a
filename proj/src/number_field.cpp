#include "quatalg/number_field.hpp"

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "quatalg/errors.hpp"
#include "quatalg/factor_q.hpp"
#include "quatalg/local_symbols.hpp"
#include "zpoly.hpp"

namespace quatalg {

NumberFieldElem::NumberFieldElem(PolyQ modulus, PolyQ value) : modulus_(std::move(modulus)) {
  if (modulus_.degree() < 1 || !modulus_.is_monic())
    throw MathError("number field modulus must be monic of positive degree");
  value_ = value % modulus_;
}

NumberFieldElem NumberFieldElem::certified(PolyQ modulus, PolyQ value) {
  if (!is_irreducible_q(modulus)) throw MathError("number field modulus " + to_string(modulus) + " is reducible");
  return NumberFieldElem(std::move(modulus), std::move(value));
}

NumberFieldElem NumberFieldElem::operator*(const NumberFieldElem& rhs) const {
  if (modulus_ != rhs.modulus_) throw MathError("number field elements live in different fields");
  return NumberFieldElem(modulus_, value_ * rhs.value_);
}

NumberFieldElem NumberFieldElem::inverse() const {
  if (is_zero()) throw MathError("inverse of zero in a number field");
  XgcdQ r = xgcd(value_, modulus_);
  if (r.g.degree() != 0) throw MathError("element not invertible: modulus is reducible");
  return NumberFieldElem(modulus_, r.s);
}

SquareTestBudget SquareTestBudget::from_environment() {
  SquareTestBudget b;
  if (const char* env = std::getenv("QUATALG_SQUARE_BUDGET")) {
    try {
      b.max_prime = std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("QUATALG_SQUARE_BUDGET='") + env + "' is not a positive integer");
    }
  }
  return b;
}

namespace {

using namespace zpoly;

bool p_integral(const PolyQ& f, std::uint64_t p) {
  for (const auto& c : f.coeffs())
    if (mpz_divisible_ui_p(c.get_den().get_mpz_t(), p)) return false;
  return true;
}

ZPoly reduce_mod(const PolyQ& f, const BigInt& m) {
  ZPoly out;
  for (const auto& c : f.coeffs()) {
    BigInt inv;
    BigInt den = c.get_den() % m;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
    out.push_back(c.get_num() * inv);
  }
  reduce(out, m);
  return out;
}

ZPoly mulmod(const ZPoly& a, const ZPoly& b, const ZPoly& modulus, const BigInt& m) {
  return divmod_monic(mul(a, b, m), modulus, m).second;
}

// Lifts an inverse square root z0 of c (mod p, modulus) to mod p^k and
// returns c*z, a square root of c mod p^k.
ZPoly lift_sqrt(const PolyQ& modulus, const PolyQ& c, const PolyFp& z0, std::uint64_t p, unsigned k) {
  const BigInt pz(static_cast<unsigned long>(p));
  BigInt m = pz;
  ZPoly z = from_fp(z0);
  for (unsigned e = 1; e < k; e *= 2) {
    BigInt mm = m * m;
    ZPoly mod_m = reduce_mod(modulus, mm);
    ZPoly c_m = reduce_mod(c, mm);
    ZPoly cz2 = mulmod(c_m, mulmod(z, z, mod_m, mm), mod_m, mm);
    ZPoly three_minus = sub(ZPoly{BigInt(3)}, cz2, mm);
    ZPoly next = mulmod(z, three_minus, mod_m, mm);
    BigInt half = (mm + 1) / 2;
    z = scale(next, half, mm);
    m = mm;
  }
  ZPoly mod_m = reduce_mod(modulus, m);
  return mulmod(reduce_mod(c, m), z, mod_m, m);
}

bool reconstruct(const ZPoly& y, const BigInt& m, PolyQ& out) {
  std::vector<BigRational> coeffs;
  for (const auto& c : y) {
    BigRational q;
    if (!rational_reconstruct(c, m, q)) return false;
    coeffs.push_back(q);
  }
  out = PolyQ(std::move(coeffs));
  return true;
}

bool check_root(const PolyQ& root, const NumberFieldElem& c) {
  return root.degree() < c.degree() && ((root * root - c.value()) % c.modulus()).is_zero();
}

}  // namespace

bool verify_certificate(const SquareClassVerdict& verdict, const NumberFieldElem& c) {
  if (c.is_zero()) return false;
  if (verdict.is_square) return verdict.root && !verdict.witness && check_root(*verdict.root, c);
  if (!verdict.witness || verdict.root) return false;
  const auto& w = *verdict.witness;
  const std::uint64_t p = w.prime;
  if (p < 3 || !is_prime_u64(p) || w.factor.modulus() != p) return false;
  if (!p_integral(c.modulus(), p) || !p_integral(c.value(), p)) return false;
  PolyFp mod_bar = PolyFp::reduce(c.modulus(), p);
  if (!is_squarefree(mod_bar)) return false;
  if (w.factor.degree() < 1 || w.factor.leading() != 1 || !is_irreducible(w.factor)) return false;
  if (!(mod_bar % w.factor).is_zero()) return false;
  return euler_criterion(PolyFp::reduce(c.value(), p), w.factor) == -1;
}

SquareClassVerdict is_square_in_number_field(const NumberFieldElem& c, const SquareTestBudget& budget) {
  if (c.is_zero()) throw MathError("square test: element is zero in the residue field");

  auto finish = [&](SquareClassVerdict v) {
    v.verified = verify_certificate(v, c);
    if (!v.verified) throw MathError("square test: certificate failed re-verification (internal error)");
    return v;
  };

  // A rational square is a square in every extension.
  bool rational_square_known_false = false;
  if (c.value().degree() == 0) {
    BigRational r;
    if (rational_sqrt(c.value().leading(), r)) {
      SquareClassVerdict v;
      v.is_square = true;
      v.root = PolyQ::constant(r);
      return finish(std::move(v));
    }
    rational_square_known_false = c.degree() == 1;
  }

  unsigned exponent = budget.min_exponent;
  for (std::uint64_t p = 3; p < budget.max_prime; p = next_prime(p)) {
    if (!p_integral(c.modulus(), p) || !p_integral(c.value(), p)) continue;
    PolyFp mod_bar = PolyFp::reduce(c.modulus(), p);
    if (!is_squarefree(mod_bar)) continue;
    PolyFp c_bar = PolyFp::reduce(c.value(), p);
    FactorizationFp fac = factor_poly_fp(mod_bar, p);
    bool degenerate = false;
    for (const auto& [g, e] : fac.factors) {
      int chi = euler_criterion(c_bar, g);
      if (chi == 0) {
        degenerate = true;
        break;
      }
      if (chi == -1) {
        SquareClassVerdict v;
        v.witness = NonsquareWitness{p, g};
        return finish(std::move(v));
      }
    }
    if (degenerate || rational_square_known_false) continue;
    if (static_cast<int>(fac.factors.size()) > budget.max_lift_factors) continue;

    // Square roots in every residue field, glued by CRT for each sign pattern.
    std::mt19937_64 rng(p);
    std::vector<PolyFp> roots, idempotents;
    for (const auto& [g, e] : fac.factors) {
      PolyFp r;
      sqrt_mod(c_bar, g, r, rng);
      roots.push_back(r);
      PolyFp cofactor = mod_bar / g;
      PolyFp inv = invmod(cofactor % g, g);
      idempotents.push_back((cofactor * inv) % mod_bar);
    }
    const std::size_t patterns = std::size_t{1} << (roots.size() - 1);
    for (std::size_t mask = 0; mask < patterns; ++mask) {
      PolyFp glued(p);
      for (std::size_t j = 0; j < roots.size(); ++j) {
        PolyFp term = (roots[j] * idempotents[j]) % mod_bar;
        if (j > 0 && (mask >> (j - 1)) & 1U) term = -term;
        glued += term;
      }
      PolyFp z0 = invmod(glued, mod_bar);
      ZPoly y = lift_sqrt(c.modulus(), c.value(), z0, p, exponent);
      BigInt pk;
      mpz_ui_pow_ui(pk.get_mpz_t(), p, exponent);
      PolyQ root;
      if (reconstruct(y, pk, root) && check_root(root, c)) {
        SquareClassVerdict v;
        v.is_square = true;
        v.root = std::move(root);
        return finish(std::move(v));
      }
    }
    if (exponent < budget.max_exponent) exponent *= 2;
  }
  throw BudgetExhausted("square test undecided for " + to_string(c.value()) + " mod " + to_string(c.modulus()) +
                        " with primes below " + std::to_string(budget.max_prime));
}

}  // namespace quatalg
