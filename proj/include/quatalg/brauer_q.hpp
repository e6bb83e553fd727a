#ifndef QUATALG_BRAUER_Q_HPP
#define QUATALG_BRAUER_Q_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "quatalg/integer.hpp"
#include "quatalg/local_symbols.hpp"

namespace quatalg {

/// The quaternion algebra (a, b / Q).
struct QuaternionQ {
  BigRational a, b;

  /// Throws MathError if either entry is zero.
  QuaternionQ(BigRational a_, BigRational b_);

  friend bool operator==(const QuaternionQ&, const QuaternionQ&) = default;
};

/// A Brauer class of Q as its vector of local invariants in Q/Z.
///
/// Invariants are reduced fractions in [0, 1) with zero entries dropped;
/// they sum to an integer and the real invariant is 0 or 1/2. Every
/// constructor enforces this, so equal classes compare equal.
class BrauerClassQ {
 public:
  BrauerClassQ() = default;
  /// Throws MathError when the reciprocity or real-place constraint fails.
  explicit BrauerClassQ(std::map<PlaceQ, BigRational> invariants);

  const std::map<PlaceQ, BigRational>& invariants() const { return inv_; }
  BigRational invariant(const PlaceQ& v) const;
  bool is_zero() const { return inv_.empty(); }

  BrauerClassQ operator+(const BrauerClassQ& rhs) const;
  BrauerClassQ operator-() const;
  BrauerClassQ operator-(const BrauerClassQ& rhs) const { return *this + (-rhs); }

  friend bool operator==(const BrauerClassQ&, const BrauerClassQ&) = default;

 private:
  std::map<PlaceQ, BigRational> inv_;
};

/// Reduces q into [0, 1).
BigRational mod_one(const BigRational& q);

/// Invariant 1/2 exactly where the Hilbert symbol is -1.
BrauerClassQ class_of_quaternion(const QuaternionQ& q);

BrauerClassQ scale_class(const BrauerClassQ& c, const BigInt& m);

/// lcm of the denominators of the local invariants.
BigInt exponent(const BrauerClassQ& c);
/// Equals the exponent over a number field.
BigInt index(const BrauerClassQ& c);

/// Order of each local invariant; places of order 1 omitted.
std::map<PlaceQ, BigInt> local_index_vector(const BrauerClassQ& c);

/// Division algebras of equal degree have the same maximal subfields iff
/// their local indices agree at every place. Throws MathError when the
/// indices differ.
bool same_maximal_subfields_q(const BrauerClassQ& c1, const BrauerClassQ& c2);

/// True iff c1 and c2 generate the same cyclic subgroup of Br(Q).
bool same_subgroup(const BrauerClassQ& c1, const BrauerClassQ& c2);

/// Local invariants (1/n, 1/n, -1/n, -1/n) and (1/n, -1/n, 1/n, -1/n) at four
/// distinct finite places: equal local indices, different subgroups for n > 2.
/// Throws MathError for n < 2 or places that are repeated, real, or not four.
std::pair<BrauerClassQ, BrauerClassQ> four_place_pair(long n, const std::vector<PlaceQ>& places);

struct QuaternionSearchOptions {
  std::uint64_t seed = 1;
  std::uint64_t budget = 100000;
};

/// A quaternion algebra whose class is c (exponent <= 2), found by seeded
/// randomized search; every candidate is checked with class_of_quaternion.
/// Throws MathError on a precondition failure, BudgetExhausted otherwise.
QuaternionQ quaternion_of_class(const BrauerClassQ& c, const QuaternionSearchOptions& opts = {});

}  // namespace quatalg

#endif
