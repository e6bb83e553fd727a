#ifndef QUATALG_LOCAL_SYMBOLS_HPP
#define QUATALG_LOCAL_SYMBOLS_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "quatalg/integer.hpp"

namespace quatalg {

/// A place of Q: the real place or a finite prime.
class PlaceQ {
 public:
  static PlaceQ real() { return PlaceQ(); }
  /// Throws MathError unless p is prime.
  static PlaceQ finite(const BigInt& p);

  bool is_real() const { return real_; }
  const BigInt& prime() const;

  /// "real" or the decimal prime.
  std::string str() const;
  static PlaceQ parse(const std::string& text);

  friend bool operator==(const PlaceQ& a, const PlaceQ& b) { return a.real_ == b.real_ && a.p_ == b.p_; }
  /// Finite places by prime, the real place last.
  friend std::strong_ordering operator<=>(const PlaceQ& a, const PlaceQ& b);

 private:
  PlaceQ() = default;
  bool real_ = true;
  BigInt p_ = 0;
};

/// Legendre symbol (a/p) for an odd prime p, via Euler's criterion.
int legendre(const BigInt& a, const BigInt& p);

/// Hilbert symbol (a, b)_v in {-1, +1}; throws MathError on zero input.
int hilbert(const BigRational& a, const BigRational& b, const PlaceQ& v);

/// The places where (a, b)_v can be -1: real, 2, and primes dividing num/den of a*b.
std::vector<PlaceQ> hilbert_support_candidates(const BigRational& a, const BigRational& b);

/// (a, b)_v for every candidate place, in canonical place order.
std::map<PlaceQ, int> hilbert_all(const BigRational& a, const BigRational& b);

/// Unique squarefree integer t with a/t a rational square.
BigInt square_class_q(const BigRational& a);

/// Exact rational square root when one exists.
bool rational_sqrt(const BigRational& a, BigRational& root);

}  // namespace quatalg

#endif
