#ifndef QUATALG_ERRORS_HPP
#define QUATALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quatalg {

/// A mathematical precondition failed (zero input, unequal degrees, split algebra, ...).
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed textual or JSON input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A Las Vegas search ran out of budget without a certified answer.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace quatalg

#endif
