#ifndef NEOCLASSICAL_ERRORS_HPP
#define NEOCLASSICAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace neoclassical {

/// An iterative scheme hit its work cap. Carries the best value reached.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_value, double error_estimate)
      : std::runtime_error(what), best_value_(best_value), error_estimate_(error_estimate) {}

  double best_value() const noexcept { return best_value_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_value_;
  double error_estimate_;
};

/// A residual kernel denominator collapsed (only possible for even integer alpha).
class SingularKernelError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// No admissible truncation index meets the requested tail bound.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments outside an operation's stated domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The sum over K_alpha came out with a non-negligible imaginary part.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace neoclassical

#endif  // NEOCLASSICAL_ERRORS_HPP
