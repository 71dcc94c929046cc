#ifndef WIGNERD_ERRORS_HPP
#define WIGNERD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wigner {

/// Invalid quantum numbers, parity mismatches, malformed arguments.
/// The CLI maps this family to exit code 2.
class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical failures (eigensolver, snapping, oracle precision).
/// The CLI maps this family to exit code 3.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The QL iteration exceeded its sweep cap while working on one eigenvalue.
class convergence_failure : public numerical_error {
 public:
  convergence_failure(std::size_t index, int sweeps)
      : numerical_error("eigensolver failed to converge at index " +
                        std::to_string(index) + " after " +
                        std::to_string(sweeps) + " sweeps"),
        index(index),
        sweeps(sweeps) {}

  std::size_t index;
  int sweeps;
};

/// A computed eigenvalue fell too far from the known half-integer grid.
class snap_failure : public numerical_error {
 public:
  snap_failure(std::size_t index, double value, double deviation)
      : numerical_error("eigenvalue " + std::to_string(value) + " at index " +
                        std::to_string(index) + " deviates by " +
                        std::to_string(deviation) + " from the exact grid"),
        index(index),
        value(value),
        deviation(deviation) {}

  std::size_t index;
  double value;
  double deviation;
};

/// Requested precision below the floor required by the spin value.
class precision_error : public numerical_error {
 public:
  using numerical_error::numerical_error;
};

}  // namespace wigner

#endif  // WIGNERD_ERRORS_HPP
