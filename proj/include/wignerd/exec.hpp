#ifndef WIGNERD_EXEC_HPP
#define WIGNERD_EXEC_HPP

namespace wigner {

/// Execution policy for the data-parallel kernels. The serial path is the
/// reference implementation; the OpenMP path must produce bitwise-identical
/// results (each work item performs the same arithmetic in the same order,
/// only the distribution over threads changes).
enum class Exec {
  serial,
  parallel,
};

}  // namespace wigner

#endif  // WIGNERD_EXEC_HPP
