#ifndef WIGNERD_TRIDIAG_EIGEN_HPP
#define WIGNERD_TRIDIAG_EIGEN_HPP

#include <cstddef>
#include <vector>

#include "wignerd/exec.hpp"
#include "wignerd/half_int.hpp"
#include "wignerd/spin_matrix.hpp"

namespace wigner {

/// Full eigendecomposition of a real symmetric tridiagonal matrix.
/// values are ascending; column k of vectors (stored row-major, entry (i,k)
/// at vectors[i*n+k]) is the unit eigenvector for values[k].
struct EigenDecomposition {
  std::size_t n = 0;
  std::vector<double> values;
  std::vector<double> vectors;  // row-major n*n

  double vec(std::size_t i, std::size_t k) const { return vectors[i * n + k]; }
};

struct EighOptions {
  int max_sweeps = 50;  // QL sweep cap per eigenvalue
  Exec exec = Exec::parallel;
};

/// Implicit-shift QL with Wilkinson shift, accumulating the plane rotations
/// into the eigenvector matrix. Deterministic: fixed iteration order and a
/// fixed sign convention (the entry of largest magnitude in each eigenvector
/// is positive, ties broken by lowest index). Throws convergence_failure if
/// an eigenvalue fails to settle within the sweep cap.
///
/// The O(n^3) rotation application is the hot kernel; under Exec::parallel it
/// is distributed over matrix rows and remains bitwise identical to the
/// serial path.
EigenDecomposition eigh_tridiagonal(const SymmetricTridiagonal& t,
                                    const EighOptions& opts = {});

/// Replaces computed eigenvalues of the spin matrix by the exactly known
/// grid mu = -j, -j+1, ..., +j after verifying every deviation is within
/// snap_tol (default 1e-8 * max(1, j)). Throws snap_failure otherwise.
std::vector<HalfInt> snap_eigenvalues(const std::vector<double>& values,
                                      HalfInt j, double snap_tol = -1.0);

}  // namespace wigner

#endif  // WIGNERD_TRIDIAG_EIGEN_HPP
