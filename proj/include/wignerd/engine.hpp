#ifndef WIGNERD_ENGINE_HPP
#define WIGNERD_ENGINE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wignerd/exec.hpp"
#include "wignerd/half_int.hpp"
#include "wignerd/tridiag_eigen.hpp"

namespace wigner {

/// Eigenbasis of the angular-momentum matrix for one value of j, computed
/// once and shared (immutable, safe across threads). Column k of the vector
/// matrix is the unit eigenvector for the snapped eigenvalue mu = -j+k; row i
/// corresponds to the basis state m = -j+i. Every entry has magnitude <= 1,
/// which is what keeps the whole evaluation free of large numbers.
class SpinEigenbasis {
 public:
  SpinEigenbasis(HalfInt j, std::vector<double> vectors);

  HalfInt j() const { return j_; }
  std::size_t dim() const { return n_; }

  HalfInt mu(std::size_t k) const {
    return HalfInt::from_twice(-j_.twice() + 2 * static_cast<std::int64_t>(k));
  }
  double mu_value(std::size_t k) const { return mu(k).value(); }

  /// Row i of the eigenvector matrix (components of all eigenvectors on
  /// basis state m = -j+i); contiguous, length dim().
  const double* row(std::size_t i) const { return vectors_.data() + i * n_; }

  /// Basis index i = j + m, validating (j, m).
  std::size_t index_of(HalfInt m) const;

 private:
  HalfInt j_;
  std::size_t n_;
  std::vector<double> vectors_;  // row-major n*n
};

/// Builds the basis: spin matrix -> tridiagonal eigensolver -> eigenvalue
/// snapping. Callers cache the result per j; the library keeps no globals.
SpinEigenbasis eigenbasis(HalfInt j, const EighOptions& opts = {});

/// Fourier coefficients of one (m, n) pair: the true complex coefficient of
/// e^{-i mu theta} is t_mu = i^quarter_phase * p[k] with mu = -j+k. The
/// p[k] are plain products of two eigenvector components, so each has
/// magnitude <= 1 and obeys the sum rule sum_k p[k] = delta_{m,n}.
struct FourierSlice {
  HalfInt j, m, n;
  std::vector<double> p;
  int quarter_phase = 0;  // (n - m) mod 4
};

FourierSlice fourier_slice(const SpinEigenbasis& basis, HalfInt m, HalfInt n);

/// d^j_{m,n}(theta) via the all-real cosine form
///   sum_k p[k] * cos(pi(n-m)/2 - mu_k*theta);
/// the imaginary part vanishes identically and is never computed.
double d_element(const SpinEigenbasis& basis, HalfInt m, HalfInt n,
                 double theta);

/// k-th derivative with respect to theta:
///   sum_k p[k] * mu_k^order * cos(pi(n-m)/2 - mu_k*theta - order*pi/2).
/// order = 0 is bitwise identical to d_element (same code path).
double d_derivative(const SpinEigenbasis& basis, HalfInt m, HalfInt n,
                    double theta, int order);

/// First derivative from the ladder recurrence
///   d' = (X_n d_{m,n-1} - X_{-n} d_{m,n+1})/2,
/// with only the surviving term at n = +-j. Exists purely as an independent
/// cross-check of the Fourier-series derivative.
double d_derivative_recurrence(const SpinEigenbasis& basis, HalfInt m,
                               HalfInt n, double theta);

/// Full rotation-matrix table at one angle.
struct DMatrixTable {
  HalfInt j;
  double theta = 0.0;
  std::size_t n = 0;
  std::vector<double> values;  // row-major, values[i_m*n + i_n]

  double at(std::size_t i_m, std::size_t i_n) const {
    return values[i_m * n + i_n];
  }
  double value(HalfInt m, HalfInt n_) const;
};

/// Fills the whole (2j+1)^2 table; each entry equals d_element on the same
/// inputs bit-for-bit. O(n^3) per angle with no re-diagonalization. Under
/// Exec::parallel rows are filled concurrently (bitwise identical output).
DMatrixTable d_matrix(const SpinEigenbasis& basis, double theta,
                      Exec exec = Exec::parallel);

enum class Region { Inside, Outside };

/// Classifies (m, n) against the central-region boundary
///   m^2 + n^2 - 2 m n cos(theta) <= j(j+1) sin^2(theta);
/// the boundary itself counts as Inside.
Region boundary_classify(HalfInt j, HalfInt m, HalfInt n, double theta);

/// Canonical image of (m, n, theta) under the d-matrix symmetry group:
/// theta' in [0, pi/2], m' >= |n'|, and
///   d^j_{m,n}(theta) = sign * (-1)^{j_coeff*j + twice_const/2} * d^j_{m',n'}(theta').
/// The j-dependent part is kept symbolic until j is known. Used only by
/// tests; the evaluator never routes through it.
struct SymmetryImage {
  HalfInt m, n;
  double theta = 0.0;
  int sign = 1;        // concrete part of the sign factor
  int j_coeff = 0;     // coefficient of j in the (-1) exponent
  int twice_const = 0; // twice the constant part of the exponent

  /// Resolves the full sign once j is known.
  int resolve_sign(HalfInt j) const;
};

SymmetryImage symmetry_map(HalfInt m, HalfInt n, double theta);

namespace detail {

/// cos(pi*q/2 - x) reduced exactly: q=0 -> cos x, 1 -> sin x,
/// 2 -> -cos x, 3 -> -sin x (sign applied by the caller; this returns
/// whether sine is selected and whether to negate).
struct PhasedTrig {
  bool use_sin;
  bool negate;
};
inline PhasedTrig phased_trig(int quarter) {
  return PhasedTrig{(quarter & 1) != 0, quarter >= 2};
}

}  // namespace detail

}  // namespace wigner

#endif  // WIGNERD_ENGINE_HPP
