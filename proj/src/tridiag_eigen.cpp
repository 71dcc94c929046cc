#include "wignerd/tridiag_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace wigner {

namespace {

// One batch of plane rotations produced by a QL sweep. Rotation q acts on
// eigenvector columns (col[q], col[q]+1):
//   (v_k, v_{k+1}) <- (c*v_k - s*v_{k+1}, s*v_k + c*v_{k+1})
struct RotationSeq {
  std::vector<double> c, s;
  std::vector<int> col;

  void clear() {
    c.clear();
    s.clear();
    col.clear();
  }
  void push(double ci, double si, int k) {
    c.push_back(ci);
    s.push_back(si);
    col.push_back(k);
  }
  std::size_t size() const { return c.size(); }
};

// Applies the recorded rotations to V (row-major n*n). Every row processes
// the full sequence independently, so distributing rows over threads cannot
// change the arithmetic: the parallel result is bitwise equal to the serial
// one.
void apply_rotations_row(double* row, const RotationSeq& seq) {
  const std::size_t nrot = seq.size();
  for (std::size_t q = 0; q < nrot; ++q) {
    const int k = seq.col[q];
    const double c = seq.c[q];
    const double s = seq.s[q];
    const double vk = row[k];
    const double vk1 = row[k + 1];
    row[k] = c * vk - s * vk1;
    row[k + 1] = s * vk + c * vk1;
  }
}

void apply_rotations(std::vector<double>& v, std::size_t n,
                     const RotationSeq& seq, Exec exec) {
  if (seq.size() == 0) return;
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
      apply_rotations_row(v.data() + static_cast<std::size_t>(i) * n, seq);
  } else {
    for (std::size_t i = 0; i < n; ++i)
      apply_rotations_row(v.data() + i * n, seq);
  }
}

}  // namespace

EigenDecomposition eigh_tridiagonal(const SymmetricTridiagonal& t,
                                    const EighOptions& opts) {
  const std::size_t n = t.size();
  if (n == 0) throw domain_error("eigh_tridiagonal: empty matrix");
  for (double x : t.diag)
    if (!std::isfinite(x)) throw domain_error("eigh_tridiagonal: non-finite diagonal entry");
  for (double x : t.offdiag)
    if (!std::isfinite(x)) throw domain_error("eigh_tridiagonal: non-finite off-diagonal entry");

  EigenDecomposition out;
  out.n = n;
  out.values = t.diag;
  out.vectors.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) out.vectors[i * n + i] = 1.0;
  if (n == 1) return out;

  std::vector<double>& d = out.values;
  std::vector<double> e(t.offdiag);
  e.push_back(0.0);  // e[n-1] unused sentinel

  const double eps = std::numeric_limits<double>::epsilon();
  RotationSeq seq;

  for (std::size_t l = 0; l < n; ++l) {
    int sweeps = 0;
    for (;;) {
      // Find the first negligible off-diagonal at or after l.
      std::size_t m = l;
      while (m + 1 < n) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
        ++m;
      }
      if (m == l) break;
      if (sweeps++ == opts.max_sweeps)
        throw convergence_failure(l, opts.max_sweeps);

      // Wilkinson shift taken from the leading 2x2 of the active window.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;

      seq.clear();
      bool split = false;
      std::size_t i = m;
      while (i-- > l) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          // Split: deflate and retry on the shrunk window.
          d[i + 1] -= p;
          e[m] = 0.0;
          split = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        seq.push(c, s, static_cast<int>(i));
      }
      apply_rotations(out.vectors, n, seq, opts.exec);
      if (split) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }

  // Sort eigenpairs ascending, permuting columns. Ties keep original order.
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(),
                   [&d](std::size_t a, std::size_t b) { return d[a] < d[b]; });

  std::vector<double> sorted_values(n);
  std::vector<double> sorted_vectors(n * n);
  for (std::size_t k = 0; k < n; ++k) sorted_values[k] = d[perm[k]];
  for (std::size_t i = 0; i < n; ++i) {
    const double* src = out.vectors.data() + i * n;
    double* dst = sorted_vectors.data() + i * n;
    for (std::size_t k = 0; k < n; ++k) dst[k] = src[perm[k]];
  }
  out.values = std::move(sorted_values);
  out.vectors = std::move(sorted_vectors);

  // Sign convention: largest-magnitude entry of each column positive,
  // ties broken by lowest row index.
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t imax = 0;
    double amax = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double a = std::abs(out.vectors[i * n + k]);
      if (a > amax) {
        amax = a;
        imax = i;
      }
    }
    if (out.vectors[imax * n + k] < 0.0)
      for (std::size_t i = 0; i < n; ++i) out.vectors[i * n + k] = -out.vectors[i * n + k];
  }

  return out;
}

std::vector<HalfInt> snap_eigenvalues(const std::vector<double>& values,
                                      HalfInt j, double snap_tol) {
  require_spin(j);
  const std::size_t n = static_cast<std::size_t>(j.twice()) + 1;
  if (values.size() != n)
    throw domain_error("snap_eigenvalues: expected " + std::to_string(n) +
                       " values for j=" + j.str());
  if (snap_tol < 0.0) snap_tol = 1e-8 * std::max(1.0, j.value());

  std::vector<HalfInt> mu;
  mu.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const HalfInt exact = HalfInt::from_twice(-j.twice() + 2 * static_cast<std::int64_t>(k));
    const double dev = std::abs(values[k] - exact.value());
    if (!(dev <= snap_tol)) throw snap_failure(k, values[k], dev);
    mu.push_back(exact);
  }
  return mu;
}

}  // namespace wigner
