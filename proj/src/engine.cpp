#include "wignerd/engine.hpp"

#include <cmath>

#include "wignerd/spin_matrix.hpp"

namespace wigner {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Shared evaluation kernel. All public entry points (d_element, d_matrix,
// d_derivative with order 0) funnel through this exact loop so their results
// agree bit-for-bit.
double slice_sum(const double* vm, const double* vn, const double* trig,
                 std::size_t n) {
  double s = 0.0;
  for (std::size_t k = 0; k < n; ++k) s += (vm[k] * vn[k]) * trig[k];
  return s;
}

double slice_sum_weighted(const double* vm, const double* vn, const double* w,
                          const double* trig, std::size_t n) {
  double s = 0.0;
  for (std::size_t k = 0; k < n; ++k) s += ((vm[k] * vn[k]) * w[k]) * trig[k];
  return s;
}

void fill_trig(const SpinEigenbasis& basis, double theta, bool want_sin,
               std::vector<double>& buf) {
  const std::size_t n = basis.dim();
  buf.resize(n);
  if (want_sin)
    for (std::size_t k = 0; k < n; ++k)
      buf[k] = std::sin(basis.mu_value(k) * theta);
  else
    for (std::size_t k = 0; k < n; ++k)
      buf[k] = std::cos(basis.mu_value(k) * theta);
}

}  // namespace

SpinEigenbasis::SpinEigenbasis(HalfInt j, std::vector<double> vectors)
    : j_(j),
      n_(static_cast<std::size_t>(j.twice()) + 1),
      vectors_(std::move(vectors)) {
  require_spin(j_);
  if (vectors_.size() != n_ * n_)
    throw domain_error("SpinEigenbasis: vector matrix has wrong size");
}

std::size_t SpinEigenbasis::index_of(HalfInt m) const {
  require_projection(j_, m);
  return static_cast<std::size_t>((m.twice() + j_.twice()) / 2);
}

SpinEigenbasis eigenbasis(HalfInt j, const EighOptions& opts) {
  const SymmetricTridiagonal t = build_spin_tridiagonal(j);
  EigenDecomposition eig = eigh_tridiagonal(t, opts);
  snap_eigenvalues(eig.values, j);  // verifies; grid itself is implicit
  return SpinEigenbasis(j, std::move(eig.vectors));
}

FourierSlice fourier_slice(const SpinEigenbasis& basis, HalfInt m, HalfInt n) {
  const std::size_t im = basis.index_of(m);
  const std::size_t in = basis.index_of(n);
  const std::size_t dim = basis.dim();
  FourierSlice slice;
  slice.j = basis.j();
  slice.m = m;
  slice.n = n;
  slice.quarter_phase = quarter_turns(n.twice() - m.twice());
  slice.p.resize(dim);
  const double* vm = basis.row(im);
  const double* vn = basis.row(in);
  for (std::size_t k = 0; k < dim; ++k) slice.p[k] = vm[k] * vn[k];
  return slice;
}

double d_derivative(const SpinEigenbasis& basis, HalfInt m, HalfInt n,
                    double theta, int order) {
  if (order < 0) throw domain_error("derivative order must be nonnegative");
  const std::size_t im = basis.index_of(m);
  const std::size_t in = basis.index_of(n);
  const std::size_t dim = basis.dim();

  // cos(pi(n-m)/2 - mu*theta - order*pi/2) reduces exactly to +-cos/sin of
  // mu*theta with the quarter phase (n-m-order) mod 4.
  const int qp = quarter_turns(n.twice() - m.twice() -
                                          2 * static_cast<std::int64_t>(order));
  const auto sel = detail::phased_trig(qp);

  std::vector<double> trig;
  fill_trig(basis, theta, sel.use_sin, trig);

  double s;
  if (order == 0) {
    s = slice_sum(basis.row(im), basis.row(in), trig.data(), dim);
  } else {
    // Snapped exact half-integer eigenvalues, not the raw floating ones:
    // the mu^order weights would amplify eigenvalue noise otherwise.
    std::vector<double> w(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      const double mu = basis.mu_value(k);
      double acc = 1.0;
      for (int q = 0; q < order; ++q) acc *= mu;
      w[k] = acc;
    }
    s = slice_sum_weighted(basis.row(im), basis.row(in), w.data(), trig.data(),
                           dim);
  }
  return sel.negate ? -s : s;
}

double d_element(const SpinEigenbasis& basis, HalfInt m, HalfInt n,
                 double theta) {
  return d_derivative(basis, m, n, theta, 0);
}

double d_derivative_recurrence(const SpinEigenbasis& basis, HalfInt m,
                               HalfInt n, double theta) {
  const HalfInt j = basis.j();
  basis.index_of(m);
  basis.index_of(n);
  const HalfInt one = HalfInt::whole(1);
  double sum = 0.0;
  if (n.twice() > -j.twice()) {
    // X_n d_{m,n-1}; X_n = X_{-j} = 0 exactly when n = -j, so the term is
    // skipped there rather than evaluated at an invalid index.
    sum += ladder_coefficient(j, n) * d_element(basis, m, n - one, theta);
  }
  if (n.twice() < j.twice()) {
    sum -= ladder_coefficient(j, -n) * d_element(basis, m, n + one, theta);
  }
  return 0.5 * sum;
}

double DMatrixTable::value(HalfInt m, HalfInt n_) const {
  require_projection(j, m);
  require_projection(j, n_);
  const std::size_t im = static_cast<std::size_t>((m.twice() + j.twice()) / 2);
  const std::size_t in = static_cast<std::size_t>((n_.twice() + j.twice()) / 2);
  return at(im, in);
}

DMatrixTable d_matrix(const SpinEigenbasis& basis, double theta, Exec exec) {
  const std::size_t n = basis.dim();
  DMatrixTable table;
  table.j = basis.j();
  table.theta = theta;
  table.n = n;
  table.values.assign(n * n, 0.0);

  // Hoisted trig tables: cos/sin of mu*theta are the same bits d_element
  // computes per call, so sharing them keeps the table bit-identical to
  // per-element evaluation.
  std::vector<double> cosv, sinv;
  fill_trig(basis, theta, false, cosv);
  fill_trig(basis, theta, true, sinv);

  const auto fill_row = [&](std::size_t im) {
    const double* vm = basis.row(im);
    double* out = table.values.data() + im * n;
    for (std::size_t in = 0; in < n; ++in) {
      const int qp = quarter_turns(
          2 * (static_cast<std::int64_t>(in) - static_cast<std::int64_t>(im)));
      const auto sel = detail::phased_trig(qp);
      const double s = slice_sum(vm, basis.row(in),
                                 sel.use_sin ? sinv.data() : cosv.data(), n);
      out[in] = sel.negate ? -s : s;
    }
  };

  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t im = 0; im < static_cast<std::ptrdiff_t>(n); ++im)
      fill_row(static_cast<std::size_t>(im));
  } else {
    for (std::size_t im = 0; im < n; ++im) fill_row(im);
  }
  return table;
}

Region boundary_classify(HalfInt j, HalfInt m, HalfInt n, double theta) {
  require_projection(j, m);
  require_projection(j, n);
  if (!std::isfinite(theta)) throw domain_error("theta must be finite");
  // Scaled by 4 to work on exact doubled integers:
  //   (2m)^2 + (2n)^2 - 2(2m)(2n)cos(theta) <= 2j(2j+2) sin^2(theta).
  const double tm = static_cast<double>(m.twice());
  const double tn = static_cast<double>(n.twice());
  const double tj = static_cast<double>(j.twice());
  const double st = std::sin(theta);
  const double lhs = tm * tm + tn * tn - 2.0 * tm * tn * std::cos(theta);
  const double rhs = tj * (tj + 2.0) * st * st;
  return lhs <= rhs ? Region::Inside : Region::Outside;
}

int SymmetryImage::resolve_sign(HalfInt j) const {
  const std::int64_t twice_exp =
      static_cast<std::int64_t>(j_coeff) * j.twice() + twice_const;
  if (twice_exp % 2 != 0)
    throw domain_error("symmetry sign exponent is not an integer for j=" +
                       j.str());
  const std::int64_t e = twice_exp / 2;
  return sign * ((e % 2 == 0) ? 1 : -1);
}

SymmetryImage symmetry_map(HalfInt m, HalfInt n, double theta) {
  if (!std::isfinite(theta)) throw domain_error("theta must be finite");
  if (!same_parity(m, n))
    throw domain_error("symmetry_map: m and n must share a parity class");

  HalfInt mc = m, nc = n;
  double th = theta;
  int sign = 1;
  int j_coeff = 0;
  std::int64_t twice_const = 0;

  const auto fold_int_pow = [&](std::int64_t twice_diff) {
    // (-1)^{(n-m)} with an integer exponent known now.
    if (((twice_diff / 2) % 2) != 0) sign = -sign;
  };

  // d_{a,b}(-t) = d_{b,a}(t)
  if (th < 0.0) {
    th = -th;
    std::swap(mc, nc);
  }
  // Period 4pi (exact for integer and half-integer spins alike).
  th = std::fmod(th, 4.0 * kPi);
  // d(t + 2pi) = (-1)^{2j} d(t)
  if (th >= 2.0 * kPi) {
    th -= 2.0 * kPi;
    j_coeff += 2;
  }
  // t in (pi, 2pi): d_{a,b}(t) = (-1)^{2j} d_{b,a}(2pi - t)
  if (th > kPi) {
    th = 2.0 * kPi - th;
    std::swap(mc, nc);
    j_coeff += 2;
  }
  // t in (pi/2, pi]: d_{a,b}(t) = (-1)^{j+a} d_{a,-b}(pi - t)
  if (th > kPi / 2.0) {
    th = kPi - th;
    j_coeff += 1;
    twice_const += mc.twice();
    nc = -nc;
  }
  // Index canonicalization to m' >= |n'| using
  // d_{a,b} = (-1)^{b-a} d_{b,a} = (-1)^{b-a} d_{-a,-b} = d_{-b,-a}.
  const std::int64_t am = std::abs(mc.twice());
  const std::int64_t an = std::abs(nc.twice());
  if (am >= an) {
    if (mc.twice() < 0) {
      fold_int_pow(nc.twice() - mc.twice());
      mc = -mc;
      nc = -nc;
    }
  } else {
    if (nc.twice() >= 0) {
      fold_int_pow(nc.twice() - mc.twice());
      std::swap(mc, nc);
    } else {
      mc = -mc;
      nc = -nc;
      std::swap(mc, nc);
    }
  }

  SymmetryImage img;
  img.m = mc;
  img.n = nc;
  img.theta = th;
  img.sign = sign;
  img.j_coeff = j_coeff;
  img.twice_const = static_cast<int>(twice_const);
  return img;
}

}  // namespace wigner
