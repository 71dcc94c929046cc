#include "wignerd/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace wigner {

namespace detail {

namespace {
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}
}  // namespace

std::uint64_t cell_seed(std::int64_t two_j, std::size_t theta_index,
                        std::uint64_t user_seed) {
  std::uint64_t h = splitmix64(static_cast<std::uint64_t>(two_j));
  h = splitmix64(h ^ static_cast<std::uint64_t>(theta_index));
  h = splitmix64(h ^ user_seed);
  return h;
}

std::vector<std::size_t> deterministic_subsample(std::size_t total,
                                                 std::size_t budget,
                                                 std::uint64_t seed) {
  std::vector<std::size_t> idx(total);
  for (std::size_t i = 0; i < total; ++i) idx[i] = i;
  if (budget >= total) return idx;

  std::uint64_t state = seed;
  const auto next = [&state]() {
    state = splitmix64(state);
    return state;
  };
  for (std::size_t i = 0; i < budget; ++i) {
    const std::size_t r = i + static_cast<std::size_t>(next() % (total - i));
    std::swap(idx[i], idx[r]);
  }
  idx.resize(budget);
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace detail

std::vector<OracleAngle> default_theta_grid(bool include_zero) {
  std::vector<OracleAngle> grid;
  if (include_zero) grid.push_back(OracleAngle::pi_fraction(0, 36));
  for (std::int64_t k = 1; k <= 18; ++k)
    grid.push_back(OracleAngle::pi_fraction(k, 36));
  return grid;
}

namespace {

std::vector<ErrorRecord> run_sweep(const std::vector<HalfInt>& j_list,
                                   const std::vector<OracleAngle>& theta_grid,
                                   int order, const SweepConfig& cfg) {
  if (order < 0) throw domain_error("sweep derivative order must be >= 0");
  std::vector<ErrorRecord> records;
  records.reserve(j_list.size() * theta_grid.size());

  for (const HalfInt j : j_list) {
    const SpinEigenbasis basis = eigenbasis(j);
    for (std::size_t ti = 0; ti < theta_grid.size(); ++ti) {
      const OracleAngle& angle = theta_grid[ti];
      const double theta = angle.to_double();

      // Inside cells in row-major (m, n) order.
      std::vector<std::pair<HalfInt, HalfInt>> cells;
      for (std::int64_t tm = -j.twice(); tm <= j.twice(); tm += 2)
        for (std::int64_t tn = -j.twice(); tn <= j.twice(); tn += 2) {
          const HalfInt m = HalfInt::from_twice(tm);
          const HalfInt n = HalfInt::from_twice(tn);
          if (boundary_classify(j, m, n, theta) == Region::Inside)
            cells.emplace_back(m, n);
        }

      const std::vector<std::size_t> pick = detail::deterministic_subsample(
          cells.size(), cfg.sample_budget,
          detail::cell_seed(j.twice(), ti, cfg.seed));

      const WignerSumOracle oracle(j, angle, cfg.precision_bits);
      const std::size_t ns = pick.size();
      std::vector<double> abs_err(ns, 0.0);
      std::vector<double> rel_err(ns, -1.0);  // -1: excluded

      const auto eval_one = [&](std::size_t s) {
        const auto [m, n] = cells[pick[s]];
        const double computed = (order == 0)
                                    ? d_element(basis, m, n, theta)
                                    : d_derivative(basis, m, n, theta, order);
        const OracleEval exact = oracle.d_derivative(m, n, order);
        BigReal diff =
            BigReal::from_double(computed, cfg.precision_bits) - exact.value;
        abs_err[s] = std::abs(diff.to_double());
        if (!exact.certified_zero(cfg.precision_bits)) {
          const double denom = std::abs(exact.value.to_double());
          if (denom > cfg.rel_denominator_min)
            rel_err[s] = abs_err[s] / denom;
        }
      };

      if (cfg.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(ns); ++s)
          eval_one(static_cast<std::size_t>(s));
      } else {
        for (std::size_t s = 0; s < ns; ++s) eval_one(s);
      }

      // Deterministic reduction in sample order regardless of schedule.
      ErrorRecord rec;
      rec.j = j;
      rec.theta = theta;
      rec.samples = ns;
      for (std::size_t s = 0; s < ns; ++s) {
        const auto [m, n] = cells[pick[s]];
        if (abs_err[s] > rec.max_abs_error) {
          rec.max_abs_error = abs_err[s];
          rec.argmax_abs_m = m;
          rec.argmax_abs_n = n;
        }
        if (rel_err[s] > rec.max_rel_error_inside) {
          rec.max_rel_error_inside = rel_err[s];
          rec.argmax_rel_m = m;
          rec.argmax_rel_n = n;
        }
      }
      records.push_back(rec);
    }
  }
  return records;
}

}  // namespace

std::vector<ErrorRecord> error_sweep(const std::vector<HalfInt>& j_list,
                                     const std::vector<OracleAngle>& theta_grid,
                                     const SweepConfig& cfg) {
  return run_sweep(j_list, theta_grid, 0, cfg);
}

std::vector<ErrorRecord> derivative_error_sweep(
    const std::vector<HalfInt>& j_list,
    const std::vector<OracleAngle>& theta_grid, int order,
    const SweepConfig& cfg) {
  if (order < 1 || order > 2)
    throw domain_error("derivative sweep supports order 1 or 2");
  return run_sweep(j_list, theta_grid, order, cfg);
}

FitResult fit_quadratic(const std::vector<ErrorRecord>& records) {
  std::map<std::int64_t, double> max_by_j;
  for (const ErrorRecord& r : records) {
    double& v = max_by_j[r.j.twice()];
    v = std::max(v, r.max_abs_error);
  }
  if (max_by_j.size() < 5)
    throw domain_error("fit_quadratic needs at least 5 distinct j values, got " +
                       std::to_string(max_by_j.size()));

  // OLS of y = a x + b with x = j^2, y = 1e14 * max_abs.
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double cnt = static_cast<double>(max_by_j.size());
  for (const auto& [tj, err] : max_by_j) {
    const double jv = static_cast<double>(tj) / 2.0;
    const double x = jv * jv;
    const double y = 1e14 * err;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double det = cnt * sxx - sx * sx;
  if (det == 0.0) throw domain_error("fit_quadratic: degenerate j values");
  FitResult fit;
  fit.a = (cnt * sxy - sx * sy) / det;
  fit.b = (sy - fit.a * sx) / cnt;
  double ss = 0.0;
  for (const auto& [tj, err] : max_by_j) {
    const double jv = static_cast<double>(tj) / 2.0;
    const double r = 1e14 * err - (fit.a * jv * jv + fit.b);
    ss += r * r;
  }
  fit.rms_residual = std::sqrt(ss / cnt);
  return fit;
}

double fisher_information(const SpinEigenbasis& basis, double theta) {
  constexpr double kPi = 3.14159265358979323846;
  if (!(theta > 0.0 && theta < kPi))
    throw domain_error("fisher_information requires 0 < theta < pi");
  const HalfInt j = basis.j();
  const HalfInt n = -j;  // coherent input |j,-j>
  double f = 0.0;
  for (std::int64_t tm = -j.twice(); tm <= j.twice(); tm += 2) {
    const HalfInt m = HalfInt::from_twice(tm);
    const double d = d_element(basis, m, n, theta);
    const double p = d * d;
    if (p < 1e-30) continue;  // vanishing outcome, exact contribution -> 0
    const double dp = 2.0 * d * d_derivative(basis, m, n, theta, 1);
    f += dp * dp / p;
  }
  return f;
}

std::vector<BoundaryCell> boundary_map(const SpinEigenbasis& basis,
                                       double theta, Exec exec) {
  const HalfInt j = basis.j();
  const DMatrixTable table = d_matrix(basis, theta, exec);
  std::vector<BoundaryCell> cells;
  cells.reserve(basis.dim() * basis.dim());
  for (std::int64_t tm = -j.twice(); tm <= j.twice(); tm += 2)
    for (std::int64_t tn = -j.twice(); tn <= j.twice(); tn += 2) {
      BoundaryCell c;
      c.m = HalfInt::from_twice(tm);
      c.n = HalfInt::from_twice(tn);
      c.region = boundary_classify(j, c.m, c.n, theta);
      c.abs_d = std::abs(table.value(c.m, c.n));
      cells.push_back(c);
    }
  return cells;
}

std::vector<BoundaryCell> boundary_map(HalfInt j, double theta) {
  return boundary_map(eigenbasis(j), theta);
}

}  // namespace wigner
