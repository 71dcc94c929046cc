#ifndef WIGNERD_SWEEP_HPP
#define WIGNERD_SWEEP_HPP

#include <cstdint>
#include <vector>

#include "wignerd/engine.hpp"
#include "wignerd/oracle.hpp"

namespace wigner {

/// Per-(j, theta) maxima of the engine-vs-oracle comparison over the central
/// region. Relative errors are recorded only at points classified Inside
/// whose oracle value is certified nonzero (see SweepConfig).
struct ErrorRecord {
  HalfInt j;
  double theta = 0.0;
  double max_abs_error = 0.0;
  HalfInt argmax_abs_m, argmax_abs_n;
  double max_rel_error_inside = 0.0;
  HalfInt argmax_rel_m, argmax_rel_n;
  std::size_t samples = 0;
};

struct SweepConfig {
  std::size_t sample_budget = 2000;   // oracle calls per (j, theta) cell
  mpfr_prec_t precision_bits = 512;
  std::uint64_t seed = 0;             // mixed into the per-cell subsample hash
  double rel_denominator_min = 1e-300;
  Exec exec = Exec::parallel;
};

/// The sweep grid theta = pi/36, 2pi/36, ..., 18pi/36 (optionally with
/// theta = 0 prepended).
std::vector<OracleAngle> default_theta_grid(bool include_zero = false);

/// For each (j, theta): evaluates the engine over all Inside (m, n) cells
/// (or a deterministic budget-bounded subsample seeded by (2j, theta index))
/// and compares against the arbitrary-precision sum formula at the exact
/// grid angle. Records per-cell maxima.
std::vector<ErrorRecord> error_sweep(const std::vector<HalfInt>& j_list,
                                     const std::vector<OracleAngle>& theta_grid,
                                     const SweepConfig& cfg = {});

/// Same sweep against the termwise-differentiated oracle; order in {1, 2}.
std::vector<ErrorRecord> derivative_error_sweep(
    const std::vector<HalfInt>& j_list,
    const std::vector<OracleAngle>& theta_grid, int order,
    const SweepConfig& cfg = {});

/// Least-squares fit of 1e14 * max_j(abs error) against j^2.
struct FitResult {
  double a = 0.0;
  double b = 0.0;
  double rms_residual = 0.0;
};

/// Groups records by j (taking the max over theta), then fits
/// 1e14*max_abs = a*j^2 + b by ordinary least squares. Requires at least
/// five distinct j values.
FitResult fit_quadratic(const std::vector<ErrorRecord>& records);

/// Fisher information of the J_z measurement on the rotated coherent state:
///   F(theta) = sum_m (dP_m/dtheta)^2 / P_m,  P_m = [d^j_{m,-j}(theta)]^2.
/// Outcomes with P_m < 1e-30 contribute nothing and are skipped. Requires
/// 0 < theta < pi. Equals 2j identically (binomial distribution).
double fisher_information(const SpinEigenbasis& basis, double theta);

/// Per-(m, n) classification and |d| magnitude for region maps.
struct BoundaryCell {
  HalfInt m, n;
  Region region = Region::Inside;
  double abs_d = 0.0;
};

std::vector<BoundaryCell> boundary_map(const SpinEigenbasis& basis,
                                       double theta,
                                       Exec exec = Exec::parallel);
std::vector<BoundaryCell> boundary_map(HalfInt j, double theta);

namespace detail {
/// Deterministic selection of `budget` indices out of [0, total) via a
/// hand-rolled Fisher-Yates prefix (stdlib-independent, reproducible across
/// platforms). Returned indices are sorted ascending.
std::vector<std::size_t> deterministic_subsample(std::size_t total,
                                                 std::size_t budget,
                                                 std::uint64_t seed);
std::uint64_t cell_seed(std::int64_t two_j, std::size_t theta_index,
                        std::uint64_t user_seed);
}  // namespace detail

}  // namespace wigner

#endif  // WIGNERD_SWEEP_HPP
