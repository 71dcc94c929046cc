// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// fails. Runs everything by default; `--criterion N` selects one.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "wignerd/engine.hpp"
#include "wignerd/oracle.hpp"
#include "wignerd/sweep.hpp"

using namespace wigner;

namespace {

constexpr double kPi = 3.14159265358979323846;

HalfInt h(std::int64_t twice) { return HalfInt::from_twice(twice); }
HalfInt w(std::int64_t v) { return HalfInt::whole(v); }

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t x = state;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1p-53; }
};

struct Outcome {
  bool pass;
  std::string detail;
};

// Criterion 1+2 share the j=100 sweep; cached between them.
std::vector<ErrorRecord> g_j100_records;

const std::vector<ErrorRecord>& j100_sweep() {
  if (g_j100_records.empty()) {
    SweepConfig cfg;
    cfg.sample_budget = 2000;
    cfg.precision_bits = 512;
    g_j100_records = error_sweep({w(100)}, default_theta_grid(), cfg);
  }
  return g_j100_records;
}

char buf[256];

Outcome criterion1() {
  double max_abs = 0.0;
  for (const auto& r : j100_sweep()) max_abs = std::max(max_abs, r.max_abs_error);
  std::snprintf(buf, sizeof buf, "j=100 max_abs=%.3e (limit 5.0e-14)", max_abs);
  return {max_abs <= 5e-14, buf};
}

Outcome criterion2() {
  double max_rel = 0.0;
  for (const auto& r : j100_sweep())
    max_rel = std::max(max_rel, r.max_rel_error_inside);
  std::snprintf(buf, sizeof buf, "j=100 max_rel_inside=%.3e (limit 1.0e-9)",
                max_rel);
  return {max_rel <= 1e-9, buf};
}

Outcome criterion3() {
  SweepConfig cfg;
  cfg.sample_budget = 2000;
  cfg.precision_bits = 512;
  std::vector<HalfInt> js;
  for (std::int64_t v = 10; v <= 100; v += 10) js.push_back(w(v));
  const auto recs = derivative_error_sweep(js, default_theta_grid(), 1, cfg);
  bool ok = true;
  double worst_ratio = 0.0;
  std::int64_t worst_j = 0;
  for (std::int64_t v = 10; v <= 100; v += 10) {
    double mx = 0.0;
    for (const auto& r : recs)
      if (r.j.twice() == 2 * v) mx = std::max(mx, r.max_abs_error);
    const double limit = 50.0 * static_cast<double>(v) * 1e-14;
    if (mx > limit) ok = false;
    if (mx / limit > worst_ratio) {
      worst_ratio = mx / limit;
      worst_j = v;
    }
  }
  std::snprintf(buf, sizeof buf,
                "k=1, j=10..100: worst err/limit=%.3f at j=%lld (limit 50j*1e-14)",
                worst_ratio, static_cast<long long>(worst_j));
  return {ok, buf};
}

Outcome criterion4() {
  SweepConfig cfg;
  cfg.sample_budget = 2000;
  cfg.precision_bits = 512;
  std::vector<HalfInt> js;
  for (std::int64_t v = 10; v <= 90; v += 10) js.push_back(w(v));
  auto recs = error_sweep(js, default_theta_grid(), cfg);
  for (const auto& r : j100_sweep()) recs.push_back(r);
  const FitResult fit = fit_quadratic(recs);
  const bool ok = fit.a >= 5e-5 && fit.a <= 5e-3 && fit.b >= 0.05 && fit.b <= 5.0;
  std::snprintf(buf, sizeof buf,
                "a=%.3e in [5e-5,5e-3], b=%.3f in [0.05,5], rms=%.3f",
                fit.a, fit.b, fit.rms_residual);
  return {ok, buf};
}

Outcome criterion5() {
  const BigReal sum_corner = oracle_d_sum(w(100), w(100), w(-100),
                                          OracleAngle::pi_fraction(1, 6), 512);
  const BigReal edge_corner = oracle_edge_row(w(100), w(-100),
                                              OracleAngle::pi_fraction(1, 6), 512);
  const double s1 = sum_corner.to_double() / 3.974e-118;
  const double s2 = edge_corner.to_double() / 3.974e-118;
  const bool corner_ok = std::abs(s1 - 1.0) <= 5e-4 && std::abs(s2 - 1.0) <= 5e-4;

  const BigReal half_turn = oracle_edge_row(w(100), w(100),
                                            OracleAngle::pi_fraction(1, 2), 512);
  const double exact = std::ldexp(1.0, -100);
  const bool pow_ok = half_turn.to_double() == exact;
  BigReal diff = abs(half_turn - BigReal::from_double(exact, 512));
  const bool tight = diff.is_zero() ||
                     compare(diff, ldexp(abs(half_turn), -(512 - 32))) <= 0;

  std::snprintf(buf, sizeof buf,
                "d_{j,-j}(pi/6)/3.974e-118={%.6f,%.6f}; d(pi/2)==2^-100: %s",
                s1, s2, (pow_ok && tight) ? "exact-in-double" : "MISMATCH");
  return {corner_ok && pow_ok && tight, buf};
}

Outcome criterion6() {
  double worst_sum = 0.0, worst_parity = 0.0;
  for (const std::int64_t tj : {1, 2, 3, 10, 40, 100}) {
    const auto basis = eigenbasis(h(tj));
    for (std::int64_t tm = -tj; tm <= tj; tm += 2)
      for (std::int64_t tn = -tj; tn <= tj; tn += 2) {
        const auto slice = fourier_slice(basis, h(tm), h(tn));
        double sum = 0.0;
        for (double p : slice.p) sum += p;
        worst_sum = std::max(worst_sum,
                             std::abs(sum - (tm == tn ? 1.0 : 0.0)));
        const std::int64_t e = tj + (tm + tn) / 2;
        const double sgn = (e % 2 == 0) ? 1.0 : -1.0;
        const std::size_t nn = slice.p.size();
        for (std::size_t k = 0; k < nn; ++k)
          worst_parity = std::max(
              worst_parity, std::abs(slice.p[k] - sgn * slice.p[nn - 1 - k]));
      }
  }
  std::snprintf(buf, sizeof buf,
                "j in {1/2..50}: |sum p - delta|<=%.2e, parity<=%.2e (limit 1e-13)",
                worst_sum, worst_parity);
  return {worst_sum <= 1e-13 && worst_parity <= 1e-13, buf};
}

Outcome criterion7() {
  // Eq.-7 vs Eq.-8 derivatives over 1e4 random samples, j <= 50.
  Rng rng(0xACCE55);
  double worst = 0.0;
  SpinEigenbasis basis = eigenbasis(h(1));
  std::int64_t cached_tj = 1;
  for (int rep = 0; rep < 10000; ++rep) {
    const std::int64_t tj = 1 + static_cast<std::int64_t>(rng.next() % 100);
    if (tj != cached_tj) {
      basis = eigenbasis(h(tj));
      cached_tj = tj;
    }
    const std::int64_t tm = -tj + 2 * static_cast<std::int64_t>(rng.next() % (tj + 1));
    const std::int64_t tn = -tj + 2 * static_cast<std::int64_t>(rng.next() % (tj + 1));
    const double theta = 12.0 * rng.uniform01() - 6.0;
    const double a = d_derivative(basis, h(tm), h(tn), theta, 1);
    const double b = d_derivative_recurrence(basis, h(tm), h(tn), theta);
    worst = std::max(worst, std::abs(a - b));
  }
  const bool deriv_ok = worst <= 1e-12;

  // Engine Fourier coefficients vs the exact-integer oracle, j <= 10.
  double worst_coeff = 0.0;
  for (std::int64_t tj = 1; tj <= 20; ++tj) {
    const auto bas = eigenbasis(h(tj));
    for (std::int64_t tm = -tj; tm <= tj; tm += 2)
      for (std::int64_t tn = -tj; tn <= tj; tn += 2) {
        const auto slice = fourier_slice(bas, h(tm), h(tn));
        for (std::size_t k = 0; k < slice.p.size(); ++k) {
          const auto t = oracle_fourier_coefficient(
              h(tj), h(tm), h(tn),
              HalfInt::from_twice(-tj + 2 * static_cast<std::int64_t>(k)));
          worst_coeff = std::max(
              worst_coeff,
              std::abs(slice.p[k] - t.coefficient(256).to_double()));
        }
      }
  }
  const bool coeff_ok = worst_coeff <= 1e-13;
  std::snprintf(buf, sizeof buf,
                "Eq7-vs-Eq8 max=%.2e (1e-12); engine-vs-exact t_mu max=%.2e (1e-13)",
                worst, worst_coeff);
  return {deriv_ok && coeff_ok, buf};
}

Outcome criterion8() {
  double worst_orth = 0.0, worst_comp = 0.0, worst_id = 0.0;
  for (const std::int64_t tj : {1, 3, 10, 40, 100, 200}) {
    const auto basis = eigenbasis(h(tj));
    const std::size_t n = basis.dim();
    const double scale = 1e-12 * static_cast<double>(n);
    for (int g = 0; g <= 18; ++g) {
      const double theta = (kPi / 2) * g / 18.0;
      const auto table = d_matrix(basis, theta);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i; k < n; ++k) {
          double acc = 0.0;
          for (std::size_t q = 0; q < n; ++q)
            acc += table.at(i, q) * table.at(k, q);
          worst_orth = std::max(
              worst_orth, std::abs(acc - (i == k ? 1.0 : 0.0)) / scale);
        }
    }
    const auto identity = d_matrix(basis, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        worst_id = std::max(worst_id,
                            std::abs(identity.at(i, k) - (i == k ? 1.0 : 0.0)));
  }
  for (const std::int64_t tj : {1, 11, 40}) {
    const auto basis = eigenbasis(h(tj));
    const std::size_t n = basis.dim();
    const double scale = 1e-12 * static_cast<double>(n);
    const auto A = d_matrix(basis, 0.9);
    const auto B = d_matrix(basis, 0.35);
    const auto C = d_matrix(basis, 1.25);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        double acc = 0.0;
        for (std::size_t q = 0; q < n; ++q) acc += A.at(i, q) * B.at(q, k);
        worst_comp = std::max(worst_comp, std::abs(acc - C.at(i, k)) / scale);
      }
  }
  std::snprintf(
      buf, sizeof buf,
      "orth<=%.2e, comp<=%.2e (x 1e-12*(2j+1)); d(0)-I<=%.2e (1e-13)",
      worst_orth, worst_comp, worst_id);
  return {worst_orth <= 1.0 && worst_comp <= 1.0 && worst_id <= 1e-13, buf};
}

Outcome criterion9() {
  double worst = 0.0;
  for (const std::int64_t tj : {1, 10, 40, 200}) {
    const auto basis = eigenbasis(h(tj));
    const double expect = static_cast<double>(tj);  // 2j
    for (const double theta : {kPi / 6, kPi / 4, kPi / 2}) {
      const double f = fisher_information(basis, theta);
      worst = std::max(worst, std::abs(f - expect) / expect);
    }
  }
  std::snprintf(buf, sizeof buf,
                "|F - 2j|/2j <= %.2e for j in {1/2,5,20,100} (limit 1e-8)",
                worst);
  return {worst <= 1e-8, buf};
}

Outcome criterion10() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto basis = eigenbasis(w(1000));
  const auto table = d_matrix(basis, kPi / 3);
  const std::size_t n = table.n;
  double worst = 0.0;
  const double limit = 1e-10 * static_cast<double>(n);
#pragma omp parallel for schedule(static) reduction(max : worst)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    for (std::size_t k = static_cast<std::size_t>(i); k < n; ++k) {
      double acc = 0.0;
      const double* ri = table.values.data() + static_cast<std::size_t>(i) * n;
      const double* rk = table.values.data() + k * n;
      for (std::size_t q = 0; q < n; ++q) acc += ri[q] * rk[q];
      worst = std::max(worst,
                       std::abs(acc - (static_cast<std::size_t>(i) == k ? 1.0 : 0.0)));
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::snprintf(buf, sizeof buf,
                "2j+1=2001 basis+table+check in %.0fs; orth residual %.2e (limit %.2e)",
                secs, worst, limit);
  return {worst <= limit, buf};
}

struct Criterion {
  int id;
  const char* name;
  Outcome (*fn)();
};

const Criterion kCriteria[] = {
    {1, "headline absolute precision", criterion1},
    {2, "relative error inside the central region", criterion2},
    {3, "first-derivative error scaling", criterion3},
    {4, "quadratic error fit", criterion4},
    {5, "exact corner values from the oracle", criterion5},
    {6, "sum rule and t-parity", criterion6},
    {7, "cross-formula consistency", criterion7},
    {8, "group structure", criterion8},
    {9, "metrology demo F = 2j", criterion9},
    {10, "scale: 2j+1 = 2001", criterion10},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
      only = std::atoi(argv[i + 1]);

  int failures = 0;
  for (const Criterion& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    Outcome out{false, "exception"};
    try {
      out = c.fn();
    } catch (const std::exception& e) {
      out.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%2d] %s  %s: %s\n", c.id, out.pass ? "PASS" : "FAIL", c.name,
                out.detail.c_str());
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
