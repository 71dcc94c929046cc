// Benchmark comparing the serial reference kernels against the OpenMP
// versions (eigendecomposition rotation kernel and d-matrix table fill),
// verifying bitwise equality of the results.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <vector>

#include "CLI11.hpp"
#include "wignerd/engine.hpp"

using namespace wigner;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs OpenMP kernel benchmark"};
  std::vector<std::int64_t> two_j = {200, 800};
  double theta = 1.0471975511965976;  // pi/3
  int threads = 0;
  app.add_option("--two-j", two_j, "2j values to benchmark")
      ->capture_default_str();
  app.add_option("--theta", theta, "Table angle")->capture_default_str();
  app.add_option("--threads", threads, "OpenMP thread count (0 = default)");
  CLI11_PARSE(app, argc, argv);

  if (threads > 0) omp_set_num_threads(threads);
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%8s %14s %14s %9s %10s\n", "2j", "serial [s]", "openmp [s]",
              "speedup", "bitwise");

  for (const std::int64_t tj : two_j) {
    const HalfInt j = HalfInt::from_twice(tj);
    const auto t = build_spin_tridiagonal(j);

    EighOptions serial_opts;
    serial_opts.exec = Exec::serial;
    auto t0 = std::chrono::steady_clock::now();
    const auto eig_serial = eigh_tridiagonal(t, serial_opts);
    const double eig_s = seconds_since(t0);

    EighOptions parallel_opts;
    parallel_opts.exec = Exec::parallel;
    t0 = std::chrono::steady_clock::now();
    const auto eig_parallel = eigh_tridiagonal(t, parallel_opts);
    const double eig_p = seconds_since(t0);

    const bool eig_same = eig_serial.values == eig_parallel.values &&
                          eig_serial.vectors == eig_parallel.vectors;
    std::printf("%8lld %14.3f %14.3f %8.2fx %10s  (eigh)\n",
                static_cast<long long>(tj), eig_s, eig_p,
                eig_p > 0 ? eig_s / eig_p : 0.0, eig_same ? "yes" : "NO");

    SpinEigenbasis basis(j, std::vector<double>(eig_parallel.vectors));
    t0 = std::chrono::steady_clock::now();
    const auto table_serial = d_matrix(basis, theta, Exec::serial);
    const double tab_s = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    const auto table_parallel = d_matrix(basis, theta, Exec::parallel);
    const double tab_p = seconds_since(t0);
    const bool tab_same = table_serial.values == table_parallel.values;
    std::printf("%8lld %14.3f %14.3f %8.2fx %10s  (d_matrix)\n",
                static_cast<long long>(tj), tab_s, tab_p,
                tab_p > 0 ? tab_s / tab_p : 0.0, tab_same ? "yes" : "NO");

    if (!eig_same || !tab_same) return 1;
  }
  return 0;
}
