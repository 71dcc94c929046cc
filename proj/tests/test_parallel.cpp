#include <omp.h>

#include <cstdint>

#include "doctest.h"
#include "wignerd/sweep.hpp"

using namespace wigner;

// The OpenMP kernels distribute independent work items (matrix rows, sweep
// samples) without changing any per-item arithmetic, so their results must
// be bitwise identical to the serial reference implementations.

namespace {
HalfInt h(std::int64_t twice) { return HalfInt::from_twice(twice); }
}  // namespace

TEST_CASE("eigensolver: parallel rotation kernel is bitwise serial") {
  omp_set_num_threads(4);
  for (std::int64_t tj : {1, 2, 39, 160}) {
    const auto t = build_spin_tridiagonal(h(tj));
    EighOptions serial;
    serial.exec = Exec::serial;
    EighOptions parallel;
    parallel.exec = Exec::parallel;
    const auto a = eigh_tridiagonal(t, serial);
    const auto b = eigh_tridiagonal(t, parallel);
    CHECK(a.values == b.values);
    CHECK(a.vectors == b.vectors);
  }
}

TEST_CASE("d_matrix: row-parallel fill is bitwise serial") {
  omp_set_num_threads(4);
  for (std::int64_t tj : {3, 80}) {
    const auto basis = eigenbasis(h(tj));
    for (double theta : {0.0, 0.77, 2.9}) {
      const auto a = d_matrix(basis, theta, Exec::serial);
      const auto b = d_matrix(basis, theta, Exec::parallel);
      CHECK(a.values == b.values);
    }
  }
}

TEST_CASE("error sweep: sample-parallel cells reduce deterministically") {
  omp_set_num_threads(4);
  SweepConfig serial;
  serial.exec = Exec::serial;
  serial.sample_budget = 120;
  serial.precision_bits = 256;
  SweepConfig parallel = serial;
  parallel.exec = Exec::parallel;

  const std::vector<HalfInt> js = {h(1), HalfInt::whole(9)};
  const auto grid = default_theta_grid();
  const auto a = error_sweep(js, grid, serial);
  const auto b = error_sweep(js, grid, parallel);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].max_abs_error == b[i].max_abs_error);
    CHECK(a[i].max_rel_error_inside == b[i].max_rel_error_inside);
    CHECK(a[i].argmax_abs_m == b[i].argmax_abs_m);
    CHECK(a[i].argmax_abs_n == b[i].argmax_abs_n);
    CHECK(a[i].argmax_rel_m == b[i].argmax_rel_m);
    CHECK(a[i].samples == b[i].samples);
  }
}
