#include "wignerd/spin_matrix.hpp"

#include <cmath>
#include <cstdint>

namespace wigner {

double ladder_coefficient(HalfInt j, HalfInt m) {
  require_spin(j);
  if (!same_parity(j, m))
    throw domain_error("ladder coefficient: m=" + m.str() +
                       " has wrong parity for j=" + j.str());
  const std::int64_t tj = j.twice();
  const std::int64_t tm = m.twice();
  const std::int64_t a = tj + tm;      // 2(j+m)
  const std::int64_t b = tj - tm + 2;  // 2(j-m+1)
  if (a < 0 || b < 0)
    throw domain_error("ladder coefficient: m=" + m.str() +
                       " outside [-j, j+1] for j=" + j.str());
  // a and b are both even, so the quarter is exact.
  const std::int64_t quarter = (a * b) / 4;
  return std::sqrt(static_cast<double>(quarter));
}

SymmetricTridiagonal build_spin_tridiagonal(HalfInt j) {
  require_spin(j);
  const std::size_t n = static_cast<std::size_t>(j.twice()) + 1;
  SymmetricTridiagonal t;
  t.diag.assign(n, 0.0);
  t.offdiag.resize(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    // X_{-j+i+1}/2, connecting m = -j+i and m = -j+i+1.
    const HalfInt m = HalfInt::from_twice(-j.twice() + 2 * (static_cast<std::int64_t>(i) + 1));
    t.offdiag[i] = ladder_coefficient(j, m) / 2.0;
  }
  return t;
}

}  // namespace wigner
