#ifndef WIGNERD_SPIN_MATRIX_HPP
#define WIGNERD_SPIN_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "wignerd/half_int.hpp"

namespace wigner {

/// Real symmetric tridiagonal matrix. For the spin matrix the diagonal is
/// identically zero and offdiag[i] > 0 with offdiag[i] == offdiag[n-2-i].
struct SymmetricTridiagonal {
  std::vector<double> diag;     // n entries
  std::vector<double> offdiag;  // n-1 entries

  std::size_t size() const { return diag.size(); }
};

/// Ladder coefficient X_m = sqrt((j+m)(j-m+1)). The product is formed from
/// exact integers (2j+2m)(2j-2m+2)/4 so the square root is the only rounding.
/// Accepts -j <= m <= j+1 (X_{-j} = X_{j+1} = 0).
double ladder_coefficient(HalfInt j, HalfInt m);

/// The (2j+1)-dimensional angular-momentum coupling matrix in real symmetric
/// tridiagonal form: zero diagonal, offdiag[i] = X_{-j+i+1}/2, with row index
/// i corresponding to m = -j+i. This is the matrix of J_x; J_y is unitarily
/// similar via the diagonal phase map D = diag((-i)^{j+m}), so both share the
/// eigenvalue grid -j..j and their eigenvector components differ only by the
/// phase that re-enters analytically in the Fourier coefficients.
SymmetricTridiagonal build_spin_tridiagonal(HalfInt j);

}  // namespace wigner

#endif  // WIGNERD_SPIN_MATRIX_HPP
