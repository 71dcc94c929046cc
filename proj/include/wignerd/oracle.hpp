#ifndef WIGNERD_ORACLE_HPP
#define WIGNERD_ORACLE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "wignerd/big_real.hpp"
#include "wignerd/half_int.hpp"

namespace wigner {

/// Rotation angle for the reference oracle. Either an exact double (to
/// compare against engine values computed at the same binary64 input) or an
/// exact rational multiple of pi (the sweep grids and the closed-form
/// values). Trig of pi-fraction angles is evaluated at the oracle's
/// precision, with exact results at multiples of pi/2.
class OracleAngle {
 public:
  static OracleAngle radians(double theta);
  static OracleAngle pi_fraction(std::int64_t num, std::int64_t den);

  /// Correctly rounded binary64 value of the angle (what the engine consumes).
  double to_double() const;

  /// The angle itself at precision prec.
  BigReal value(mpfr_prec_t prec) const;

  /// cos(theta/2), sin(theta/2) at precision prec.
  void trig_half(mpfr_prec_t prec, BigReal& c, BigReal& s) const;
  /// cos(theta), sin(theta) at precision prec.
  void trig_full(mpfr_prec_t prec, BigReal& c, BigReal& s) const;

  bool is_pi_fraction() const { return kind_ == Kind::PiFraction; }
  std::int64_t pi_num() const { return num_; }
  std::int64_t pi_den() const { return den_; }

 private:
  enum class Kind { Radians, PiFraction };

  // Trig of pi*num/den with exact values at multiples of pi/2.
  static void trig_of_pi(std::int64_t num, std::int64_t den, mpfr_prec_t prec,
                         BigReal& c, BigReal& s);

  Kind kind_ = Kind::Radians;
  double radians_ = 0.0;
  std::int64_t num_ = 0, den_ = 1;
};

/// Minimum oracle precision for spin j: 4j + 64 bits. The alternating sum in
/// Wigner's formula reaches magnitude ~2^{2j}, so this leaves 2j bits each
/// for term size and cancellation plus 64 guard bits.
mpfr_prec_t min_precision_bits(HalfInt j);

/// Oracle result plus the magnitude of the largest term that entered the
/// cancelling sum. A value smaller than that magnitude shifted down by
/// almost the whole working precision is indistinguishable from an exact
/// zero at this precision.
struct OracleEval {
  BigReal value;
  long max_term_exp;  // mpfr exponent of the largest term; LONG_MIN if empty

  bool certified_zero(mpfr_prec_t prec, int guard_bits = 16) const;
};

/// Evaluator for Wigner's sum formula and its termwise theta-derivatives at
/// one (j, theta, precision). Building it precomputes the factorial table
/// and the cos/sin power ladder; evaluations for different (m, n) are then
/// independent and safe to run concurrently.
class WignerSumOracle {
 public:
  WignerSumOracle(HalfInt j, const OracleAngle& theta, mpfr_prec_t prec);

  HalfInt j() const { return j_; }
  mpfr_prec_t precision() const { return prec_; }

  /// d^j_{m,n}(theta): sum over k of
  ///   w_k cos^{2j-2k+n-m}(theta/2) sin^{2k+m-n}(theta/2),
  /// with w_k = (-1)^{k+m-n} sqrt((j+m)!(j-m)!(j+n)!(j-n)!) / D_k built from
  /// exact big-integer factorials under a single square root per call.
  OracleEval d(HalfInt m, HalfInt n) const;

  /// order-th derivative of the same sum, differentiated termwise with exact
  /// rational coefficient propagation; order = 0 reproduces d().
  OracleEval d_derivative(HalfInt m, HalfInt n, int order) const;

 private:
  HalfInt j_;
  mpfr_prec_t prec_;
  std::size_t tj_;                   // 2j
  std::vector<mpz_class> factorial_; // 0 .. 2j
  std::vector<BigReal> pw_;          // pw[l] = cos^{2j-l}(t/2) sin^l(t/2)
};

/// One-shot wrappers over WignerSumOracle.
BigReal oracle_d_sum(HalfInt j, HalfInt m, HalfInt n, const OracleAngle& theta,
                     mpfr_prec_t precision_bits);
BigReal oracle_d_derivative(HalfInt j, HalfInt m, HalfInt n,
                            const OracleAngle& theta, int order,
                            mpfr_prec_t precision_bits);

/// Edge-row closed form
///   d^j_{j,m}(theta) = (-1)^{j-m} C(2j, j+m)^{1/2}
///                      cos^{j+m}(theta/2) sin^{j-m}(theta/2);
/// exact binomial, one square root.
BigReal oracle_edge_row(HalfInt j, HalfInt m, const OracleAngle& theta,
                        mpfr_prec_t precision_bits);

/// Legendre connection for integer j:
///   d^j_{m,0}(theta) = (-1)^m sqrt((j-m)!/(j+m)!) P_j^m(cos theta),
/// with the associated Legendre polynomial evaluated by the stable upward
/// recurrence in l at full precision.
BigReal oracle_legendre(HalfInt j, HalfInt m, const OracleAngle& theta,
                        mpfr_prec_t precision_bits);

/// Exact value i^{quarter_phase} * numerator / 2^{denominator_pow2}; used for
/// the Fourier-coefficient integral
///   I_mu(2j, lambda) = 2^{-2j} i^{-lambda}
///       sum_l (-1)^l C(2j-lambda, j+mu-l) C(lambda, l).
struct ExactCoefficient {
  mpz_class numerator;
  long denominator_pow2 = 0;
  int quarter_phase = 0;
};

ExactCoefficient oracle_integral(std::int64_t two_j, std::int64_t lambda,
                                 HalfInt mu);

/// Exact Fourier coefficient t_mu = i^{quarter_phase} * rho * sqrt(radicand):
/// rho is an exact rational, radicand the exact integer
/// (j+m)!(j-m)!(j+n)!(j-n)!. All identities on t (sum rule, parities,
/// index symmetry) hold exactly on rho.
struct ExactFourierCoefficient {
  int quarter_phase = 0;
  mpq_class rho;
  mpz_class radicand;

  /// rho * sqrt(radicand), the signed real magnitude multiplying i^{qp}
  /// (this is what the engine stores as p[k]).
  BigReal coefficient(mpfr_prec_t prec) const;
  /// Real and imaginary parts of the full complex value.
  void complex_parts(mpfr_prec_t prec, BigReal& re, BigReal& im) const;
};

ExactFourierCoefficient oracle_fourier_coefficient(HalfInt j, HalfInt m,
                                                   HalfInt n, HalfInt mu);

/// Exact factorial table 0! .. nmax!.
std::vector<mpz_class> factorial_table(std::size_t nmax);

namespace detail {
/// The rational terms S_k / D_k of the Fourier-coefficient sum before the
/// common (-1)^{m-n} / 4^j factor; exposed so tests can verify that any
/// summation order yields the identical exact result.
std::vector<mpq_class> fourier_rational_terms(HalfInt j, HalfInt m, HalfInt n,
                                              HalfInt mu);
}  // namespace detail

}  // namespace wigner

#endif  // WIGNERD_ORACLE_HPP
