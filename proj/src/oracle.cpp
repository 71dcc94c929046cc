#include "wignerd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace wigner {

namespace {

constexpr long kMinTermExp = std::numeric_limits<long>::min();

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

std::vector<mpz_class> factorial_table(std::size_t nmax) {
  std::vector<mpz_class> f(nmax + 1);
  f[0] = 1;
  for (std::size_t i = 1; i <= nmax; ++i) f[i] = f[i - 1] * static_cast<unsigned long>(i);
  return f;
}

// ---------------------------------------------------------------- OracleAngle

OracleAngle OracleAngle::radians(double theta) {
  OracleAngle a;
  a.kind_ = Kind::Radians;
  a.radians_ = theta;
  if (!std::isfinite(theta)) throw domain_error("theta must be finite");
  return a;
}

OracleAngle OracleAngle::pi_fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw domain_error("pi fraction with zero denominator");
  if (den < 0) {
    den = -den;
    num = -num;
  }
  const std::int64_t g = gcd64(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  OracleAngle a;
  a.kind_ = Kind::PiFraction;
  a.num_ = num;
  a.den_ = den;
  return a;
}

double OracleAngle::to_double() const {
  if (kind_ == Kind::Radians) return radians_;
  return value(128).to_double();
}

BigReal OracleAngle::value(mpfr_prec_t prec) const {
  if (kind_ == Kind::Radians) return BigReal::from_double(radians_, prec);
  BigReal v = BigReal::pi(prec);
  v.mul_bigint(mpz_class(static_cast<long>(num_)));
  v.div_bigint(mpz_class(static_cast<long>(den_)));
  return v;
}

void OracleAngle::trig_of_pi(std::int64_t num, std::int64_t den,
                             mpfr_prec_t prec, BigReal& c, BigReal& s) {
  // Reduce the angle mod 2*pi exactly: num mod (2*den).
  std::int64_t r = num % (2 * den);
  if (r < 0) r += 2 * den;
  // Exact values at multiples of pi/2.
  if ((2 * r) % den == 0) {
    const std::int64_t q = (2 * r) / den;  // 0..3
    static constexpr int cos_table[4] = {1, 0, -1, 0};
    static constexpr int sin_table[4] = {0, 1, 0, -1};
    c = BigReal::from_integer(cos_table[q], prec);
    s = BigReal::from_integer(sin_table[q], prec);
    return;
  }
  BigReal t = BigReal::pi(prec + 64);
  t.mul_bigint(mpz_class(static_cast<long>(r)));
  t.div_bigint(mpz_class(static_cast<long>(den)));
  BigReal cw(prec + 64), sw(prec + 64);
  mpfr_sin_cos(sw.raw(), cw.raw(), t.raw(), MPFR_RNDN);
  c = BigReal(prec);
  s = BigReal(prec);
  mpfr_set(c.raw(), cw.raw(), MPFR_RNDN);
  mpfr_set(s.raw(), sw.raw(), MPFR_RNDN);
}

void OracleAngle::trig_half(mpfr_prec_t prec, BigReal& c, BigReal& s) const {
  if (kind_ == Kind::PiFraction) {
    trig_of_pi(num_, 2 * den_, prec, c, s);
    return;
  }
  BigReal h = BigReal::from_double(radians_, prec);
  h = ldexp(h, -1);
  c = BigReal(prec);
  s = BigReal(prec);
  mpfr_sin_cos(s.raw(), c.raw(), h.raw(), MPFR_RNDN);
}

void OracleAngle::trig_full(mpfr_prec_t prec, BigReal& c, BigReal& s) const {
  if (kind_ == Kind::PiFraction) {
    trig_of_pi(num_, den_, prec, c, s);
    return;
  }
  BigReal t = BigReal::from_double(radians_, prec);
  c = BigReal(prec);
  s = BigReal(prec);
  mpfr_sin_cos(s.raw(), c.raw(), t.raw(), MPFR_RNDN);
}

// ------------------------------------------------------------ WignerSumOracle

mpfr_prec_t min_precision_bits(HalfInt j) {
  require_spin(j);
  return static_cast<mpfr_prec_t>(2 * j.twice() + 64);
}

bool OracleEval::certified_zero(mpfr_prec_t prec, int guard_bits) const {
  if (max_term_exp == kMinTermExp) return true;
  if (value.is_zero()) return true;
  return value.exponent() <= max_term_exp - static_cast<long>(prec) + guard_bits;
}

WignerSumOracle::WignerSumOracle(HalfInt j, const OracleAngle& theta,
                                 mpfr_prec_t prec)
    : j_(j), prec_(prec), tj_(static_cast<std::size_t>(j.twice())) {
  require_spin(j);
  if (prec < min_precision_bits(j))
    throw precision_error("oracle precision " + std::to_string(prec) +
                          " below the 4j+64 floor for j=" + j.str());
  factorial_ = factorial_table(tj_);

  BigReal ch(prec), sh(prec);
  theta.trig_half(prec, ch, sh);
  std::vector<BigReal> cpow, spow;
  cpow.reserve(tj_ + 1);
  spow.reserve(tj_ + 1);
  cpow.push_back(BigReal::from_integer(1, prec));
  spow.push_back(BigReal::from_integer(1, prec));
  for (std::size_t i = 1; i <= tj_; ++i) {
    cpow.push_back(cpow[i - 1] * ch);
    spow.push_back(spow[i - 1] * sh);
  }
  pw_.reserve(tj_ + 1);
  for (std::size_t l = 0; l <= tj_; ++l) pw_.push_back(cpow[tj_ - l] * spow[l]);
}

namespace {

// Rational coefficients q[l] of cos^{2j-l}(t/2) sin^l(t/2) for d^j_{m,n},
// i.e. w_k / sqrt(N) placed at l = 2k + m - n.
std::vector<mpq_class> wigner_sum_coefficients(
    const std::vector<mpz_class>& fact, std::int64_t tj, std::int64_t tm,
    std::int64_t tn) {
  const std::int64_t jmm = (tj - tm) / 2;
  const std::int64_t jn = (tj + tn) / 2;
  const std::int64_t m_minus_n = (tm - tn) / 2;
  const std::int64_t kmin = std::max<std::int64_t>(0, -m_minus_n);
  const std::int64_t kmax = std::min(jmm, jn);

  std::vector<mpq_class> q(static_cast<std::size_t>(tj) + 1);
  for (std::int64_t k = kmin; k <= kmax; ++k) {
    const std::int64_t l = 2 * k + m_minus_n;
    mpz_class dk = fact[jmm - k] * fact[jn - k];
    dk *= fact[k + m_minus_n];
    dk *= fact[k];
    mpq_class term(((k + m_minus_n) % 2 == 0) ? 1 : -1);
    term /= mpq_class(dk);
    q[static_cast<std::size_t>(l)] = term;
  }
  return q;
}

// d/dtheta of sum_l q[l] c^{2j-l} s^l with c = cos(theta/2), s = sin(theta/2):
// the monomial degree 2j is preserved, so one differentiation maps
//   q[l] -> +(l/2) q[l] at l-1  and  -((2j-l)/2) q[l] at l+1.
void differentiate_coefficients(std::vector<mpq_class>& q, std::int64_t tj) {
  std::vector<mpq_class> out(q.size());
  for (std::size_t l = 0; l < q.size(); ++l) {
    if (q[l] == 0) continue;
    if (l >= 1) {
      mpq_class h(static_cast<long>(l), 2);
      h.canonicalize();
      out[l - 1] += q[l] * h;
    }
    if (l + 1 < q.size()) {
      mpq_class h(static_cast<long>(tj - static_cast<std::int64_t>(l)), 2);
      h.canonicalize();
      out[l + 1] -= q[l] * h;
    }
  }
  q = std::move(out);
}

}  // namespace

OracleEval WignerSumOracle::d_derivative(HalfInt m, HalfInt n,
                                         int order) const {
  if (order < 0) throw domain_error("derivative order must be nonnegative");
  require_projection(j_, m);
  require_projection(j_, n);
  const std::int64_t tj = j_.twice();

  std::vector<mpq_class> q =
      wigner_sum_coefficients(factorial_, tj, m.twice(), n.twice());
  for (int i = 0; i < order; ++i) differentiate_coefficients(q, tj);

  const std::size_t jm = static_cast<std::size_t>((tj + m.twice()) / 2);
  const std::size_t jmm = static_cast<std::size_t>((tj - m.twice()) / 2);
  const std::size_t jn = static_cast<std::size_t>((tj + n.twice()) / 2);
  const std::size_t jnm = static_cast<std::size_t>((tj - n.twice()) / 2);
  mpz_class radicand = factorial_[jm] * factorial_[jmm];
  radicand *= factorial_[jn];
  radicand *= factorial_[jnm];
  const BigReal sqrt_n = BigReal::sqrt_bigint(radicand, prec_);

  BigReal sum = BigReal::zero(prec_);
  BigReal term(prec_);
  long max_exp = kMinTermExp;
  for (std::size_t l = 0; l < q.size(); ++l) {
    if (q[l] == 0) continue;
    term.set_rational(q[l]);
    term *= pw_[l];
    if (!term.is_zero()) max_exp = std::max(max_exp, term.exponent());
    sum += term;
  }
  BigReal value = sum * sqrt_n;
  if (max_exp != kMinTermExp) max_exp += sqrt_n.exponent();
  return OracleEval{std::move(value), max_exp};
}

OracleEval WignerSumOracle::d(HalfInt m, HalfInt n) const {
  return d_derivative(m, n, 0);
}

BigReal oracle_d_sum(HalfInt j, HalfInt m, HalfInt n, const OracleAngle& theta,
                     mpfr_prec_t precision_bits) {
  return WignerSumOracle(j, theta, precision_bits).d(m, n).value;
}

BigReal oracle_d_derivative(HalfInt j, HalfInt m, HalfInt n,
                            const OracleAngle& theta, int order,
                            mpfr_prec_t precision_bits) {
  return WignerSumOracle(j, theta, precision_bits)
      .d_derivative(m, n, order)
      .value;
}

// ------------------------------------------------------------- closed forms

BigReal oracle_edge_row(HalfInt j, HalfInt m, const OracleAngle& theta,
                        mpfr_prec_t precision_bits) {
  require_projection(j, m);
  const std::int64_t tj = j.twice();
  const unsigned long jm = static_cast<unsigned long>((tj + m.twice()) / 2);
  const unsigned long jmm = static_cast<unsigned long>((tj - m.twice()) / 2);

  BigReal c(precision_bits), s(precision_bits);
  theta.trig_half(precision_bits, c, s);
  BigReal v = BigReal::sqrt_bigint(binom(static_cast<unsigned long>(tj), jm),
                                   precision_bits);
  v *= pow_ui(c, jm);
  v *= pow_ui(s, jmm);
  return (jmm % 2 == 0) ? v : -v;
}

BigReal oracle_legendre(HalfInt j, HalfInt m, const OracleAngle& theta,
                        mpfr_prec_t precision_bits) {
  if (!j.is_integer())
    throw domain_error("Legendre connection requires integer j, got " +
                       j.str());
  require_projection(j, m);
  const std::size_t jj = static_cast<std::size_t>(j.twice() / 2);
  const std::size_t mm = static_cast<std::size_t>(std::abs(m.twice()) / 2);

  BigReal x(precision_bits), sf(precision_bits);
  theta.trig_full(precision_bits, x, sf);
  // (1 - x^2)^{1/2} on the standard nonnegative branch.
  const BigReal one = BigReal::from_integer(1, precision_bits);
  const BigReal sq = sqrt(one - x * x);

  // P_mm^mm = (2mm-1)!! (1-x^2)^{mm/2}; the connection formula uses the
  // Condon-Shortley-free convention (verified against the sum formula).
  mpz_class ddf = 1;
  for (std::size_t i = 3; i <= 2 * mm; i += 2) ddf *= static_cast<unsigned long>(i);
  BigReal p_prev = pow_ui(sq, static_cast<unsigned long>(mm));
  p_prev.mul_bigint(ddf);

  BigReal p_curr(precision_bits);
  if (jj == mm) {
    p_curr = p_prev;
  } else {
    // P_{mm+1}^mm = x (2mm+1) P_mm^mm
    p_curr = x * p_prev;
    p_curr.mul_bigint(mpz_class(static_cast<unsigned long>(2 * mm + 1)));
    for (std::size_t l = mm + 2; l <= jj; ++l) {
      // (l-mm) P_l = (2l-1) x P_{l-1} - (l+mm-1) P_{l-2}
      BigReal next = x * p_curr;
      next.mul_bigint(mpz_class(static_cast<unsigned long>(2 * l - 1)));
      BigReal back = p_prev;
      back.mul_bigint(mpz_class(static_cast<unsigned long>(l + mm - 1)));
      next -= back;
      next.div_bigint(mpz_class(static_cast<unsigned long>(l - mm)));
      p_prev = std::move(p_curr);
      p_curr = std::move(next);
    }
  }

  const std::vector<mpz_class> fact = factorial_table(jj + mm);
  BigReal ratio = BigReal::from_bigint(fact[jj - mm], precision_bits);
  ratio /= BigReal::from_bigint(fact[jj + mm], precision_bits);
  BigReal result = sqrt(ratio) * p_curr;
  // d_{m,0} = (-1)^m sqrt((j-m)!/(j+m)!) P_j^m for m >= 0, and
  // d_{-m,0} = (-1)^m d_{m,0}, so the sign cancels for negative m.
  if (m.twice() > 0 && mm % 2 != 0) result = -result;
  return result;
}

// ------------------------------------------------------- exact Fourier side

ExactCoefficient oracle_integral(std::int64_t two_j, std::int64_t lambda,
                                 HalfInt mu) {
  if (two_j < 0) throw domain_error("oracle_integral: negative 2j");
  if (lambda < 0 || lambda > two_j)
    throw domain_error("oracle_integral: lambda out of [0, 2j]");
  require_projection(HalfInt::from_twice(two_j), mu);

  const std::int64_t jmu = (two_j + mu.twice()) / 2;   // j + mu
  const std::int64_t jmmu = (two_j - mu.twice()) / 2;  // j - mu
  const std::int64_t lmin = std::max<std::int64_t>(0, lambda - jmmu);
  const std::int64_t lmax = std::min(lambda, jmu);

  mpz_class s = 0;
  for (std::int64_t l = lmin; l <= lmax; ++l) {
    mpz_class t = binom(static_cast<unsigned long>(two_j - lambda),
                        static_cast<unsigned long>(jmu - l));
    t *= binom(static_cast<unsigned long>(lambda),
               static_cast<unsigned long>(l));
    if (l % 2 == 0)
      s += t;
    else
      s -= t;
  }

  ExactCoefficient out;
  out.numerator = std::move(s);
  out.denominator_pow2 = static_cast<long>(two_j);
  out.quarter_phase = quarter_turns(-2 * lambda);
  return out;
}

namespace detail {

std::vector<mpq_class> fourier_rational_terms(HalfInt j, HalfInt m, HalfInt n,
                                              HalfInt mu) {
  require_projection(j, m);
  require_projection(j, n);
  require_projection(j, mu);
  const std::int64_t tj = j.twice();
  const std::int64_t m_minus_n = (m.twice() - n.twice()) / 2;
  const std::int64_t jmm = (tj - m.twice()) / 2;
  const std::int64_t jn = (tj + n.twice()) / 2;
  const std::int64_t kmin = std::max<std::int64_t>(0, -m_minus_n);
  const std::int64_t kmax = std::min(jmm, jn);
  const std::vector<mpz_class> fact =
      factorial_table(static_cast<std::size_t>(tj));

  std::vector<mpq_class> terms;
  terms.reserve(static_cast<std::size_t>(kmax - kmin + 1));
  for (std::int64_t k = kmin; k <= kmax; ++k) {
    const std::int64_t lambda = 2 * k + m_minus_n;
    mpz_class dk = fact[jmm - k] * fact[jn - k];
    dk *= fact[k + m_minus_n];
    dk *= fact[k];
    const ExactCoefficient integral = oracle_integral(tj, lambda, mu);
    mpq_class term(integral.numerator, dk);
    term.canonicalize();
    terms.push_back(std::move(term));
  }
  return terms;
}

}  // namespace detail

ExactFourierCoefficient oracle_fourier_coefficient(HalfInt j, HalfInt m,
                                                   HalfInt n, HalfInt mu) {
  const std::vector<mpq_class> terms =
      detail::fourier_rational_terms(j, m, n, mu);
  mpq_class rho = 0;
  for (const mpq_class& t : terms) rho += t;

  const std::int64_t tj = j.twice();
  mpz_class four_j = 1;
  mpz_mul_2exp(four_j.get_mpz_t(), four_j.get_mpz_t(),
               static_cast<unsigned long>(tj));
  rho /= mpq_class(four_j);
  if (((m.twice() - n.twice()) / 2) % 2 != 0) rho = -rho;

  const std::size_t jm = static_cast<std::size_t>((tj + m.twice()) / 2);
  const std::size_t jmm = static_cast<std::size_t>((tj - m.twice()) / 2);
  const std::size_t jn = static_cast<std::size_t>((tj + n.twice()) / 2);
  const std::size_t jnm = static_cast<std::size_t>((tj - n.twice()) / 2);
  const std::vector<mpz_class> fact =
      factorial_table(static_cast<std::size_t>(tj));

  ExactFourierCoefficient out;
  out.quarter_phase = quarter_turns(n.twice() - m.twice());
  out.rho = std::move(rho);
  out.radicand = fact[jm] * fact[jmm];
  out.radicand *= fact[jn];
  out.radicand *= fact[jnm];
  return out;
}

BigReal ExactFourierCoefficient::coefficient(mpfr_prec_t prec) const {
  BigReal v = BigReal::from_rational(rho, prec);
  v *= BigReal::sqrt_bigint(radicand, prec);
  return v;
}

void ExactFourierCoefficient::complex_parts(mpfr_prec_t prec, BigReal& re,
                                            BigReal& im) const {
  const BigReal v = coefficient(prec);
  re = BigReal::zero(prec);
  im = BigReal::zero(prec);
  switch (quarter_phase) {
    case 0: re = v; break;
    case 1: im = v; break;
    case 2: re = -v; break;
    case 3: im = -v; break;
    default: throw domain_error("quarter phase out of range");
  }
}

}  // namespace wigner
