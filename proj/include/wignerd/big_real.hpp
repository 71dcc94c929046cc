#ifndef WIGNERD_BIG_REAL_HPP
#define WIGNERD_BIG_REAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "wignerd/errors.hpp"

namespace wigner {

/// Arbitrary-precision real, used only inside the reference oracle. Thin
/// RAII wrapper over mpfr_t; every value carries its working precision and
/// all operations round to nearest at the wider operand's precision.
class BigReal {
 public:
  explicit BigReal(mpfr_prec_t prec) { mpfr_init2(v_, check(prec)); }

  BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigReal& operator=(const BigReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigReal& operator=(BigReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigReal() { mpfr_clear(v_); }

  static BigReal from_double(double x, mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
  }
  static BigReal from_integer(long x, mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }
  static BigReal from_bigint(const mpz_class& z, mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
    return r;
  }
  static BigReal from_rational(const mpq_class& q, mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
  }
  static BigReal pi(mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  static BigReal zero(mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_set_zero(r.v_, 1);
    return r;
  }
  /// One rounded operation: sqrt of an exact big integer.
  static BigReal sqrt_bigint(const mpz_class& z, mpfr_prec_t prec) {
    if (z < 0) throw domain_error("sqrt of negative integer");
    BigReal r(prec);
    BigReal t = from_bigint(z, prec + 32);
    mpfr_sqrt(r.v_, t.v_, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  std::string str(int significant_digits = 20) const {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*Re", significant_digits - 1, v_) < 0)
      throw numerical_error("mpfr_asprintf failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  /// Exponent of the most significant bit (mpfr convention); only meaningful
  /// for nonzero finite values.
  long exponent() const { return static_cast<long>(mpfr_get_exp(v_)); }

  BigReal& operator+=(const BigReal& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigReal& operator-=(const BigReal& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigReal& operator*=(const BigReal& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigReal& operator/=(const BigReal& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  friend BigReal operator+(const BigReal& a, const BigReal& b) {
    BigReal r(std::max(a.precision(), b.precision()));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal operator-(const BigReal& a, const BigReal& b) {
    BigReal r(std::max(a.precision(), b.precision()));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal operator*(const BigReal& a, const BigReal& b) {
    BigReal r(std::max(a.precision(), b.precision()));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal operator/(const BigReal& a, const BigReal& b) {
    BigReal r(std::max(a.precision(), b.precision()));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  BigReal operator-() const {
    BigReal r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend BigReal sqrt(const BigReal& a) {
    BigReal r(a.precision());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal cos(const BigReal& a) {
    BigReal r(a.precision());
    mpfr_cos(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal sin(const BigReal& a) {
    BigReal r(a.precision());
    mpfr_sin(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal abs(const BigReal& a) {
    BigReal r(a.precision());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal pow_ui(const BigReal& a, unsigned long e) {
    BigReal r(a.precision());
    mpfr_pow_ui(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }
  /// Exact scaling by 2^e.
  friend BigReal ldexp(const BigReal& a, long e) {
    BigReal r(a.precision());
    mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }

  BigReal& mul_bigint(const mpz_class& z) {
    mpfr_mul_z(v_, v_, z.get_mpz_t(), MPFR_RNDN);
    return *this;
  }
  BigReal& div_bigint(const mpz_class& z) {
    mpfr_div_z(v_, v_, z.get_mpz_t(), MPFR_RNDN);
    return *this;
  }
  BigReal& set_rational(const mpq_class& q) {
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    return *this;
  }

  friend int compare(const BigReal& a, const BigReal& b) {
    return mpfr_cmp(a.v_, b.v_);
  }
  friend int compare_abs(const BigReal& a, const BigReal& b) {
    return mpfr_cmpabs(a.v_, b.v_);
  }
  friend bool operator<(const BigReal& a, const BigReal& b) {
    return compare(a, b) < 0;
  }
  friend bool operator>(const BigReal& a, const BigReal& b) {
    return compare(a, b) > 0;
  }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  static mpfr_prec_t check(mpfr_prec_t prec) {
    if (prec < MPFR_PREC_MIN)
      throw domain_error("precision below MPFR minimum");
    return prec;
  }

  mpfr_t v_;
};

}  // namespace wigner

#endif  // WIGNERD_BIG_REAL_HPP
