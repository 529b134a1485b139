#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "dwork/errors.hpp"
#include "dwork/rational.hpp"

namespace dwork {

using Prec = mpfr_prec_t;

inline constexpr Prec kMinPrec = 64;
inline constexpr Prec kDefaultPrec = 256;

inline Prec checked_prec(Prec p) {
  if (p < kMinPrec) throw DomainError("precision below 64 bits");
  return p;
}

/**
 * Arbitrary-precision binary float (MPFR-backed, round-to-nearest).
 *
 * Every value carries its own precision; binary operations produce a result
 * at the maximum of the operand precisions.
 */
class BigFloat {
 public:
  explicit BigFloat(Prec prec = kDefaultPrec) {
    mpfr_init2(v_, checked_prec(prec));
    mpfr_set_zero(v_, 1);
  }
  BigFloat(long x, Prec prec) {
    mpfr_init2(v_, checked_prec(prec));
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  BigFloat(const Rational& q, Prec prec) {
    mpfr_init2(v_, checked_prec(prec));
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  BigFloat(const std::string& s, Prec prec) {
    mpfr_init2(v_, checked_prec(prec));
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw DomainError("bad float literal: " + s);
  }
  static BigFloat from_double(double x, Prec prec) {
    BigFloat r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
  }

  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  Prec prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_); }
  bool is_integer() const { return mpfr_integer_p(v_); }
  bool is_finite() const { return mpfr_number_p(v_); }
  int sgn() const { return mpfr_sgn(v_); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /** Copy rounded to the given precision. */
  BigFloat round_to(Prec prec) const {
    BigFloat r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  /** Scientific-notation string with the given significant digit count. */
  std::string to_string(int digits = 50) const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(const BigFloat& a, long b) {
    BigFloat r(a.prec());
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator/(const BigFloat& a, long b) {
    BigFloat r(a.prec());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  BigFloat operator-() const {
    BigFloat r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  BigFloat& operator+=(const BigFloat& b) { return *this = *this + b; }
  BigFloat& operator-=(const BigFloat& b) { return *this = *this - b; }
  BigFloat& operator*=(const BigFloat& b) { return *this = *this * b; }
  BigFloat& operator/=(const BigFloat& b) { return *this = *this / b; }

  friend int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) != 0; }
  friend bool operator<(const BigFloat& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const BigFloat& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator==(const BigFloat& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

 private:
  static Prec join(const BigFloat& a, const BigFloat& b) {
    return a.prec() > b.prec() ? a.prec() : b.prec();
  }
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sinh(const BigFloat& x);
BigFloat cosh(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat pow_si(const BigFloat& x, long e);
BigFloat floor(const BigFloat& x);
BigFloat pi(Prec prec);

/** 2^e as a BigFloat (exact); e may be negative. */
BigFloat pow2(long e, Prec prec = kMinPrec);

BigFloat hypot(const BigFloat& x, const BigFloat& y);

}  // namespace dwork
