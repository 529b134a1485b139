#include "dwork/bigfloat.hpp"

#include <cstdlib>

namespace dwork {

std::string BigFloat::to_string(int digits) const {
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, "%.*Re", digits - 1, v_) < 0)
    throw Error("mpfr_asprintf failed");
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

namespace {
template <typename F>
BigFloat unary(const BigFloat& x, F f) {
  BigFloat r(x.prec());
  f(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
}  // namespace

BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }

BigFloat sqrt(const BigFloat& x) {
  if (x.sgn() < 0) throw DomainError("sqrt of negative value");
  return unary(x, mpfr_sqrt);
}

BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }

BigFloat log(const BigFloat& x) {
  if (x.sgn() <= 0) throw DomainError("log of non-positive value");
  return unary(x, mpfr_log);
}

BigFloat sin(const BigFloat& x) { return unary(x, mpfr_sin); }
BigFloat cos(const BigFloat& x) { return unary(x, mpfr_cos); }
BigFloat sinh(const BigFloat& x) { return unary(x, mpfr_sinh); }
BigFloat cosh(const BigFloat& x) { return unary(x, mpfr_cosh); }
BigFloat floor(const BigFloat& x) {
  BigFloat r(x.prec());
  mpfr_floor(r.raw(), x.raw());
  return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  Prec p = y.prec() > x.prec() ? y.prec() : x.prec();
  BigFloat r(p);
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat pow_si(const BigFloat& x, long e) {
  BigFloat r(x.prec());
  mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

BigFloat pi(Prec prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

BigFloat pow2(long e, Prec prec) {
  BigFloat r(prec);
  mpfr_set_si_2exp(r.raw(), 1, e, MPFR_RNDN);
  return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  Prec p = y.prec() > x.prec() ? y.prec() : x.prec();
  BigFloat r(p);
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

}  // namespace dwork
