#include "dwork/bigcomplex.hpp"

namespace dwork {

BigComplex conj(const BigComplex& z) { return BigComplex(z.re(), -z.im()); }

BigFloat abs(const BigComplex& z) { return hypot(z.re(), z.im()); }

BigFloat arg(const BigComplex& z) { return atan2(z.im(), z.re()); }

BigComplex exp(const BigComplex& z) {
  BigFloat m = exp(z.re());
  return BigComplex(m * cos(z.im()), m * sin(z.im()));
}

BigComplex log(const BigComplex& z) {
  if (z.is_zero()) throw DomainError("log of zero");
  return BigComplex(log(abs(z)), arg(z));
}

BigComplex log_branch(const BigComplex& z, long k) {
  BigComplex l = log(z);
  if (k == 0) return l;
  return BigComplex(l.re(), l.im() + pi(z.prec()) * (2 * k));
}

BigComplex sqrt(const BigComplex& z) {
  if (z.is_zero()) return z;
  return exp(log(z) / 2);
}

BigComplex sin(const BigComplex& z) {
  return BigComplex(sin(z.re()) * cosh(z.im()), cos(z.re()) * sinh(z.im()));
}

BigComplex pow(const BigComplex& z, const BigComplex& w) {
  if (z.is_zero()) {
    if (w.is_zero()) return BigComplex(1, z.prec());
    return BigComplex(z.prec());
  }
  return exp(w * log(z));
}

BigComplex pow(const BigComplex& z, const Rational& r) {
  if (r == 0) return BigComplex(1, z.prec());
  if (is_integer(r) && z.is_real()) {
    BigFloat v = pow_si(z.re(), to_long(r.get_num()));
    return BigComplex(v);
  }
  return pow(z, BigComplex(r, z.prec()));
}

BigComplex polar(const BigFloat& mod, const BigFloat& ang) {
  return BigComplex(mod * cos(ang), mod * sin(ang));
}

BigComplex root_of_unity(const Rational& r, Prec prec) {
  Rational f = frac_part(r);
  if (f == 0) return BigComplex(1, prec);
  BigFloat ang = pi(prec) * BigFloat(f, prec) * 2;
  return BigComplex(cos(ang), sin(ang));
}

}  // namespace dwork
