#pragma once

#include <string>
#include <utility>

#include "dwork/bigfloat.hpp"

namespace dwork {

/**
 * Arbitrary-precision complex number built on BigFloat.
 *
 * Both components are kept at the same precision; mixed-precision operands
 * are promoted to the larger precision. log/pow/sqrt use the principal
 * branch (argument in (-pi, pi]).
 */
class BigComplex {
 public:
  explicit BigComplex(Prec prec = kDefaultPrec) : re_(prec), im_(prec) {}
  BigComplex(long x, Prec prec) : re_(x, prec), im_(prec) {}
  BigComplex(const Rational& q, Prec prec) : re_(q, prec), im_(prec) {}
  explicit BigComplex(BigFloat re) : re_(std::move(re)), im_(re_.prec()) {}
  BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
    Prec p = re_.prec() > im_.prec() ? re_.prec() : im_.prec();
    if (re_.prec() != p) re_ = re_.round_to(p);
    if (im_.prec() != p) im_ = im_.round_to(p);
  }

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  Prec prec() const { return re_.prec(); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  BigComplex round_to(Prec prec) const {
    return BigComplex(re_.round_to(prec), im_.round_to(prec));
  }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend BigComplex operator*(const BigComplex& a, const BigFloat& s) {
    return BigComplex(a.re_ * s, a.im_ * s);
  }
  friend BigComplex operator*(const BigFloat& s, const BigComplex& a) { return a * s; }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat d = b.re_ * b.re_ + b.im_ * b.im_;
    if (d.is_zero()) throw DomainError("complex division by zero");
    return BigComplex((a.re_ * b.re_ + a.im_ * b.im_) / d,
                      (a.im_ * b.re_ - a.re_ * b.im_) / d);
  }
  friend BigComplex operator/(const BigComplex& a, long b) {
    return BigComplex(a.re_ / b, a.im_ / b);
  }
  friend BigComplex operator*(const BigComplex& a, long b) {
    return BigComplex(a.re_ * b, a.im_ * b);
  }
  BigComplex operator-() const { return BigComplex(-re_, -im_); }
  BigComplex& operator+=(const BigComplex& b) { return *this = *this + b; }
  BigComplex& operator-=(const BigComplex& b) { return *this = *this - b; }
  BigComplex& operator*=(const BigComplex& b) { return *this = *this * b; }
  BigComplex& operator/=(const BigComplex& b) { return *this = *this / b; }

  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string to_string(int digits = 50) const {
    return re_.to_string(digits) + (im_.sgn() < 0 ? " - " : " + ") +
           abs(im_).to_string(digits) + "i";
  }

 private:
  BigFloat re_, im_;
};

BigComplex conj(const BigComplex& z);
BigFloat abs(const BigComplex& z);
BigFloat arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);
BigComplex sqrt(const BigComplex& z);
BigComplex sin(const BigComplex& z);
BigComplex pow(const BigComplex& z, const BigComplex& w);
BigComplex pow(const BigComplex& z, const Rational& r);
BigComplex polar(const BigFloat& mod, const BigFloat& ang);

/** exp(2*pi*i*r). */
BigComplex root_of_unity(const Rational& r, Prec prec);

/** Principal log shifted to a prescribed branch: log|z| + i*(arg z + 2*pi*k). */
BigComplex log_branch(const BigComplex& z, long k);

}  // namespace dwork
