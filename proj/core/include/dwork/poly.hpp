#pragma once

#include <string>
#include <vector>

#include "dwork/errors.hpp"
#include "dwork/rational.hpp"

namespace dwork {

/** Dense univariate polynomial; zero polynomial has empty coefficient list. */
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
  static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
  static Poly monomial(const T& v, std::size_t k) {
    std::vector<T> c(k + 1, T());
    c[k] = v;
    return Poly(std::move(c));
  }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(); }
  const std::vector<T>& coeffs() const { return c_; }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  friend Poly operator*(const T& s, const Poly& a) {
    std::vector<T> c = a.c_;
    for (auto& x : c) x = s * x;
    return Poly(std::move(c));
  }
  Poly operator-() const {
    std::vector<T> c = c_;
    for (auto& x : c) x = T() - x;
    return Poly(std::move(c));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  T evaluate(const T& x) const {
    T r = T();
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> c(c_.size() - 1, T());
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(c));
  }

  /** p(x + s). */
  Poly shift(const T& s) const {
    Poly r;
    Poly lin(std::vector<T>{s, unit()});
    for (std::size_t i = c_.size(); i-- > 0;) r = r * lin + constant(c_[i]);
    return r;
  }

  /** Quotient and remainder; requires field coefficients. */
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    Poly q, r = *this;
    const T& lead = d.c_.back();
    while (!r.is_zero() && r.degree() >= d.degree()) {
      std::size_t k = r.degree() - d.degree();
      T f = r.c_.back() / lead;
      Poly t = monomial(f, k);
      q = q + t;
      r = r - t * d;
    }
    return {q, r};
  }

  std::string to_string(const std::string& var = "x") const;

 private:
  static T unit() { return T() + 1; }
  void trim() {
    while (!c_.empty() && c_.back() == T()) c_.pop_back();
  }
  std::vector<T> c_;
};

using QPoly = Poly<Rational>;

/** Monic gcd over the rationals. */
QPoly gcd(QPoly a, QPoly b);
QPoly lcm(const QPoly& a, const QPoly& b);
QPoly make_monic(const QPoly& p);

/**
 * Splits off every rational root (with multiplicity). Returns the roots and
 * the unfactored remainder; a full split leaves a constant remainder.
 */
std::pair<std::vector<Rational>, QPoly> rational_roots(QPoly p);

/** Stirling numbers of the second kind S(n,k): theta^n = sum_k S(n,k) x^k d^k. */
Int stirling2(unsigned n, unsigned k);

/** Falling factorial x(x-1)...(x-k+1) as a polynomial. */
QPoly falling_factorial(unsigned k);

std::string format_rational_coeff(const Rational& c, bool lead);

/** Quotient of rational polynomials, kept in lowest terms with monic denominator. */
class RatFun {
 public:
  RatFun() : num_(), den_(QPoly::constant(1)) {}
  RatFun(QPoly num, QPoly den);
  RatFun(const Rational& c) : num_(c == 0 ? QPoly() : QPoly::constant(c)), den_(QPoly::constant(1)) {}
  static RatFun variable() { return RatFun(QPoly::monomial(1, 1), QPoly::constant(1)); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw DomainError("rational function division by zero");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFun operator-() const { return RatFun(-num_, den_); }
  RatFun& operator+=(const RatFun& b) { return *this = *this + b; }
  RatFun& operator-=(const RatFun& b) { return *this = *this - b; }
  RatFun& operator*=(const RatFun& b) { return *this = *this * b; }
  RatFun& operator/=(const RatFun& b) { return *this = *this / b; }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  RatFun derivative() const {
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  Rational evaluate(const Rational& x) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  QPoly num_, den_;
};

// matrix-entry hooks
inline bool pivot_ok(const RatFun& x) { return !x.is_zero(); }
inline int pivot_cmp(const RatFun& a, const RatFun& b) {
  int sa = !a.is_zero(), sb = !b.is_zero();
  return sa - sb;
}
inline RatFun make_scalar(long v, const RatFun&) { return RatFun(rat(v)); }

}  // namespace dwork
