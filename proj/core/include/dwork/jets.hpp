#pragma once

#include <cstddef>
#include <vector>

#include "dwork/errors.hpp"
#include "dwork/rational.hpp"

namespace dwork {

/**
 * Truncated polynomial in a nilpotent generator: T[eps]/(eps^len). Division
 * shifts out a common power of eps, so quotients of jets with matching
 * valuations stay in the ring; coefficients above index len-1-v are then
 * meaningless and callers must size jets with enough slack.
 */
template <class T>
class Jet {
 public:
  explicit Jet(std::size_t len) : c_(len, T()) {}
  static Jet constant(const T& v, std::size_t len) {
    Jet j(len);
    j.c_[0] = v;
    return j;
  }
  static Jet eps(std::size_t len, std::size_t power = 1) {
    Jet j(len);
    if (power < len) j.c_[power] = unit();
    return j;
  }

  std::size_t length() const { return c_.size(); }
  T& operator[](std::size_t i) { return c_[i]; }
  const T& operator[](std::size_t i) const { return c_[i]; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!(x == T())) return false;
    return true;
  }
  std::size_t valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!(c_[i] == T())) return i;
    return c_.size();
  }

  friend Jet operator+(const Jet& a, const Jet& b) {
    a.check(b);
    Jet r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
  }
  friend Jet operator-(const Jet& a, const Jet& b) {
    a.check(b);
    Jet r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
  }
  friend Jet operator*(const Jet& a, const Jet& b) {
    a.check(b);
    Jet r(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == T()) continue;
      for (std::size_t j = 0; i + j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  friend Jet operator*(const T& s, const Jet& a) {
    Jet r = a;
    for (auto& x : r.c_) x = s * x;
    return r;
  }
  Jet operator-() const {
    Jet r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = T() - c_[i];
    return r;
  }
  Jet& operator+=(const Jet& b) { return *this = *this + b; }
  Jet& operator-=(const Jet& b) { return *this = *this - b; }

  /**
   * Quotient after cancelling the denominator's leading eps power; requires
   * the numerator to vanish to at least that order.
   */
  Jet divide(const Jet& b) const {
    check(b);
    std::size_t v = b.valuation();
    if (v == b.length()) throw DomainError("jet division by zero");
    if (valuation() < v) throw DomainError("jet division with uncancelled pole");
    std::size_t n = c_.size();
    Jet r(n);
    // standard power-series division on the shifted arrays
    for (std::size_t i = 0; i + v < n; ++i) {
      T acc = c_[i + v];
      for (std::size_t j = 0; j < i; ++j) acc -= r.c_[j] * b.c_[v + i - j];
      r.c_[i] = acc / b.c_[v];
    }
    return r;
  }

 private:
  static T unit() { return T() + 1; }
  void check(const Jet& b) const {
    if (c_.size() != b.c_.size()) throw DimensionError("jet length mismatch");
  }
  std::vector<T> c_;
};

using QJet = Jet<Rational>;

}  // namespace dwork
