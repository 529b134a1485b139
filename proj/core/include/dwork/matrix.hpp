#pragma once

#include <utility>
#include <vector>

#include "dwork/bigcomplex.hpp"
#include "dwork/errors.hpp"
#include "dwork/rational.hpp"

namespace dwork {

// Pivot selection and scalar embedding hooks; further entry types provide
// their own overloads (found through argument-dependent lookup).
inline bool pivot_ok(const Rational& x) { return x != 0; }
inline bool pivot_ok(const BigComplex& x) { return !x.is_zero(); }

// Partial pivoting needs a size comparison; for exact entries any nonzero
// pivot works so we only order by "nonzero beats zero".
inline int pivot_cmp(const Rational& a, const Rational& b) {
  int sa = a != 0, sb = b != 0;
  return sa - sb;
}
inline int pivot_cmp(const BigComplex& a, const BigComplex& b) {
  BigFloat na = abs(a), nb = abs(b);
  if (na < nb) return -1;
  if (nb < na) return 1;
  return 0;
}

inline Rational make_scalar(long v, const Rational&) { return Rational(v); }
inline BigComplex make_scalar(long v, const BigComplex& like) {
  return BigComplex(v, like.prec());
}

/** Dense square matrix over Rational or BigComplex entries. */
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, const T& fill = T()) : n_(n), e_(n * n, fill) {}

  static SquareMatrix identity(std::size_t n, const T& one) {
    SquareMatrix m(n, one - one);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t size() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

  friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
    a.check_same(b);
    SquareMatrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    return r;
  }
  friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
    a.check_same(b);
    SquareMatrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
  }
  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    a.check_same(b);
    SquareMatrix r(a.n_, a.e_.empty() ? T() : a.e_[0] - a.e_[0]);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        const T& aik = a(i, k);
        for (std::size_t j = 0; j < a.n_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend SquareMatrix operator*(const T& s, const SquareMatrix& a) {
    SquareMatrix r = a;
    for (auto& x : r.e_) x = s * x;
    return r;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != n_) throw DimensionError("matrix-vector size mismatch");
    std::vector<T> r(n_, e_.empty() ? T() : e_[0] - e_[0]);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  SquareMatrix transpose() const {
    SquareMatrix r(n_, e_.empty() ? T() : e_[0]);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  SquareMatrix pow(unsigned long k) const {
    SquareMatrix r = identity(n_, one_like());
    SquareMatrix b = *this;
    while (k) {
      if (k & 1) r = r * b;
      if (k >>= 1) b = b * b;
    }
    return r;
  }

  /** Gauss-Jordan inverse; throws DomainError if singular. */
  SquareMatrix inverse() const {
    SquareMatrix a = *this;
    SquareMatrix inv = identity(n_, one_like());
    for (std::size_t col = 0; col < n_; ++col) {
      std::size_t piv = col;
      for (std::size_t r = col + 1; r < n_; ++r)
        if (pivot_cmp(a(r, col), a(piv, col)) > 0) piv = r;
      if (!pivot_ok(a(piv, col))) throw DomainError("singular matrix");
      if (piv != col) {
        a.swap_rows(piv, col);
        inv.swap_rows(piv, col);
      }
      T d = a(col, col);
      for (std::size_t j = 0; j < n_; ++j) {
        a(col, j) = a(col, j) / d;
        inv(col, j) = inv(col, j) / d;
      }
      for (std::size_t r = 0; r < n_; ++r) {
        if (r == col) continue;
        T f = a(r, col);
        if (!pivot_ok(f)) continue;
        for (std::size_t j = 0; j < n_; ++j) {
          a(r, j) -= f * a(col, j);
          inv(r, j) -= f * inv(col, j);
        }
      }
    }
    return inv;
  }

  T trace() const {
    T s = zero_like();
    for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, i);
    return s;
  }

  /**
   * Characteristic polynomial det(tI - M) via Faddeev-LeVerrier.
   * Returns coefficients [c0, ..., cn] with cn = 1.
   */
  std::vector<T> char_poly() const {
    std::vector<T> c(n_ + 1, zero_like());
    c[n_] = one_like();
    SquareMatrix m(n_, zero_like());
    for (std::size_t k = 1; k <= n_; ++k) {
      m = (*this) * m;
      for (std::size_t i = 0; i < n_; ++i) m(i, i) += c[n_ - k + 1];
      T t = ((*this) * m).trace();
      c[n_ - k] = scale_by_neg_inv(t, static_cast<long>(k));
    }
    return c;
  }

  T det() const {
    std::vector<T> c = char_poly();
    return n_ % 2 == 0 ? c[0] : zero_like() - c[0];
  }

  T one_like() const { return make_scalar(1, e_.empty() ? T() : e_[0]); }
  T zero_like() const { return make_scalar(0, e_.empty() ? T() : e_[0]); }

 private:
  void check_same(const SquareMatrix& b) const {
    if (n_ != b.n_) throw DimensionError("matrix size mismatch");
  }
  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  static T scale_by_neg_inv(const T& t, long k) {
    return (make_scalar(-1, t) * t) / make_scalar(k, t);
  }

  std::size_t n_ = 0;
  std::vector<T> e_;
};

using RationalMatrix = SquareMatrix<Rational>;
using ComplexMatrix = SquareMatrix<BigComplex>;

/** Largest |entry|; the norm used for matrix identity tolerances. */
inline BigFloat max_abs_entry(const ComplexMatrix& m) {
  BigFloat best(0, kMinPrec);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      BigFloat a = abs(m(i, j));
      if (best < a) best = a;
    }
  return best;
}

/** max |(A - B)_{ij}|. */
inline BigFloat matrix_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  return max_abs_entry(a - b);
}

inline ComplexMatrix to_complex(const RationalMatrix& m, Prec prec) {
  ComplexMatrix r(m.size(), BigComplex(prec));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = BigComplex(m(i, j), prec);
  return r;
}

}  // namespace dwork
