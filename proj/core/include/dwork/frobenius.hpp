#pragma once

#include <string>
#include <vector>

#include "dwork/bigcomplex.hpp"
#include "dwork/pfode.hpp"
#include "dwork/rational.hpp"

namespace dwork {

enum class Point { Zero, One, Infinity };

std::string to_string(Point p);

/**
 * Local solution sum_{j<=L} log(x)^j x^rho sum_k c[j][k] x^k in the local
 * coordinate of the expansion point (x, x - x1, or 1/x). The top log row
 * starts with a nonzero constant term; the basis normalization puts
 * c[L][0] = 1/L!.
 */
struct LogSeries {
  Rational exponent;
  int log_degree = 0;
  long trunc = 0;
  std::vector<std::vector<BigComplex>> coeffs;

  std::string to_json_string() const;
};

/** Same data with exact rational coefficients, before casting. */
struct ExactLogSeries {
  Rational exponent;
  long trunc = 0;
  std::vector<std::vector<Rational>> coeffs;

  int log_degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

struct FrobeniusBasis {
  Point point = Point::Zero;
  std::vector<LogSeries> solutions;
  BigFloat radius;
};

/**
 * Local exponents: at 0 the roots of L(rho), at infinity the roots of U, at
 * the finite nonzero singular point the residual exponents fixed by the Fuchs
 * relation (total over the three points = order*(order-1)/2).
 */
std::vector<Rational> indicial_roots(const ThetaOperator& op, Point point);

/**
 * Full local basis by the Frobenius method, log terms included when indicial
 * roots repeat or differ by integers. Solutions are ordered by ascending
 * exponent, then ascending log degree; coefficients are exact.
 */
std::vector<ExactLogSeries> frobenius_basis_exact(const ThetaOperator& op, Point point,
                                                  long trunc);

/** Exact basis cast to floating point, with the guaranteed convergence radius. */
FrobeniusBasis frobenius_basis(const ThetaOperator& op, Point point, long trunc = 200,
                               Prec prec = kDefaultPrec);

/** Applies the operator, written in the local coordinate of the point, exactly. */
ExactLogSeries apply_operator(const ThetaOperator& op, const ExactLogSeries& s,
                              Point point = Point::Zero);

/** Largest k with a nonzero coefficient, or -1; rows above the top log row count. */
long first_nonzero_order(const ExactLogSeries& s);

BigComplex eval_log_series(const LogSeries& s, const BigComplex& x);

/**
 * Partial sum of sum_k prod_i (upper_i)_k / prod_j (lower_j)_k z^k through
 * k = trunc, for |z| < 1 - margin. A geometric a posteriori tail bound is
 * written to *tail_bound when given; TruncationError if no such bound closes.
 */
BigComplex eval_rgs(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                    const BigComplex& z, long trunc, BigFloat* tail_bound = nullptr,
                    double margin = 0.05);

}  // namespace dwork
