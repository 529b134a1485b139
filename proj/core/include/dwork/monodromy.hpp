#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "dwork/frobenius.hpp"
#include "dwork/matrix.hpp"
#include "dwork/pfode.hpp"
#include "dwork/rational.hpp"

namespace dwork {

/** Marker for a projective order that exceeds every finite cap. */
inline constexpr long kInfiniteOrder = -1;

std::string order_to_string(long order);

/**
 * Discretized continuation path. Consecutive centers c_k, c_{k+1} must obey
 * |c_{k+1} - c_k| <= step_safety * dist(c_k, S) where S is the finite
 * singular set of the operator being continued, so each Taylor re-expansion
 * converges with a uniform geometric margin.
 */
struct PathPlan {
  std::vector<BigComplex> centers;
  double step_safety = 0.5;
};

/**
 * Loop from the basepoint around one of the three singular points of a
 * power-one, scale-one operator (0, 1, or infinity), traversed once
 * counterclockwise: an inbound walk, a circle of radius 1/8 (radius 8 for
 * the point at infinity, entered from above through 8i) split into sixteen
 * arcs, and the same walk reversed. The basepoint and circle entry reappear
 * exactly, so composing loop transfer matrices is meaningful.
 */
PathPlan plan_loop(Point s, const BigComplex& basepoint, Prec prec);

/** Straight walk between two ordinary points, subdivided into safe steps;
    detours below 0 or 1 when the segment would pass too close. */
PathPlan plan_route(const BigComplex& from, const BigComplex& to, Prec prec);

/**
 * Transfer matrix of analytic continuation of `basis` along `path`.
 *
 * The path must start inside the disk of `basis` and end inside the disk of
 * the end frame, which is `basis` again when `target` is null (the loop
 * case) or `*target` for a connection problem. Columns follow the order of
 * the solutions; continuing the row vector F of basis solutions along the
 * path yields F' = F * M at the end frame. Throws StepTooClose when a step
 * violates the path invariant and PrecisionExhausted when a Taylor tail
 * refuses to clear the precision-derived tolerance.
 */
ComplexMatrix continue_basis(const ThetaOperator& op, const FrobeniusBasis& basis,
                             const PathPlan& path,
                             const FrobeniusBasis* target = nullptr);

/** Continuation of the scalar b^e0 * (1-b)^e1 along a path: returns the
    ratio end/start picked up by following the branch continuously. Along a
    loop this is the factor a twist contributes to the loop's monodromy. */
BigComplex scalar_continuation(const PathPlan& path, const Rational& e0,
                               const Rational& e1, Prec prec);

/**
 * Monodromy representation in a Frobenius basis at the origin: matrices for
 * the positively oriented loops around 0, 1 and infinity based at
 * `basepoint`, satisfying Minf * M1 * M0 = I up to the recorded residual.
 * Eigenvalues of M0 are exp(2*pi*i*rho) over the local exponents rho at 0.
 */
struct MonodromyRep {
  BigComplex basepoint;
  ComplexMatrix M0;
  ComplexMatrix M1;
  ComplexMatrix Minf;
  std::array<long, 3> orders{};
  BigFloat relation_residual;

  std::string to_json_string() const;
};

/** Projective orders (l0, l1, linf) of the three local monodromies. */
struct Signature {
  long l0 = 0;
  long l1 = 0;
  long linf = 0;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.l0 == b.l0 && a.l1 == b.l1 && a.linf == b.linf;
  }
  std::string to_string() const;
};

MonodromyRep monodromy_rep(const ThetaOperator& op, const BigComplex& basepoint,
                           Prec prec = kDefaultPrec);

/** Same, based at the default basepoint 2/5. */
MonodromyRep monodromy_rep(const ThetaOperator& op, Prec prec = kDefaultPrec);

/**
 * Least l <= cap with M^l a scalar matrix (entrywise tolerance
 * 2^(64 - precision) after dividing by the leading diagonal entry), or
 * kInfiniteOrder. A 1x1 matrix is ordered by its scalar: least l with
 * M^l = 1, so that a rank-one representation still records its finite
 * rotation content.
 */
long projective_order(const ComplexMatrix& M, long cap = 64);

/** Signature of an operator's monodromy representation at basepoint 2/5. */
Signature signature(const ThetaOperator& op, Prec prec = kDefaultPrec);

/**
 * Companion matrices (A, B) of prod(t - exp(2*pi*i*u)) over the upper and
 * prod(t - exp(2*pi*i*l)) over the lower parameters. When no difference
 * u - l is an integer these generate the monodromy group of the
 * hypergeometric operator with those parameters, with A conjugate to the
 * loop at infinity and B^{-1} to the loop at 0. Throws ReducibleParameters
 * when some difference is an integer.
 */
std::pair<ComplexMatrix, ComplexMatrix> levelt_generators(
    const std::vector<Rational>& upper, const std::vector<Rational>& lower,
    Prec prec = kDefaultPrec);

}  // namespace dwork
