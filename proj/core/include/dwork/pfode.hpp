#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dwork/poly.hpp"
#include "dwork/rational.hpp"

namespace dwork {

/**
 * Hypergeometric operator in theta form,
 *
 *   L(theta) - scale * x^monomial_power * U(theta),
 *
 * where L = prod_j (theta + lower[j]) and U = prod_i (theta + upper[i]).
 * Parameter multisets are kept sorted ascending.
 */
struct ThetaOperator {
  char variable = 'a';
  std::vector<Rational> lower;
  std::vector<Rational> upper;
  Rational scale = 1;
  long monomial_power = 1;

  std::size_t order() const { return lower.size(); }

  /** Exponents of local solutions at x = 0 (roots of L(rho) = 0). */
  std::vector<Rational> exponents_at_zero() const;
  /** Exponents of local solutions at x = infinity (roots of U). */
  std::vector<Rational> exponents_at_infinity() const;

  std::string pretty() const;
  std::string to_json_string() const;
};

bool operator==(const ThetaOperator& a, const ThetaOperator& b);

struct ReductionCertificate {
  std::vector<std::pair<Rational, Rational>> cancelled_pairs;  // (upper, lower)
  long reduced_order = 0;
};

/** The order-(n+1) annihilator of the sector z^m period, in the deformation variable. */
ThetaOperator pf_operator(int n, const std::vector<int>& m);

/**
 * Cancels pairs (u, l) with u - l = monomial_power; such a pair drops out of
 * the term ratio of every surviving power-series branch. The lexicographically
 * smallest pair is removed first.
 */
std::pair<ThetaOperator, ReductionCertificate> reduce(const ThetaOperator& op);

/**
 * Substitutes x_new = scale * x^monomial_power, dividing all parameters by the
 * monomial power; result has scale 1 and power 1. Operators already in the
 * rescaled variable are returned unchanged.
 */
ThetaOperator base_change_to_b(const ThetaOperator& op);

/** Solutions multiplied by x^s; parameters shift by -s. */
ThetaOperator twist(const ThetaOperator& op, const Rational& s);

/** Variable inversion x -> 1/x; swaps and negates the parameter multisets. */
ThetaOperator invert(const ThetaOperator& op);

/** Substitutes x -> c * x; multiplies scale by c^monomial_power. */
ThetaOperator rescale(const ThetaOperator& op, const Rational& c, char new_variable);

/**
 * Checks the contiguity identity relating the reduced operators of m and m+1:
 * composing the m+1 operator with d/dx equals composing (theta - n - 1)/x with
 * the m operator, and d/dx maps solutions of the former to the latter.
 * Returns true or throws VerificationFailed with the first bad coefficient.
 */
bool shift_relation_check(int n, const std::vector<int>& m, int trunc);

/**
 * Operator annihilating all k-fold products of solutions of the given
 * order-2 operator, via the cyclic-vector construction on the symmetric
 * power of the companion system.
 */
ThetaOperator symmetric_power(const ThetaOperator& op, int k);

/** Coefficient polynomials Q_j with op = sum_j Q_j(x) d^j (ordinary form). */
std::vector<QPoly> to_d_form(const ThetaOperator& op);

/**
 * Regroups sum_j Q_j(x) d^j as sum_s x^s g_s(theta); keys are the monomial
 * shifts s (possibly negative), zero layers dropped.
 */
std::map<long, QPoly> theta_layers(const std::vector<QPoly>& dform);

}  // namespace dwork
