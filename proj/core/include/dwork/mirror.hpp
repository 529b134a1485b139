#pragma once

#include <array>
#include <string>
#include <vector>

#include "dwork/frobenius.hpp"
#include "dwork/pfode.hpp"
#include "dwork/rational.hpp"

namespace dwork {

/**
 * Ambient cohomology-valued series I/zeta = e^{eps t} sum_d e^{dt} a_d(eps)
 * with eps = P/zeta nilpotent of order trunc_eps + 1 (P^4 = 0 in the ambient
 * P^3). a[d][s] is the coefficient of eps^s in a_d.
 */
struct CohSeries {
  long trunc_q = 0;
  int trunc_eps = 3;
  std::vector<std::vector<Rational>> a;

  /** Coefficients of eps^s in a_d, d = 0..trunc_q. */
  std::vector<Rational> eps_slice(int s) const;
  std::vector<Rational> scalar_slice() const { return eps_slice(0); }
};

/** Quartic hypersurface I-function; throws TruncationError if trunc_eps > 3. */
CohSeries i_function_quartic(long trunc_q, int trunc_eps = 3);

struct QdeReport {
  bool ok = false;
  long first_bad_d = -1;
  int first_bad_eps = -1;
  Rational coefficient;
};

/**
 * Applies the quantum differential operator d^3 - 4^4 e^t (d+1/4)(d+2/4)(d+3/4),
 * d = d/dt, to the series. Passes when the residual is exactly the constant
 * eps^3 term coming from the d = 0 boundary: every component beyond the
 * P^3-term must vanish through e^{t*trunc}.
 */
QdeReport qde_check(const CohSeries& s, long trunc);

struct MirrorMap {
  long trunc = 0;
  std::vector<Rational> t_correction;  // T = t + sum_{d>=1} t_correction[d] e^{dt}
  std::vector<Rational> f;             // scalar slice F(t)
  Rational j_leading;                  // leading normalization of J = I/F
};

MirrorMap mirror_map_quartic(long trunc);

/** Sector label of the monomial x1^k1 x2^k2 x3^k3 (weights 1,2,3 over 4). */
Rational minimal_sector_label(long k1, long k2, long k3);

struct MinimalTerm {
  std::array<long, 3> k;
  Rational label;
  long zeta_shift;  // power of 1/zeta carried by the x-monomial
  std::vector<std::vector<Rational>> a;
};

struct MinimalTwisted {
  long trunc = 0;
  std::vector<MinimalTerm> terms;
};

/** Twisted I-function of the minimal quotient, truncated in q-degree and total x-degree. */
MinimalTwisted i_tw_minimal(long trunc);

/** Coefficient-wise check that the twisted series factors as I * exponential factor. */
bool minimal_factorization_check(const MinimalTwisted& tw, const CohSeries& untwisted);

/**
 * One inertia component of the maximal-quotient twisted I-function: the terms
 * with d in d0 + Z_{>=0}. The sector label b and the zeta-grading are constant
 * along the component, and eps is nilpotent of order `nilpotency` (the number
 * of zero labels, i.e. the component is supported on a P^{nilpotency-1}).
 */
struct TwistedComponent {
  Rational d0;
  std::array<Rational, 4> b;
  int nilpotency = 0;
  Rational zeta_weight;  // fractional zeta-grading label
  std::vector<std::vector<Rational>> terms;  // terms[i][s]: eps^s at d = d0 + i
};

struct TwistedSector {
  std::array<int, 4> k;
  long trunc = 0;
  int function_count = 0;
  std::vector<TwistedComponent> components;
};

/** Component decomposition of the twisted I-function for sector k. */
TwistedSector i_tw_maximal(const std::array<int, 4>& k, long trunc);

/** Number of coincidences among the four sector series: 4 - #distinct(k_j mod 4). */
int sector_function_count(const std::array<int, 4>& k);

/** The term at degree d evaluated at a scalar eps, with no nilpotency truncation. */
Rational maximal_term_value(const std::array<int, 4>& k, const Rational& d, const Rational& eps);

/** The theta form of the differential equation satisfied by sector k, in the b variable. */
ThetaOperator maximal_sector_operator(const std::array<int, 4>& k);

struct OdeReport {
  bool ok = false;
  Rational first_bad_d;
  int first_bad_eps = -1;
  Rational coefficient;
};

/**
 * Verifies prod_j(d - k_j/4) I = 4^4 e^t prod_i(d + i/4) I termwise on every
 * component, including the boundary term at d0, exactly.
 */
OdeReport maximal_ode_check(const TwistedSector& s);

/**
 * Verifies that shifting k by (1,1,1,1) multiplies each component term by
 * 4(eps + d + 1/4) and preserves labels, nilpotency and zeta-grading; the
 * extra leading term appearing on components wrapping past d = 0 must vanish.
 */
bool maximal_shift_check(const std::array<int, 4>& k, long trunc);

struct CensusBuckets {
  long surfaces = 0;
  long curves = 0;
  long points = 0;
  long classes = 0;
  long total = 0;
};

/** Inertia-component census of the maximal quotient over the 64 sector classes. */
CensusBuckets chen_ruan_census();

/** Total Chen-Ruan cohomology dimension from the census. */
long chen_ruan_dimension();

struct YYState {
  std::vector<ExactLogSeries> basis;  // I_0..I_3, Frobenius-ordered
  std::vector<Rational> c;            // series coefficients of 5/(1 - 5^5 z)
};

/** Frobenius data of the quintic operator in the 5^5-scaled variable. */
YYState yy_state(long trunc);

struct CheckReport {
  std::string name;
  long trunc = 0;
  double residual_norm = 0.0;
  bool verdict = false;
  std::string detail;
};

/**
 * Verifies the three special-geometry relations among I_0, T = I_1/I_0,
 * I_{2,0}, I_{3,0} for the quintic, and the closure of the differential ring
 * generated by I_0'/I_0, I_0''/I_0, I_0'''/I_0, T''/T' under d/dz.
 */
std::vector<CheckReport> yy_check(long trunc);

}  // namespace dwork
