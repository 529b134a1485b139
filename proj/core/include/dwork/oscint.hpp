#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "dwork/bigcomplex.hpp"
#include "dwork/rational.hpp"

namespace dwork {

/**
 * Index of a relative homology class gamma_h = prod_i (1 - xi^{h_i}) c_i,
 * where c_i is the ray from 0 to +infinity in the i-th coordinate and
 * xi = exp(2 pi i / (n+1)). Each h_i lies in {1..n}.
 */
struct ThimbleIndex {
  std::vector<int> h;
};

struct OscillatingValue {
  BigComplex value;
  long terms_used = 0;
  BigFloat tail_bound;
};

/**
 * Pairing of exp(-f_a) z^m Omega with the class gamma_h, evaluated as the
 * power series
 *
 *   sum_{d >= 0} prod_i (1 - xi^{h_i (d+m_i+1)}) Gamma((d+m_i+1)/(n+1)) a^d/d!
 *
 * summed until the rigorous tail bound drops below tol. The coefficients
 * decay like (n+1)^{-d}, so the series converges on |a| < n+1 only;
 * arguments outside that disk throw DomainError.
 */
OscillatingValue oscillating_series(int n, const std::vector<int>& m, const ThimbleIndex& h,
                                    const BigComplex& a, const BigFloat& tol);

/** Residues delta in {0..n} with delta + m_i + 1 != 0 mod (n+1) for all i. */
std::vector<long> admissible_deltas(int n, const std::vector<int>& m);

/**
 * Closed form of the residue class d = (n+1) l + delta of the series above:
 *
 *   prod_i (1 - xi^{h_i (delta+m_i+1)}) (2 pi)^{n/2} (n+1)^{-delta-1/2} a^delta
 *     * sum_l [prod_i Gamma(l+u_i) / prod_{j=1}^{n+1} Gamma(l+(delta+j)/(n+1))] b^l
 *
 * with u_i = (delta+m_i+1)/(n+1) and b = a^{n+1}/(n+1)^{n+1}; the Gauss
 * multiplication formula turns the factorial of the direct series into the
 * denominator Gammas. Summing over admissible deltas recovers
 * oscillating_series. Throws InadmissibleDelta when some delta + m_i + 1
 * vanishes mod n+1.
 */
BigComplex gamma_closed_form(int n, const std::vector<int>& m, const ThimbleIndex& h, long delta,
                             const BigComplex& a, const BigFloat& tol);

/** Character mod 3 with values 0, 1, -1 on residues 0, 1, 2. */
int chi_minus3(long k);

/**
 * Exact arithmetic in Z[x]/(x^4 - x^2 + 1), the ring of integers of the
 * cyclotomic field generated by x = exp(2 pi i / 12).
 */
struct Cyclotomic12 {
  std::array<long, 4> c{};

  static Cyclotomic12 integer(long v) { return Cyclotomic12{{v, 0, 0, 0}}; }
  /** x^e for any integer e (reduced mod 12). */
  static Cyclotomic12 root_power(long e);
  /** sqrt(3) = x + x^11. */
  static Cyclotomic12 sqrt3() { return Cyclotomic12{{0, 2, 0, -1}}; }

  bool operator==(const Cyclotomic12&) const = default;
  Cyclotomic12 operator*(const Cyclotomic12& o) const;
  Cyclotomic12 operator-(const Cyclotomic12& o) const;
  /** Complex conjugate (x -> x^-1). */
  Cyclotomic12 bar() const;
  BigComplex to_complex(Prec prec) const;
};

struct RealSpanCoefficient {
  std::array<int, 3> h;
  BigComplex coefficient;
};

/**
 * Coefficients mu x^{-s(h)} + conj(mu) x^{s(h)}, s(h) = chi(h).chi(m+1),
 * of the real span element attached to the cubic sector pair (m, 1-m),
 * listed over h in {0,1,2}^3 in lexicographic order.
 *
 * Before returning, the construction is cross-checked: the factor identity
 * 1 - xi_3^k = sqrt(3) x^{-chi(k)} and its product form hold exactly in
 * Cyclotomic12 for every factor arising from (h, m), and the conjugation
 * pairing between the sectors m and 1-m holds numerically at a sample a
 * (series values normalized by the closed-form scalar). m outside {0,1}^3
 * throws DomainError.
 */
std::vector<RealSpanCoefficient> cubic_real_structure(const BigComplex& mu,
                                                      const std::array<int, 3>& m);

void write_oscillating_csv_header(std::ostream& os);
void write_oscillating_csv_row(std::ostream& os, const std::vector<int>& m, const ThimbleIndex& h,
                               const BigComplex& a, const BigComplex& value,
                               const std::string& method);

}  // namespace dwork
