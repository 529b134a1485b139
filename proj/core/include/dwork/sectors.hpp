#pragma once

#include <map>
#include <string>
#include <vector>

#include "dwork/bigcomplex.hpp"
#include "dwork/rational.hpp"

namespace dwork {

/** Weight data of the Fermat polynomial sum z_i^(n+1) in n+1 variables. */
struct FermatData {
  int n = 2;
  Rational weight;     // 1/(n+1), same for every variable; weights sum to 1
  Int milnor_number;   // n^(n+1)
};

FermatData fermat_data(int n);

enum class SectorClass { Relevant, Marginal, Irrelevant };

/**
 * Grading data of the monomial z^m: the spectral value beta, its shift alpha
 * into (-1, 0], and the Hodge degree p = n + alpha - beta.
 */
struct SectorIndex {
  std::vector<int> m;
  Rational beta;    // sum m_i/(n+1)
  Rational alpha;   // beta - ceil(beta), in (-1, 0]
  long hodge_p = 0;
  SectorClass cls = SectorClass::Relevant;  // by beta: <1, =1, >1
};

/** The semisimple monodromy eigenvalue exp(-2 pi i beta) of the sector. */
BigComplex sector_eigenvalue(const SectorIndex& s, Prec prec);

SectorIndex sector_grading(const std::vector<int>& m, int n);

/** Multiplicities of the spectral values over the Jacobi-ring monomial basis. */
struct Spectrum {
  std::map<Rational, long> counts;
  Int total() const;
};

Spectrum spectrum(int n);

/**
 * One representative per orbit of the coordinate permutations acting on
 * exponent vectors in {0..n-1}^(n+1) with beta <= beta_max. Representatives
 * are sorted descending within the vector; the list is in ascending
 * lexicographic order.
 */
std::vector<SectorIndex> sector_orbits(int n, const Rational& beta_max);

std::string to_string(SectorClass c);

}  // namespace dwork
