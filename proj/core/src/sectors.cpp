#include "dwork/sectors.hpp"

#include <algorithm>

#include "dwork/errors.hpp"

namespace dwork {

FermatData fermat_data(int n) {
  if (n < 2) throw DomainError("need n >= 2");
  FermatData d;
  d.n = n;
  d.weight = rat(1, n + 1);
  mpz_ui_pow_ui(d.milnor_number.get_mpz_t(), n, n + 1);
  return d;
}

BigComplex sector_eigenvalue(const SectorIndex& s, Prec prec) {
  return root_of_unity(-s.beta, prec);
}

SectorIndex sector_grading(const std::vector<int>& m, int n) {
  if (n < 2) throw DomainError("need n >= 2");
  if (m.size() != static_cast<std::size_t>(n + 1))
    throw DimensionError("exponent vector must have length n+1");
  SectorIndex s;
  s.m = m;
  long sum = 0;
  for (int mi : m) {
    if (mi < 0) throw DomainError("exponents must be nonnegative");
    sum += mi;
  }
  s.beta = rat(sum, n + 1);
  s.alpha = s.beta - Rational(ceil_int(s.beta));
  Rational p = Rational(n) + s.alpha - s.beta;
  s.hodge_p = to_long(p);
  s.cls = s.beta < 1 ? SectorClass::Relevant
                     : (s.beta == 1 ? SectorClass::Marginal : SectorClass::Irrelevant);
  return s;
}

Int Spectrum::total() const {
  Int t = 0;
  for (auto& [beta, k] : counts) t += k;
  return t;
}

Spectrum spectrum(int n) {
  if (n < 2) throw DomainError("need n >= 2");
  Spectrum sp;
  std::vector<int> m(n + 1, 0);
  for (;;) {
    long sum = 0;
    for (int mi : m) sum += mi;
    sp.counts[rat(sum, n + 1)] += 1;
    int i = 0;
    while (i <= n && m[i] == n - 1) m[i++] = 0;
    if (i > n) break;
    ++m[i];
  }
  return sp;
}

std::vector<SectorIndex> sector_orbits(int n, const Rational& beta_max) {
  if (n < 2) throw DomainError("need n >= 2");
  std::vector<std::vector<int>> reps;
  std::vector<int> cur(n + 1, 0);
  Rational limit = beta_max * (n + 1);
  // descending exponent vectors within the Jacobi-ring box
  auto rec = [&](auto&& self, int pos, int cap, long sum) -> void {
    if (Rational(sum) > limit) return;
    if (pos == n + 1) {
      reps.push_back(cur);
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      cur[pos] = v;
      self(self, pos + 1, v, sum + v);
    }
    cur[pos] = 0;
  };
  // prune by sum as we go: smallest completion of a prefix adds zero, so the
  // check at entry is exact for descending vectors
  rec(rec, 0, n - 1, 0);
  std::sort(reps.begin(), reps.end());
  std::vector<SectorIndex> out;
  out.reserve(reps.size());
  for (auto& r : reps) {
    std::vector<int> desc = r;
    std::sort(desc.rbegin(), desc.rend());
    SectorIndex s = sector_grading(desc, n);
    if (s.beta <= beta_max) out.push_back(std::move(s));
  }
  return out;
}

std::string to_string(SectorClass c) {
  switch (c) {
    case SectorClass::Relevant: return "relevant";
    case SectorClass::Marginal: return "marginal";
    default: return "irrelevant";
  }
}

}  // namespace dwork
