#include "dwork/gamma.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace dwork {

namespace {

struct SpougeTable {
  long a = 0;
  Prec wp = 0;
  std::vector<BigFloat> c;  // c[0] = sqrt(2 pi), c[k] for k = 1..a-1
};

// Spouge error is roughly a^(-1/2) (2 pi)^(-(a + 1/2)); pick a so that the
// bound clears the contractual 2^(8 - prec) with margin.
long spouge_terms(Prec prec) {
  const double ln2_over_ln2pi = 0.37732179508770956;
  return static_cast<long>(std::ceil((prec + 16) * ln2_over_ln2pi)) + 3;
}

// The coefficients alternate in sign and peak around 2^(1.84 a); the sum
// cancels down to O(1) in the worst case, so the working precision must
// absorb the whole peak.
long spouge_guard_bits(long a) {
  double peak = 0;
  for (long k = 1; k < a; ++k) {
    double ln = (a - k) + (k - 0.5) * std::log(static_cast<double>(a - k)) - std::lgamma(k);
    if (ln > peak) peak = ln;
  }
  return static_cast<long>(std::ceil(peak / std::log(2.0))) + 64;
}

std::shared_ptr<const SpougeTable> spouge_table(Prec prec) {
  static std::mutex mu;
  static std::map<Prec, std::shared_ptr<const SpougeTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(prec);
  if (it != cache.end()) return it->second;

  auto t = std::make_shared<SpougeTable>();
  t->a = spouge_terms(prec);
  t->wp = prec + spouge_guard_bits(t->a);
  t->c.reserve(t->a);
  BigFloat two_pi = pi(t->wp) * 2;
  t->c.push_back(sqrt(two_pi));
  BigFloat fact(1, t->wp);
  for (long k = 1; k < t->a; ++k) {
    if (k > 1) fact = fact * (k - 1);
    BigFloat ak(t->a - k, t->wp);
    BigFloat term = exp((BigFloat(k, t->wp) - BigFloat(rat(1, 2), t->wp)) * log(ak) + ak) / fact;
    t->c.push_back(k % 2 == 1 ? term : -term);
  }
  cache[prec] = t;
  return t;
}

// Spouge sum for Gamma(w + 1), valid for Re w > -1.
BigComplex gamma_shifted(const BigComplex& w, const SpougeTable& t) {
  Prec wp = t.wp;
  BigComplex s(t.c[0]);
  for (long k = 1; k < t.a; ++k) s += BigComplex(t.c[k]) / (w + BigComplex(k, wp));
  BigComplex wa = w + BigComplex(t.a, wp);
  BigComplex half(rat(1, 2), wp);
  return exp((w + half) * log(wa) - wa) * s;
}

}  // namespace

BigComplex gamma(const BigComplex& z, Prec prec) {
  checked_prec(prec);
  if (z.is_real() && z.re().is_integer() && z.re().sgn() <= 0)
    throw PoleError("gamma pole at " + z.re().to_string(8));

  auto t = spouge_table(prec);
  Prec wp = t->wp;
  BigComplex zz = z.round_to(wp);
  if (z.re() < BigFloat(rat(1, 2), kMinPrec)) {
    // Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
    BigComplex g = gamma_shifted(-zz, *t);  // Gamma(1 - z)
    BigComplex pz = BigComplex(pi(wp)) * zz;
    return (BigComplex(pi(wp)) / (sin(pz) * g)).round_to(prec);
  }
  return (gamma_shifted(zz - BigComplex(1, wp), *t)).round_to(prec);
}

BigComplex gamma(const Rational& q, Prec prec) { return gamma(BigComplex(q, prec), prec); }

BigComplex pochhammer(const BigComplex& z, unsigned long k) {
  BigComplex r(1, z.prec());
  for (unsigned long j = 0; j < k; ++j) r *= z + BigComplex(static_cast<long>(j), z.prec());
  return r;
}

Rational pochhammer(const Rational& q, unsigned long k) {
  Rational r = 1;
  for (unsigned long j = 0; j < k; ++j) r *= q + Rational(static_cast<long>(j));
  return r;
}

}  // namespace dwork
