#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "dwork/errors.hpp"

namespace dwork {

using Int = mpz_class;
using Rational = mpq_class;

/** Rational p/q in lowest terms with positive denominator. */
inline Rational rat(long p, long q = 1) {
  if (q == 0) throw DomainError("rational with zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline Rational rat(const Int& p, const Int& q) {
  if (q == 0) throw DomainError("rational with zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/** Largest integer <= r. */
inline Int floor_int(const Rational& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

/** Smallest integer >= r. */
inline Int ceil_int(const Rational& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

/** Fractional part in [0,1). */
inline Rational frac_part(const Rational& r) { return r - Rational(floor_int(r)); }

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline long to_long(const Int& z) {
  if (!z.fits_slong_p()) throw DomainError("integer out of long range");
  return z.get_si();
}

inline long to_long(const Rational& r) {
  if (!is_integer(r)) throw DomainError("rational is not an integer: " + r.get_str());
  return to_long(Int(r.get_num()));
}

/** Parses "p/q" or "p". */
inline Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw DomainError("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

inline Rational sum(const std::vector<Rational>& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

}  // namespace dwork
