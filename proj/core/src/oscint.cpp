#include "dwork/oscint.hpp"

#include <ostream>

#include "dwork/errors.hpp"
#include "dwork/gamma.hpp"

namespace dwork {

namespace {

void validate_sector(int n, const std::vector<int>& m) {
  if (n < 1) throw DomainError("dimension n must be at least 1");
  if (m.size() != static_cast<std::size_t>(n) + 1)
    throw DomainError("sector index needs n+1 components");
  for (int mi : m)
    if (mi < 0) throw DomainError("sector exponents must be nonnegative");
}

void validate_thimble(int n, const ThimbleIndex& h) {
  if (h.h.size() != static_cast<std::size_t>(n) + 1)
    throw DomainError("thimble index needs n+1 components");
  for (int hi : h.h)
    if (hi < 1 || hi > n) throw DomainError("thimble components lie in 1..n");
}

void validate_radius(int n, const BigComplex& a) {
  const BigFloat margin = BigFloat(n + 1, a.prec()) * BigFloat(rat(1023, 1024), a.prec());
  if (!(abs(a) < margin)) throw DomainError("series diverges: |a| must stay below n+1");
}

/** 1 - xi^e for e = 0..n, xi = exp(2 pi i/(n+1)). */
std::vector<BigComplex> one_minus_root_powers(int n, Prec prec) {
  std::vector<BigComplex> v;
  const BigComplex one(1L, prec);
  for (int e = 0; e <= n; ++e) v.push_back(one - root_of_unity(rat(e, n + 1), prec));
  return v;
}

/**
 * The h-independent scalar of the residue-delta component: the closed form
 * of gamma_closed_form with the thimble prefactor divided out.
 */
BigComplex delta_series(int n, const std::vector<int>& m, long delta, const BigComplex& a,
                        const BigFloat& tol) {
  const Prec prec = a.prec();
  const int p = n + 1;

  BigComplex b(1L, prec);
  const BigComplex a_scaled = a / p;
  for (int k = 0; k < p; ++k) b = b * a_scaled;
  const BigFloat xb = abs(b);

  // (2 pi)^{n/2} (n+1)^{-delta-1/2}
  const BigFloat two_pi = pi(prec) * BigFloat(2L, prec);
  BigFloat pref = pow_si(two_pi, n / 2);
  if (n % 2) pref = pref * sqrt(two_pi);
  pref = pref / (pow_si(BigFloat(p, prec), delta) * sqrt(BigFloat(p, prec)));

  BigComplex adelta(1L, prec);
  for (long k = 0; k < delta; ++k) adelta = adelta * a;

  // term_0 = prod Gamma(u_i) / prod_{j=1..n+1} Gamma((delta+j)/(n+1))
  BigComplex term(1L, prec);
  for (int mi : m) term = term * gamma(rat(delta + mi + 1, p), prec);
  for (int j = 1; j <= p; ++j) term = term / gamma(rat(delta + j, p), prec);

  int mmax = 0;
  for (int mi : m) mmax = mmax < mi ? mi : mmax;
  const Rational umax = rat(delta + mmax + 1, p);
  const Rational bmin = rat(delta + 1, p);

  BigComplex sum(0L, prec);
  for (long l = 0;; ++l) {
    sum = sum + term;
    // per-term ratio is b * prod(l+u_i)/prod(l+beta_j), majorized below
    const BigFloat grow =
        BigFloat(Rational(Rational(l) + umax), prec) / BigFloat(Rational(Rational(l) + bmin), prec);
    const BigFloat q = xb * pow_si(grow, p);
    if (l >= 4 && q < BigFloat(1L, prec)) {
      const BigFloat tail = abs(term) * q / (BigFloat(1L, prec) - q);
      if (tail < tol) break;
    }
    if (l > 200000) throw PrecisionExhausted("delta component series did not meet tolerance");
    Int num = 1, den = 1;
    for (int mi : m) num *= p * l + delta + mi + 1;
    for (int j = 1; j <= p; ++j) den *= p * l + delta + j;
    term = term * b * BigFloat(rat(num, den), prec);
  }
  return (pref * adelta) * sum;
}

BigComplex thimble_prefactor(int n, const std::vector<int>& m, const ThimbleIndex& h, long shift,
                             const std::vector<BigComplex>& one_minus, Prec prec) {
  BigComplex pref(1L, prec);
  for (std::size_t i = 0; i < m.size(); ++i)
    pref = pref * one_minus[(h.h[i] * (shift + m[i] + 1)) % (n + 1)];
  return pref;
}

}  // namespace

std::vector<long> admissible_deltas(int n, const std::vector<int>& m) {
  validate_sector(n, m);
  std::vector<long> out;
  for (long d = 0; d <= n; ++d) {
    bool ok = true;
    for (int mi : m)
      if ((d + mi + 1) % (n + 1) == 0) ok = false;
    if (ok) out.push_back(d);
  }
  return out;
}

OscillatingValue oscillating_series(int n, const std::vector<int>& m, const ThimbleIndex& h,
                                    const BigComplex& a, const BigFloat& tol) {
  validate_sector(n, m);
  validate_thimble(n, h);
  validate_radius(n, a);
  const Prec prec = a.prec();
  const int p = n + 1;
  const auto one_minus = one_minus_root_powers(n, prec);

  int mmax = 0;
  for (int mi : m) mmax = mmax < mi ? mi : mmax;

  // gam[s] = Gamma(s/p), extended by Gamma(z+1) = z Gamma(z)
  std::vector<BigFloat> gam;
  gam.push_back(BigFloat(prec));  // unused s = 0 slot
  for (int s = 1; s <= p; ++s) gam.push_back(gamma(rat(s, p), prec).re());
  auto gamma_at = [&](long s) -> const BigFloat& {
    while (static_cast<long>(gam.size()) <= s) {
      const long t = static_cast<long>(gam.size());
      gam.push_back(gam[t - p] * BigFloat(rat(t - p, p), prec));
    }
    return gam[s];
  };

  const BigFloat x = abs(a);
  const BigFloat majorant_pref = pow2(p, prec);  // |1 - xi^e| <= 2 per factor
  const BigFloat one(1L, prec);

  BigComplex value(0L, prec);
  BigComplex zpow = BigComplex(1L, prec);  // a^d / d!
  BigFloat xpow = one;                     // |a|^d / d!
  BigFloat tail;
  long d = 0;
  for (long block = 0;; ++block) {
    BigFloat block_majorant(prec);
    for (int j = 0; j < p; ++j, ++d) {
      BigFloat gprod = one;
      for (int mi : m) gprod = gprod * gamma_at(d + mi + 1);
      bool vanish = false;
      for (std::size_t i = 0; i < m.size(); ++i)
        if ((h.h[i] * (d + m[i] + 1)) % p == 0) vanish = true;
      if (!vanish) value = value + thimble_prefactor(n, m, h, d, one_minus, prec) * (zpow * gprod);
      block_majorant = block_majorant + majorant_pref * gprod * xpow;
      zpow = zpow * a / (d + 1);
      xpow = xpow * x / BigFloat(d + 1, prec);
    }
    // next-block ratio majorant [x (d0+mmax+1) / (p (d0+1))]^p at d0 = block start
    const long d0 = d - p;
    const BigFloat q =
        pow_si(x * BigFloat(d0 + mmax + 1, prec) / (BigFloat(p, prec) * BigFloat(d0 + 1, prec)), p);
    if (block >= 1 && q < one) {
      tail = block_majorant * q / (one - q);
      if (tail < tol) break;
    }
    if (d > 200000) throw PrecisionExhausted("oscillating series did not meet tolerance");
  }
  return OscillatingValue{value, d, tail};
}

BigComplex gamma_closed_form(int n, const std::vector<int>& m, const ThimbleIndex& h, long delta,
                             const BigComplex& a, const BigFloat& tol) {
  validate_sector(n, m);
  validate_thimble(n, h);
  validate_radius(n, a);
  if (delta < 0 || delta > n) throw InadmissibleDelta("delta lies in 0..n");
  for (int mi : m)
    if ((delta + mi + 1) % (n + 1) == 0)
      throw InadmissibleDelta("delta + m_i + 1 vanishes mod n+1");
  const Prec prec = a.prec();
  const auto one_minus = one_minus_root_powers(n, prec);
  return thimble_prefactor(n, m, h, delta, one_minus, prec) * delta_series(n, m, delta, a, tol);
}

int chi_minus3(long k) {
  const long r = ((k % 3) + 3) % 3;
  return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

Cyclotomic12 Cyclotomic12::root_power(long e) {
  e = ((e % 12) + 12) % 12;
  // x^4 = x^2 - 1, x^6 = -1
  static const std::array<Cyclotomic12, 12> table = {{
      {{1, 0, 0, 0}},
      {{0, 1, 0, 0}},
      {{0, 0, 1, 0}},
      {{0, 0, 0, 1}},
      {{-1, 0, 1, 0}},
      {{0, -1, 0, 1}},
      {{-1, 0, 0, 0}},
      {{0, -1, 0, 0}},
      {{0, 0, -1, 0}},
      {{0, 0, 0, -1}},
      {{1, 0, -1, 0}},
      {{0, 1, 0, -1}},
  }};
  return table[e];
}

Cyclotomic12 Cyclotomic12::operator*(const Cyclotomic12& o) const {
  std::array<long, 7> t{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i + j] += c[i] * o.c[j];
  for (int d = 6; d >= 4; --d) {
    t[d - 2] += t[d];
    t[d - 4] -= t[d];
    t[d] = 0;
  }
  return Cyclotomic12{{t[0], t[1], t[2], t[3]}};
}

Cyclotomic12 Cyclotomic12::operator-(const Cyclotomic12& o) const {
  return Cyclotomic12{{c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]}};
}

Cyclotomic12 Cyclotomic12::bar() const {
  return Cyclotomic12{{c[0] + c[2], c[1], -c[2], -c[1] - c[3]}};
}

BigComplex Cyclotomic12::to_complex(Prec prec) const {
  BigComplex z(0L, prec);
  for (int k = 0; k < 4; ++k)
    z = z + BigFloat(c[k], prec) * root_of_unity(rat(k, 12), prec);
  return z;
}

std::vector<RealSpanCoefficient> cubic_real_structure(const BigComplex& mu,
                                                      const std::array<int, 3>& m) {
  for (int mi : m)
    if (mi != 0 && mi != 1) throw DomainError("cubic real structure needs m in {0,1}^3");
  const Prec prec = mu.prec() < 128 ? Prec(128) : mu.prec();

  const Cyclotomic12 one = Cyclotomic12::integer(1);
  const Cyclotomic12 s3 = Cyclotomic12::sqrt3();
  auto xi3 = [&](long k) { return Cyclotomic12::root_power(4 * k); };

  // factor identity 1 - xi_3^k = sqrt(3) x^{-chi(k)} for every arising factor
  for (int hi = 0; hi <= 2; ++hi)
    for (int mi = 0; mi <= 1; ++mi) {
      const long k = hi * (mi + 1);
      if (k % 3 == 0) continue;
      if (!(one - xi3(k) == s3 * Cyclotomic12::root_power(-chi_minus3(k))))
        throw Error("cyclotomic factor identity failed");
    }

  // product form over the nonvanishing thimbles
  for (int h0 = 1; h0 <= 2; ++h0)
    for (int h1 = 1; h1 <= 2; ++h1)
      for (int h2 = 1; h2 <= 2; ++h2) {
        const std::array<int, 3> h{h0, h1, h2};
        Cyclotomic12 lhs = one;
        long s = 0;
        for (int i = 0; i < 3; ++i) {
          lhs = lhs * (one - xi3(h[i] * (m[i] + 1)));
          s += chi_minus3(h[i]) * chi_minus3(m[i] + 1);
        }
        if (!(lhs == s3 * s3 * s3 * Cyclotomic12::root_power(-s)))
          throw Error("cyclotomic product identity failed");
      }

  // conjugation pairing with the sector 1-m, componentwise over residues:
  // exact on the prefactors, numeric on the normalized series at a sample a
  std::vector<int> mv(m.begin(), m.end());
  std::vector<int> mc = {1 - m[0], 1 - m[1], 1 - m[2]};
  const BigComplex a(rat(1, 2), prec);
  const BigFloat tol = pow2(8 - static_cast<long>(prec), prec);
  const BigFloat eps = pow2(48 - static_cast<long>(prec), prec);
  const auto deltas = admissible_deltas(2, mv);
  for (long delta : deltas) {
    const long partner = (3 - delta) % 3;
    for (int h0 = 1; h0 <= 2; ++h0)
      for (int h1 = 1; h1 <= 2; ++h1)
        for (int h2 = 1; h2 <= 2; ++h2) {
          const std::array<int, 3> h{h0, h1, h2};
          Cyclotomic12 lhs = one, rhs = one;
          for (int i = 0; i < 3; ++i) {
            lhs = lhs * (one - xi3(h[i] * (delta + m[i] + 1)));
            rhs = rhs * (one - xi3(h[i] * (partner + mc[i] + 1)));
          }
          if (!(lhs.bar() == rhs)) throw Error("conjugation pairing failed on prefactors");
        }
    const BigComplex norm = delta_series(2, mv, delta, a, tol);
    const BigComplex norm_c = delta_series(2, mc, partner, a, tol);
    const ThimbleIndex h{{1, 2, 1}};
    const BigComplex lhs = conj(gamma_closed_form(2, mv, h, delta, a, tol) / norm);
    const BigComplex rhs = gamma_closed_form(2, mc, h, partner, a, tol) / norm_c;
    if (!(abs(lhs - rhs) < eps)) throw Error("conjugation pairing failed numerically");
  }
  if (deltas.size() == 1) {
    // single-residue sector: the full series equals its one closed-form piece
    const BigComplex norm = delta_series(2, mv, deltas[0], a, tol);
    const BigComplex norm_c = delta_series(2, mc, (3 - deltas[0]) % 3, a, tol);
    for (int h0 = 1; h0 <= 2; ++h0)
      for (int h1 = 1; h1 <= 2; ++h1)
        for (int h2 = 1; h2 <= 2; ++h2) {
          const ThimbleIndex h{{h0, h1, h2}};
          const BigComplex lhs = conj(oscillating_series(2, mv, h, a, tol).value / norm);
          const BigComplex rhs = oscillating_series(2, mc, h, a, tol).value / norm_c;
          if (!(abs(lhs - rhs) < eps)) throw Error("conjugation pairing failed on series");
        }
  }

  std::vector<RealSpanCoefficient> out;
  for (int h0 = 0; h0 <= 2; ++h0)
    for (int h1 = 0; h1 <= 2; ++h1)
      for (int h2 = 0; h2 <= 2; ++h2) {
        const long s = chi_minus3(h0) * chi_minus3(m[0] + 1) +
                       chi_minus3(h1) * chi_minus3(m[1] + 1) +
                       chi_minus3(h2) * chi_minus3(m[2] + 1);
        const BigComplex xs = Cyclotomic12::root_power(-s).to_complex(prec);
        out.push_back({{h0, h1, h2}, mu * xs + conj(mu) * conj(xs)});
      }
  return out;
}

void write_oscillating_csv_header(std::ostream& os) {
  os << "m,h,a_re,a_im,value_re,value_im,method\n";
}

void write_oscillating_csv_row(std::ostream& os, const std::vector<int>& m, const ThimbleIndex& h,
                               const BigComplex& a, const BigComplex& value,
                               const std::string& method) {
  auto join = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += '-';
      s += std::to_string(v[i]);
    }
    return s;
  };
  os << join(m) << ',' << join(h.h) << ',' << a.re().to_string(40) << ',' << a.im().to_string(40)
     << ',' << value.re().to_string(40) << ',' << value.im().to_string(40) << ',' << method
     << '\n';
}

}  // namespace dwork
