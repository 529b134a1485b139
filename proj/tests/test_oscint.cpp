#include "dwork/oscint.hpp"

#include <sstream>

#include "doctest.h"
#include "dwork/errors.hpp"
#include "dwork/gamma.hpp"
#include "dwork/sectors.hpp"

using namespace dwork;

namespace {

BigFloat tol(double v, Prec prec) { return BigFloat::from_double(v, prec); }

BigComplex sum_over_deltas(int n, const std::vector<int>& m, const ThimbleIndex& h,
                           const BigComplex& a, const BigFloat& eps) {
  BigComplex total(0L, a.prec());
  for (long d : admissible_deltas(n, m)) total = total + gamma_closed_form(n, m, h, d, a, eps);
  return total;
}

}  // namespace

TEST_CASE("series at a = 0 reduces to the d = 0 term") {
  const Prec prec = 192;
  const BigComplex zero(0L, prec);
  const BigComplex g13 = gamma(rat(1, 3), prec);
  const BigComplex f = BigComplex(1L, prec) - root_of_unity(rat(1, 3), prec);
  const OscillatingValue v =
      oscillating_series(2, {0, 0, 0}, ThimbleIndex{{1, 1, 1}}, zero, tol(1e-50, prec));
  CHECK(abs(v.value - f * f * f * (g13 * g13 * g13)) < tol(1e-45, prec));

  const BigComplex g14 = gamma(rat(1, 4), prec);
  const BigComplex f4 = BigComplex(1L, prec) - root_of_unity(rat(1, 4), prec);
  const OscillatingValue w =
      oscillating_series(3, {0, 0, 0, 0}, ThimbleIndex{{1, 1, 1, 1}}, zero, tol(1e-50, prec));
  CHECK(abs(w.value - f4 * f4 * f4 * f4 * (g14 * g14 * g14 * g14)) < tol(1e-45, prec));
}

TEST_CASE("admissible residues follow the mod n+1 condition") {
  CHECK(admissible_deltas(2, {1, 0, 0}) == std::vector<long>{0});
  CHECK(admissible_deltas(2, {0, 0, 0}) == (std::vector<long>{0, 1}));
  CHECK(admissible_deltas(2, {1, 1, 1}) == (std::vector<long>{0, 2}));
  CHECK(admissible_deltas(2, {0, 1, 2}).empty());
  CHECK(admissible_deltas(3, {1, 0, 0, 0}) == (std::vector<long>{0, 1}));
  CHECK(admissible_deltas(3, {0, 0, 0, 0}) == (std::vector<long>{0, 1, 2}));
}

TEST_CASE("a sector with no admissible residue has identically zero pairing") {
  const Prec prec = 128;
  const BigComplex a(rat(2, 3), prec);
  const OscillatingValue v =
      oscillating_series(2, {0, 1, 2}, ThimbleIndex{{1, 2, 1}}, a, tol(1e-30, prec));
  CHECK(abs(v.value) < tol(1e-28, prec));
}

TEST_CASE("inadmissible or out-of-range residues are rejected") {
  const Prec prec = 128;
  const BigComplex a(rat(1, 3), prec);
  const ThimbleIndex h{{1, 1, 1}};
  CHECK_THROWS_AS(gamma_closed_form(2, {1, 0, 0}, h, 1, a, tol(1e-30, prec)), InadmissibleDelta);
  CHECK_THROWS_AS(gamma_closed_form(2, {1, 0, 0}, h, 5, a, tol(1e-30, prec)), InadmissibleDelta);
  CHECK_THROWS_AS(gamma_closed_form(2, {1, 0, 0}, h, -1, a, tol(1e-30, prec)), InadmissibleDelta);
}

TEST_CASE("arguments on or beyond the convergence radius are rejected") {
  const Prec prec = 128;
  const ThimbleIndex h{{1, 1, 1}};
  CHECK_THROWS_AS(
      oscillating_series(2, {0, 0, 0}, h, BigComplex(rat(16, 5), prec), tol(1e-20, prec)),
      DomainError);
  CHECK_THROWS_AS(
      oscillating_series(2, {0, 0, 0}, h, BigComplex(3L, prec), tol(1e-20, prec)), DomainError);
  CHECK_THROWS_AS(
      gamma_closed_form(2, {1, 0, 0}, h, 0, BigComplex(-4L, prec), tol(1e-20, prec)), DomainError);
  // well inside the disk but beyond |a| = n the sum still converges
  const OscillatingValue v =
      oscillating_series(2, {0, 0, 0}, h, BigComplex(rat(5, 2), prec), tol(1e-25, prec));
  CHECK(abs(v.value - sum_over_deltas(2, {0, 0, 0}, h, BigComplex(rat(5, 2), prec),
                                      tol(1e-25, prec))) < tol(1e-20, prec));
}

TEST_CASE("malformed sector or thimble data is rejected") {
  const Prec prec = 128;
  const BigComplex a(rat(1, 3), prec);
  const BigFloat eps = tol(1e-20, prec);
  CHECK_THROWS_AS(oscillating_series(2, {0, 0}, ThimbleIndex{{1, 1, 1}}, a, eps), DomainError);
  CHECK_THROWS_AS(oscillating_series(2, {0, 0, 0}, ThimbleIndex{{1, 1}}, a, eps), DomainError);
  CHECK_THROWS_AS(oscillating_series(2, {0, 0, 0}, ThimbleIndex{{1, 0, 1}}, a, eps), DomainError);
  CHECK_THROWS_AS(oscillating_series(2, {0, 0, 0}, ThimbleIndex{{1, 3, 1}}, a, eps), DomainError);
}

TEST_CASE("series and residue-sum closed form agree on all small sectors") {
  const Prec prec = 256;
  const BigFloat eps = tol(1e-60, prec);
  const BigFloat bound = tol(1e-40, prec);
  const std::vector<BigComplex> samples = {
      BigComplex(rat(1, 3), prec),
      BigComplex(BigFloat(rat(1, 2), prec), BigFloat(rat(1, 4), prec)),
      BigComplex(rat(-2, 3), prec),
  };
  for (int n : {2, 3}) {
    std::vector<ThimbleIndex> hs;
    hs.push_back(ThimbleIndex{std::vector<int>(n + 1, 1)});
    ThimbleIndex mixed{std::vector<int>(n + 1, 1)};
    for (int i = 0; i <= n; ++i) mixed.h[i] = 1 + (i % n);
    hs.push_back(mixed);
    for (const SectorIndex& sec : sector_orbits(n, Rational(1))) {
      if (!(sec.beta < 1)) continue;
      for (const auto& h : hs) {
        for (const auto& a : samples) {
          const OscillatingValue direct = oscillating_series(n, sec.m, h, a, eps);
          const BigComplex split = sum_over_deltas(n, sec.m, h, a, eps);
          CHECK(direct.tail_bound < eps);
          const BigFloat scale = abs(direct.value);
          if (scale > tol(1e-8, prec)) {
            CHECK(abs(direct.value - split) / scale < bound);
          } else {
            CHECK(abs(direct.value - split) < bound);
          }
        }
      }
    }
  }
}

TEST_CASE("cubic weight-two sector matches its hypergeometric display") {
  // independent evaluation: prefactor (2 pi) 3^{-1/2} Gamma(2/3)Gamma(1/3)^2 /
  // (Gamma(1/3)Gamma(2/3)Gamma(1)) times the 3G3 series at b = a^3/27
  const Prec prec = 256;
  const BigComplex a(rat(1, 2), prec);
  const ThimbleIndex h{{2, 1, 1}};
  const std::vector<int> m = {1, 0, 0};

  BigComplex g(0L, prec), term(1L, prec);
  const BigComplex b = (a / 3) * (a / 3) * (a / 3);
  const std::vector<Rational> alpha = {rat(2, 3), rat(1, 3), rat(1, 3)};
  const std::vector<Rational> beta = {rat(1, 3), rat(2, 3), rat(1, 1)};
  for (long k = 0; k < 400; ++k) {
    g = g + term;
    Rational r(1);
    for (const auto& x : alpha) r *= Rational(x + k);
    for (const auto& x : beta) r /= Rational(x + k);
    term = term * b * BigFloat(Rational(r), prec);
  }
  BigComplex display =
      gamma(rat(2, 3), prec) * gamma(rat(1, 3), prec) * gamma(rat(1, 3), prec) /
      (gamma(rat(1, 3), prec) * gamma(rat(2, 3), prec));
  display = display * (pi(prec) * BigFloat(2L, prec) / sqrt(BigFloat(3L, prec))) * g;
  for (std::size_t i = 0; i < 3; ++i)
    display = display * (BigComplex(1L, prec) - root_of_unity(rat(h.h[i] * (m[i] + 1), 3), prec));

  const OscillatingValue v = oscillating_series(2, m, h, a, tol(1e-60, prec));
  CHECK(abs(v.value - display) / abs(display) < tol(1e-45, prec));
  // and the closed-form path gives the same single residue component
  CHECK(abs(gamma_closed_form(2, m, h, 0, a, tol(1e-60, prec)) - display) / abs(display) <
        tol(1e-45, prec));
}

TEST_CASE("tightening the tolerance moves the value by less than the tail bound") {
  const Prec prec = 192;
  const BigComplex a(BigFloat(rat(-3, 4), prec), BigFloat(rat(1, 2), prec));
  const ThimbleIndex h{{1, 2, 1}};
  const OscillatingValue coarse = oscillating_series(2, {1, 1, 0}, h, a, tol(1e-12, prec));
  const OscillatingValue fine = oscillating_series(2, {1, 1, 0}, h, a, tol(1e-45, prec));
  CHECK(coarse.tail_bound < tol(1e-12, prec));
  CHECK(abs(coarse.value - fine.value) < coarse.tail_bound);
  CHECK(fine.terms_used > coarse.terms_used);
}

TEST_CASE("character values and periodicity") {
  CHECK(chi_minus3(0) == 0);
  CHECK(chi_minus3(1) == 1);
  CHECK(chi_minus3(2) == -1);
  for (long k = -9; k < 9; ++k) {
    CHECK(chi_minus3(k) == chi_minus3(k + 3));
    CHECK(chi_minus3(k) == -chi_minus3(-k));
    CHECK(chi_minus3(k) * chi_minus3(k + 1) * chi_minus3(k + 2) == 0);
  }
}

TEST_CASE("cyclotomic ring arithmetic is exact and consistent") {
  const Prec prec = 192;
  using C = Cyclotomic12;
  CHECK(C::root_power(6) == C::integer(-1));
  CHECK(C::root_power(12) == C::integer(1));
  CHECK(C::root_power(5) * C::root_power(7) == C::integer(1));
  CHECK(C::sqrt3() * C::sqrt3() == C::integer(3));
  CHECK(C::root_power(4) * C::root_power(4) * C::root_power(4) == C::integer(1));
  for (long e = 0; e < 12; ++e) {
    CHECK(C::root_power(e).bar() == C::root_power(-e));
    CHECK(abs(C::root_power(e).to_complex(prec) - root_of_unity(rat(e, 12), prec)) <
          tol(1e-50, prec));
  }
  // embedding is a ring homomorphism on a sample pair
  const C u{{2, -1, 0, 3}}, v{{-1, 4, 1, uint8_t(0)}};
  CHECK(abs((u * v).to_complex(prec) - u.to_complex(prec) * v.to_complex(prec)) <
        tol(1e-50, prec));
}

TEST_CASE("root-of-unity factor identity holds exactly across the full grid") {
  using C = Cyclotomic12;
  const C one = C::integer(1);
  for (int h0 = 0; h0 <= 2; ++h0)
    for (int h1 = 0; h1 <= 2; ++h1)
      for (int h2 = 0; h2 <= 2; ++h2)
        for (int m0 = 0; m0 <= 2; ++m0)
          for (int m1 = 0; m1 <= 2; ++m1)
            for (int m2 = 0; m2 <= 2; ++m2) {
              const std::array<int, 3> h{h0, h1, h2}, m{m0, m1, m2};
              C lhs = one, rhs = one;
              long chi_sum = 0;
              for (int i = 0; i < 3; ++i) {
                const long k = h[i] * (m[i] + 1);
                if (k % 3 == 0) continue;  // vanishing factor excluded
                lhs = lhs * (one - C::root_power(4 * k));
                rhs = rhs * C::sqrt3();
                chi_sum += chi_minus3(k);
              }
              rhs = rhs * C::root_power(-chi_sum);
              CHECK(lhs == rhs);
            }
}

TEST_CASE("real span coefficients are real and follow the character pairing") {
  const Prec prec = 192;
  const BigComplex mu(BigFloat(rat(1, 3), prec), BigFloat(rat(2, 3), prec));
  const auto rows = cubic_real_structure(mu, {1, 0, 0});
  CHECK(rows.size() == 27);
  for (const auto& row : rows) CHECK(abs(row.coefficient.im()) < tol(1e-50, prec));
  // h = (0,0,0) pairs to mu + conj(mu)
  CHECK((rows[0].h == std::array<int, 3>{0, 0, 0}));
  CHECK(abs(rows[0].coefficient - (mu + conj(mu))) < tol(1e-50, prec));
  // h = (1,1,1): s = chi(1)(chi(2) + chi(1) + chi(1)) = 1
  const BigComplex x = root_of_unity(rat(-1, 12), prec);
  const BigComplex want = mu * x + conj(mu) * conj(x);
  for (const auto& row : rows)
    if (row.h == std::array<int, 3>{1, 1, 1}) CHECK(abs(row.coefficient - want) < tol(1e-50, prec));
  CHECK_THROWS_AS(cubic_real_structure(mu, {0, 2, 0}), DomainError);
}

TEST_CASE("real structure self-checks pass on every cubic weight sector") {
  const Prec prec = 160;
  const BigComplex mu(BigFloat(rat(3, 7), prec), BigFloat(rat(-1, 5), prec));
  for (int m0 = 0; m0 <= 1; ++m0)
    for (int m1 = 0; m1 <= 1; ++m1)
      for (int m2 = 0; m2 <= 1; ++m2) {
        const auto rows = cubic_real_structure(mu, {m0, m1, m2});
        CHECK(rows.size() == 27);
      }
}

TEST_CASE("csv rows carry the sector, thimble, argument, and method") {
  const Prec prec = 128;
  std::ostringstream os;
  write_oscillating_csv_header(os);
  const BigComplex a(rat(1, 3), prec);
  const BigComplex v(BigFloat(rat(5, 4), prec), BigFloat(rat(-1, 8), prec));
  write_oscillating_csv_row(os, {1, 0, 0}, ThimbleIndex{{2, 1, 1}}, a, v, "series");
  const std::string out = os.str();
  CHECK(out.find("m,h,a_re,a_im,value_re,value_im,method") != std::string::npos);
  CHECK(out.find("1-0-0,2-1-1,") != std::string::npos);
  CHECK(out.find(",series") != std::string::npos);
}
