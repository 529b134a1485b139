#include <doctest.h>

#include <json.hpp>
#include <algorithm>
#include <vector>

#include "dwork/errors.hpp"
#include "dwork/frobenius.hpp"
#include "dwork/pfode.hpp"
#include "dwork/sectors.hpp"

using namespace dwork;

namespace {

ThetaOperator make_op(char var, std::vector<Rational> lo, std::vector<Rational> up,
                      Rational scale, long power) {
  ThetaOperator op;
  op.variable = var;
  op.lower = std::move(lo);
  op.upper = std::move(up);
  op.scale = std::move(scale);
  op.monomial_power = power;
  return op;
}

ThetaOperator quintic_z() {
  return make_op('z', {0, 0, 0, 0}, {rat(1, 5), rat(2, 5), rat(3, 5), rat(4, 5)}, 1, 1);
}
ThetaOperator cubic_b() { return make_op('b', {rat(-1, 3), 0}, {rat(1, 3), rat(1, 3)}, 1, 1); }
ThetaOperator quartic_b() {
  return make_op('b', {rat(-1, 2), rat(-1, 4), 0}, {rat(1, 4), rat(1, 4), rat(1, 4)}, 1, 1);
}
ThetaOperator triangular_w() { return make_op('w', {0, 0}, {rat(1, 8), rat(3, 8)}, 1, 1); }

Rational poch(const Rational& a, long k) {
  Rational p = 1;
  for (long i = 0; i < k; ++i) p *= a + i;
  return p;
}

Rational fac(long n) {
  Rational f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<Rational> basis_exponents(const std::vector<ExactLogSeries>& basis) {
  std::vector<Rational> e;
  for (const auto& s : basis) e.push_back(s.exponent);
  std::sort(e.begin(), e.end());
  return e;
}

void check_annihilated(const ThetaOperator& op, const std::vector<ExactLogSeries>& basis,
                       Point pt) {
  for (const auto& s : basis) CHECK(first_nonzero_order(apply_operator(op, s, pt)) == -1);
}

}  // namespace

TEST_CASE("indicial roots at the three singular points") {
  auto rs = [](std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  ThetaOperator q = quintic_z();
  CHECK(indicial_roots(q, Point::Zero) == rs({0, 0, 0, 0}));
  CHECK(indicial_roots(q, Point::One) == rs({0, 1, 1, 2}));
  CHECK(indicial_roots(q, Point::Infinity) == rs({rat(1, 5), rat(2, 5), rat(3, 5), rat(4, 5)}));

  ThetaOperator c = cubic_b();
  CHECK(indicial_roots(c, Point::Zero) == rs({0, rat(1, 3)}));
  CHECK(indicial_roots(c, Point::One) == rs({0, 0}));
  CHECK(indicial_roots(c, Point::Infinity) == rs({rat(1, 3), rat(1, 3)}));

  ThetaOperator k = quartic_b();
  CHECK(indicial_roots(k, Point::Zero) == rs({0, rat(1, 4), rat(2, 4)}));
  CHECK(indicial_roots(k, Point::One) == rs({0, rat(1, 2), 1}));
  CHECK(indicial_roots(k, Point::Infinity) == rs({rat(1, 4), rat(1, 4), rat(1, 4)}));

  ThetaOperator w = triangular_w();
  CHECK(indicial_roots(w, Point::Zero) == rs({0, 0}));
  CHECK(indicial_roots(w, Point::One) == rs({0, rat(1, 2)}));
  CHECK(indicial_roots(w, Point::Infinity) == rs({rat(1, 8), rat(3, 8)}));

  for (const ThetaOperator& op : {q, c, k, w}) {
    Rational total = 0;
    for (Point p : {Point::Zero, Point::One, Point::Infinity})
      total += sum(indicial_roots(op, p));
    long r = static_cast<long>(op.order());
    CHECK(total == rat(r * (r - 1), 2));
  }
}

TEST_CASE("local exponents of the basis match the indicial roots") {
  // at the finite singular point this pits the Fuchs-relation formula against
  // the recentred indicial polynomial
  for (const ThetaOperator& op : {quintic_z(), cubic_b(), quartic_b(), triangular_w()}) {
    for (Point p : {Point::Zero, Point::One, Point::Infinity}) {
      auto basis = frobenius_basis_exact(op, p, 2 * op.order() + 6);
      CHECK(basis.size() == op.order());
      auto roots = indicial_roots(op, p);
      std::sort(roots.begin(), roots.end());
      CHECK(basis_exponents(basis) == roots);
    }
  }
}

TEST_CASE("basis at the maximally unipotent point of the mirror family operator") {
  ThetaOperator op = quintic_z();
  auto basis = frobenius_basis_exact(op, Point::Zero, 40);
  REQUIRE(basis.size() == 4);
  for (int j = 0; j < 4; ++j) {
    CHECK(basis[j].exponent == 0);
    CHECK(basis[j].log_degree() == j);
    // leading normalization and cleared lower-log constant terms
    CHECK(basis[j].coeffs[j][0] == 1 / fac(j));
    for (int l = 0; l < j; ++l) CHECK(basis[j].coeffs[l][0] == 0);
    // the top log row repeats the analytic solution
    for (long k = 0; k <= 40; ++k)
      CHECK(basis[j].coeffs[j][k] == basis[0].coeffs[0][k] / fac(j));
  }
  Rational pw = 1;  // 5^(5d)
  for (long d = 0; d <= 40; ++d) {
    CHECK(basis[0].coeffs[0][d] * pw == fac(5 * d) / (fac(d) * fac(d) * fac(d) * fac(d) * fac(d)));
    pw *= 3125;
  }
  check_annihilated(op, basis, Point::Zero);
}

TEST_CASE("rescaled coordinate gives the factorial coefficients") {
  ThetaOperator psi = rescale(quintic_z(), 3125, 'x');
  auto basis = frobenius_basis_exact(psi, Point::Zero, 12);
  REQUIRE(basis.size() == 4);
  for (long d = 0; d <= 12; ++d) {
    Rational expect = fac(5 * d) / (fac(d) * fac(d) * fac(d) * fac(d) * fac(d));
    CHECK(basis[0].coeffs[0][d] == expect);
  }
  CHECK(basis[0].coeffs[0][1] == 120);
  // scale-1 display coordinate carries the same numbers divided by 5^(5d)
  auto zb = frobenius_basis_exact(quintic_z(), Point::Zero, 12);
  Rational pw = 1;
  for (long d = 0; d <= 12; ++d) {
    CHECK(zb[0].coeffs[0][d] * pw == basis[0].coeffs[0][d]);
    pw *= 3125;
  }
  FrobeniusBasis nb = frobenius_basis(psi, Point::Zero, 12, 192);
  CHECK(nb.solutions.size() == 4);
  BigFloat r = nb.radius - BigFloat(rat(1, 3125), 192);
  CHECK(abs(r) < pow2(-150, 192));
}

TEST_CASE("marginal cubic sector basis") {
  ThetaOperator op = cubic_b();
  auto basis = frobenius_basis_exact(op, Point::Zero, 40);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0].exponent == 0);
  CHECK(basis[0].log_degree() == 0);
  CHECK(basis[1].exponent == rat(1, 3));
  CHECK(basis[1].log_degree() == 0);
  for (long k = 0; k <= 40; ++k) {
    Rational u3 = poch(rat(1, 3), k) * poch(rat(1, 3), k) / (poch(rat(2, 3), k) * poch(1, k));
    Rational u4 = poch(rat(2, 3), k) * poch(rat(2, 3), k) / (poch(rat(4, 3), k) * poch(1, k));
    CHECK(basis[0].coeffs[0][k] == u3);
    CHECK(basis[1].coeffs[0][k] == u4);
  }
  check_annihilated(op, basis, Point::Zero);
}

TEST_CASE("logarithmic structure away from the origin") {
  ThetaOperator c = cubic_b();
  auto c1 = frobenius_basis_exact(c, Point::One, 20);
  REQUIRE(c1.size() == 2);
  CHECK(c1[0].log_degree() == 0);
  CHECK(c1[1].log_degree() == 1);
  CHECK(c1[1].coeffs[1][0] == 1);
  CHECK(c1[1].coeffs[0][0] == 0);
  check_annihilated(c, c1, Point::One);

  auto ci = frobenius_basis_exact(c, Point::Infinity, 20);
  REQUIRE(ci.size() == 2);
  CHECK(ci[0].exponent == rat(1, 3));
  CHECK(ci[1].exponent == rat(1, 3));
  CHECK(ci[1].log_degree() == 1);
  check_annihilated(c, ci, Point::Infinity);

  auto ki = frobenius_basis_exact(quartic_b(), Point::Infinity, 20);
  REQUIRE(ki.size() == 3);
  for (int j = 0; j < 3; ++j) {
    CHECK(ki[j].exponent == rat(1, 4));
    CHECK(ki[j].log_degree() == j);
    CHECK(ki[j].coeffs[j][0] == 1 / fac(j));
  }
  check_annihilated(quartic_b(), ki, Point::Infinity);

  // vanishing-cycle point: one log pairing among exponents {0,1,1,2}
  ThetaOperator q = quintic_z();
  auto q1 = frobenius_basis_exact(q, Point::One, 16);
  REQUIRE(q1.size() == 4);
  CHECK(q1[0].exponent == 0);
  CHECK(q1[0].log_degree() == 0);
  CHECK(q1[1].exponent == 1);
  CHECK(q1[1].log_degree() == 0);
  CHECK(q1[2].exponent == 1);
  CHECK(q1[2].log_degree() == 1);
  CHECK(q1[2].coeffs[1][0] == 1);
  CHECK(q1[3].exponent == 2);
  CHECK(q1[3].log_degree() == 0);
  check_annihilated(q, q1, Point::One);

  auto w0 = frobenius_basis_exact(triangular_w(), Point::Zero, 20);
  CHECK(w0[1].log_degree() == 1);
  check_annihilated(triangular_w(), w0, Point::Zero);
}

TEST_CASE("basis for an operator with a higher monomial power") {
  ThetaOperator raw = pf_operator(2, {0, 0, 0});
  ThetaOperator red = reduce(raw).first;
  auto basis = frobenius_basis_exact(red, Point::Zero, 15);
  REQUIRE(basis.size() == 2);
  CHECK(basis_exponents(basis) == std::vector<Rational>{0, 1});
  for (const auto& s : basis) {
    CHECK(s.log_degree() == 0);
    // series step by the monomial power only
    for (long k = 1; k <= 15; k += 3) CHECK(s.coeffs[0][k] == 0);
  }
  check_annihilated(red, basis, Point::Zero);
  CHECK_THROWS_AS(frobenius_basis_exact(red, Point::One, 15), NotCanonicalForm);
}

TEST_CASE("sector operators keep distinct fractional exponents before the twist") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& sec : sector_orbits(n, Rational(n))) {
      ThetaOperator op = base_change_to_b(reduce(pf_operator(n, sec.m)).first);
      auto roots = op.exponents_at_zero();
      for (std::size_t i = 0; i < roots.size(); ++i) {
        Rational scaled = roots[i] * (n + 1);
        CHECK(is_integer(scaled));
        CHECK(roots[i] >= 0);
        CHECK(roots[i] < 1);
        if (i > 0) CHECK(roots[i] > roots[i - 1]);
      }
    }
  }
}

TEST_CASE("series evaluation baselines") {
  Prec prec = 256;
  BigComplex z(BigFloat(rat(3, 10), prec), BigFloat(rat(2, 5), prec));
  BigFloat tail(prec);
  BigComplex g = eval_rgs({rat(2, 7)}, {rat(2, 7)}, z, 220, &tail);
  BigComplex ref = BigComplex(1L, prec) / (BigComplex(1L, prec) - z);
  CHECK(abs(g - ref) < pow2(-215, prec));
  CHECK(abs(g - ref) < tail + pow2(-250, prec));

  CHECK(abs(eval_rgs({rat(1, 2)}, {rat(1, 3)}, BigComplex(0L, prec), 50) - BigComplex(1L, prec)) ==
        BigFloat(0L, prec));

  CHECK_THROWS_AS(eval_rgs({rat(1, 2)}, {rat(1, 3)}, BigComplex(rat(24, 25), prec), 50),
                  ConvergenceError);
  CHECK_THROWS_AS(eval_rgs({rat(1, 2)}, {Rational(-3)}, BigComplex(rat(1, 2), prec), 50),
                  ParameterPole);
  CHECK_THROWS_AS(eval_rgs({Rational(30)}, {Rational(1)}, BigComplex(rat(1, 2), prec), 10),
                  TruncationError);
}

TEST_CASE("hypergeometric value agrees along two evaluation paths") {
  Prec prec = 256;
  FrobeniusBasis fb = frobenius_basis(cubic_b(), Point::Zero, 260, prec);
  BigComplex b(rat(1, 2), prec);
  BigComplex via_series = eval_log_series(fb.solutions[0], b);
  BigComplex via_rgs = eval_rgs({rat(1, 3), rat(1, 3)}, {rat(2, 3), Rational(1)}, b, 260);
  CHECK(abs(via_series - via_rgs) < BigFloat("1e-60", prec));

  BigComplex u4_series = eval_log_series(fb.solutions[1], b);
  BigComplex u4_rgs = pow(b, rat(1, 3)) *
                      eval_rgs({rat(2, 3), rat(2, 3)}, {rat(4, 3), Rational(1)}, b, 260);
  CHECK(abs(u4_series - u4_rgs) < BigFloat("1e-60", prec));
}

TEST_CASE("log series json dump") {
  FrobeniusBasis fb = frobenius_basis(cubic_b(), Point::One, 8, 128);
  auto j = nlohmann::json::parse(fb.solutions[1].to_json_string());
  CHECK(j["exponent"] == "0");
  CHECK(j["log_degree"] == 1);
  CHECK(j["trunc"] == 8);
  REQUIRE(!j["terms"].empty());
  bool has_log_lead = false;
  for (const auto& t : j["terms"])
    if (t["j"] == 1 && t["k"] == 0) has_log_lead = t["re"].get<std::string>().substr(0, 2) == "1.";
  CHECK(has_log_lead);
}

TEST_CASE("frobenius preconditions") {
  CHECK_THROWS_AS(frobenius_basis_exact(quintic_z(), Point::Zero, 7), DomainError);
  CHECK(to_string(Point::Infinity) == "inf");
  CHECK(to_string(Point::One) == "1");
}
