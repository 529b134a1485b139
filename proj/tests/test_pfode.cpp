#include <doctest.h>

#include <json.hpp>
#include <map>
#include <vector>

#include "dwork/pfode.hpp"

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

// exact truncated power-series branch b^rho * sum c_k b^k of a power-1 operator
std::map<Rational, Rational> branch(const ThetaOperator& op, const Rational& rho, int trunc) {
  REQUIRE(op.monomial_power == 1);
  std::map<Rational, Rational> s;
  Rational c = 1;
  s[rho] = c;
  for (int k = 1; k <= trunc; ++k) {
    Rational num = op.scale, den = 1;
    for (const auto& u : op.upper) num *= rho + (k - 1) + u;
    for (const auto& l : op.lower) den *= rho + k + l;
    c = c * num / den;
    s[rho + k] = c;
  }
  return s;
}

std::map<Rational, Rational> apply_op(const ThetaOperator& op,
                                      const std::map<Rational, Rational>& s) {
  std::map<Rational, Rational> r;
  for (const auto& [e, c] : s) {
    Rational f = c;
    for (const auto& l : op.lower) f *= e + l;
    if (f != 0) r[e] += f;
  }
  for (const auto& [e, c] : s) {
    Rational f = c * op.scale;
    for (const auto& u : op.upper) f *= e + u;
    if (f != 0) r[e + op.monomial_power] -= f;
  }
  return r;
}

std::map<Rational, Rational> series_product(const std::map<Rational, Rational>& a,
                                            const std::map<Rational, Rational>& b) {
  std::map<Rational, Rational> r;
  for (const auto& [e1, c1] : a)
    for (const auto& [e2, c2] : b) r[e1 + e2] += c1 * c2;
  return r;
}

}  // namespace

TEST_CASE("picard-fuchs operator construction") {
  auto op = pf_operator(2, {0, 0, 0});
  CHECK(op.variable == 'a');
  CHECK(op.lower == std::vector<Rational>{-2, -1, 0});
  CHECK(op.upper == std::vector<Rational>{1, 1, 1});
  CHECK(op.scale == rat(1, 27));
  CHECK(op.monomial_power == 3);

  auto q = pf_operator(3, {1, 1, 0, 0});
  CHECK(q.lower == std::vector<Rational>{-3, -2, -1, 0});
  CHECK(q.upper == std::vector<Rational>{1, 1, 2, 2});
  CHECK(q.scale == rat(1, 256));

  // permutation invariance
  CHECK(pf_operator(3, {0, 1, 0, 1}) == q);

  CHECK_THROWS_AS(pf_operator(2, {0, 0}), DimensionError);
}

TEST_CASE("operator reduction") {
  // cubic (1,0,0): order 3 -> 1
  auto [r1, c1] = reduce(pf_operator(2, {1, 0, 0}));
  CHECK(r1.lower == std::vector<Rational>{0});
  CHECK(r1.upper == std::vector<Rational>{1});
  CHECK(r1.scale == rat(1, 27));
  CHECK(c1.reduced_order == 1);
  CHECK(c1.cancelled_pairs ==
        std::vector<std::pair<Rational, Rational>>{{1, -2}, {2, -1}});

  // quartic (2,1,0,0): order 4 -> 1
  auto [r2, c2] = reduce(pf_operator(3, {2, 1, 0, 0}));
  CHECK(r2.lower == std::vector<Rational>{0});
  CHECK(r2.upper == std::vector<Rational>{1});
  CHECK(r2.scale == rat(1, 256));
  CHECK(c2.reduced_order == 1);

  // quartic (0,0,0,0): order 4 -> 3
  auto [r3, c3] = reduce(pf_operator(3, {0, 0, 0, 0}));
  CHECK(c3.reduced_order == 3);
  CHECK(r3.lower == std::vector<Rational>{-2, -1, 0});
  CHECK(r3.upper == std::vector<Rational>{1, 1, 1});

  // cubic (0,0,0) pretty form
  auto [r4, c4] = reduce(pf_operator(2, {0, 0, 0}));
  CHECK(r4.pretty() == "(θ_a-1)θ_a - (1/27)a^3(θ_a+1)^2");
  CHECK(c4.reduced_order == 2);
}

TEST_CASE("reduced order formula against admissible exponents") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<int> m(n + 1, 0);
    for (;;) {
      long distinct = 0;
      std::vector<bool> seen(n + 2, false);
      for (int mi : m)
        if (!seen[mi + 1]) {
          seen[mi + 1] = true;
          ++distinct;
        }
      auto [red, cert] = reduce(pf_operator(n, m));
      CHECK(cert.reduced_order == n + 1 - distinct);
      long admissible = 0;
      for (int delta = 0; delta <= n; ++delta) {
        bool ok = true;
        for (int mi : m) ok = ok && (delta + mi + 1) % (n + 1) != 0;
        if (ok) ++admissible;
      }
      CHECK(cert.reduced_order == admissible);
      int i = 0;
      while (i <= n && m[i] == n) m[i++] = 0;
      if (i > n) break;
      ++m[i];
    }
  }
}

TEST_CASE("base change to the rescaled variable") {
  auto quartic = base_change_to_b(reduce(pf_operator(3, {0, 0, 0, 0})).first);
  CHECK(quartic ==
        make_op('b', {rat(-1, 2), rat(-1, 4), 0}, {rat(1, 4), rat(1, 4), rat(1, 4)}, 1, 1));

  auto cubic = base_change_to_b(reduce(pf_operator(2, {0, 0, 0})).first);
  CHECK(cubic == make_op('b', {rat(-1, 3), 0}, {rat(1, 3), rat(1, 3)}, 1, 1));
  CHECK(cubic.pretty() == "(θ_b-1/3)θ_b - b(θ_b+1/3)^2");

  CHECK(base_change_to_b(cubic) == cubic);
}

TEST_CASE("quintic operator in the large complex structure variable") {
  auto op = reduce(pf_operator(4, {0, 0, 0, 0, 0})).first;
  CHECK(op.order() == 4);
  auto z_op = twist(invert(base_change_to_b(op)), rat(-1, 5));
  CHECK(z_op.lower == std::vector<Rational>{0, 0, 0, 0});
  CHECK(z_op.upper == std::vector<Rational>{rat(1, 5), rat(2, 5), rat(3, 5), rat(4, 5)});
  CHECK(z_op.scale == 1);
  CHECK(z_op.monomial_power == 1);
}

TEST_CASE("operator json form") {
  auto op = reduce(pf_operator(2, {1, 0, 0})).first;
  auto j = nlohmann::json::parse(op.to_json_string());
  CHECK(j["variable"] == "a");
  CHECK(j["scale"] == "1/27");
  CHECK(j["monomial_power"] == 3);
  CHECK(j["lower"] == nlohmann::json::array({"0"}));
  CHECK(j["upper"] == nlohmann::json::array({"1"}));
}

TEST_CASE("shift relation") {
  CHECK(shift_relation_check(2, {0, 0, 0}, 20));
  CHECK(shift_relation_check(2, {1, 0, 0}, 15));
  CHECK(shift_relation_check(3, {0, 0, 0, 0}, 12));
  CHECK(shift_relation_check(3, {2, 1, 0, 0}, 12));
  CHECK(shift_relation_check(4, {1, 1, 0, 0, 0}, 10));
  CHECK_THROWS_AS(shift_relation_check(2, {0, 0, 0}, 0), DomainError);
}

TEST_CASE("symmetric square structure") {
  auto half = make_op('b', {rat(-1, 4), 0}, {rat(1, 8), rat(1, 8)}, 1, 1);
  CHECK(symmetric_power(half, 1) == half);

  auto sym2 = symmetric_power(half, 2);
  CHECK(sym2.order() == 3);
  CHECK(sym2.lower == std::vector<Rational>{rat(-1, 2), rat(-1, 4), 0});
  CHECK(sym2.upper == std::vector<Rational>{rat(1, 4), rat(1, 4), rat(1, 4)});
  CHECK(sym2.monomial_power == 1);

  // the symmetric square is the top-sector quartic operator itself, and the
  // b^(1/4) twist puts it in display normalization
  auto quartic = base_change_to_b(reduce(pf_operator(3, {0, 0, 0, 0})).first);
  CHECK(sym2 == quartic);
  CHECK(twist(sym2, rat(1, 4)) ==
        make_op('b', {rat(-3, 4), rat(-1, 2), rat(-1, 4)}, {0, 0, 0}, 1, 1));

  CHECK_THROWS_AS(symmetric_power(quartic, 2), OrderError);
  CHECK_THROWS_AS(symmetric_power(half, 0), OrderError);
}

TEST_CASE("symmetric square annihilates products of solutions") {
  auto half = make_op('b', {rat(-1, 4), 0}, {rat(1, 8), rat(1, 8)}, 1, 1);
  auto sym2 = symmetric_power(half, 2);
  int trunc = 40;
  auto y0 = branch(half, 0, trunc);
  auto y1 = branch(half, rat(1, 4), trunc);
  for (const auto& prod : {series_product(y0, y0), series_product(y0, y1),
                           series_product(y1, y1)}) {
    auto img = apply_op(sym2, prod);
    for (const auto& [e, c] : img) {
      if (e <= Rational(trunc) - 2) CHECK(c == 0);
    }
  }
}
