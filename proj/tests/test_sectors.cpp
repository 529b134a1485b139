#include <doctest.h>

#include <algorithm>
#include <set>

#include "dwork/sectors.hpp"

using namespace dwork;

TEST_CASE("fermat data") {
  auto d = fermat_data(2);
  CHECK(d.weight == rat(1, 3));
  CHECK(d.milnor_number == 8);
  CHECK(fermat_data(3).milnor_number == 81);
  CHECK(fermat_data(4).milnor_number == 1024);
  CHECK(d.weight * 3 == 1);  // weights sum to one
  CHECK_THROWS_AS(fermat_data(1), DomainError);
}

TEST_CASE("sector grading") {
  auto s = sector_grading({0, 0, 0}, 2);
  CHECK(s.beta == 0);
  CHECK(s.alpha == 0);
  CHECK(s.hodge_p == 2);
  CHECK(s.cls == SectorClass::Relevant);

  s = sector_grading({1, 1, 1}, 2);
  CHECK(s.beta == 1);
  CHECK(s.alpha == 0);
  CHECK(s.hodge_p == 1);
  CHECK(s.cls == SectorClass::Marginal);

  s = sector_grading({2, 1, 0, 0}, 3);
  CHECK(s.beta == rat(3, 4));
  CHECK(s.alpha == rat(-1, 4));
  CHECK(s.hodge_p == 2);  // n + alpha - beta

  s = sector_grading({3, 3, 3, 3}, 3);
  CHECK(s.beta == 3);
  CHECK(s.cls == SectorClass::Irrelevant);

  // alpha always lands in (-1, 0] and beta - alpha is integral
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      auto g = sector_grading({a, b, 1}, 2);
      CHECK(g.alpha > -1);
      CHECK(g.alpha <= 0);
      CHECK(is_integer(g.beta - g.alpha));
    }

  // invariance under coordinate permutation
  auto g1 = sector_grading({2, 1, 0, 0}, 3);
  auto g2 = sector_grading({0, 1, 0, 2}, 3);
  CHECK(g1.beta == g2.beta);
  CHECK(g1.alpha == g2.alpha);
  CHECK(g1.hodge_p == g2.hodge_p);

  CHECK_THROWS_AS(sector_grading({0, 0}, 2), DimensionError);
  CHECK_THROWS_AS(sector_grading({-1, 0, 1}, 2), DomainError);
}

TEST_CASE("sector eigenvalue") {
  Prec p = 256;
  auto s = sector_grading({1, 0, 0}, 2);  // beta = 1/3
  BigComplex lam = sector_eigenvalue(s, p);
  CHECK(abs(abs(lam) - BigFloat(1, p)) < pow2(8 - p));
  CHECK(abs(lam - root_of_unity(rat(-1, 3), p)) < pow2(8 - p));
  // marginal sectors are monodromy-invariant: lambda = 1
  CHECK(abs(sector_eigenvalue(sector_grading({1, 1, 1}, 2), p) - BigComplex(1, p)) < pow2(8 - p));
}

TEST_CASE("spectrum tables") {
  auto s2 = spectrum(2);
  CHECK(s2.counts == std::map<Rational, long>{{rat(0), 1}, {rat(1, 3), 3}, {rat(2, 3), 3}, {rat(1), 1}});
  auto s3 = spectrum(3);
  CHECK(s3.counts ==
        std::map<Rational, long>{{rat(0), 1},
                                 {rat(1, 4), 4},
                                 {rat(1, 2), 10},
                                 {rat(3, 4), 16},
                                 {rat(1), 19},
                                 {rat(5, 4), 16},
                                 {rat(3, 2), 10},
                                 {rat(7, 4), 4},
                                 {rat(2), 1}});
  CHECK(s2.total() == 8);
  CHECK(s3.total() == 81);
  CHECK(spectrum(4).total() == 1024);
}

TEST_CASE("spectrum palindrome") {
  for (int n = 2; n <= 5; ++n) {
    auto sp = spectrum(n);
    CHECK(sp.total() == fermat_data(n).milnor_number);
    for (auto& [beta, k] : sp.counts) {
      Rational mirror = Rational(n - 1) - beta;
      REQUIRE(sp.counts.count(mirror) == 1);
      CHECK(sp.counts.at(mirror) == k);
    }
  }
}

TEST_CASE("sector orbits") {
  auto set_of = [](const std::vector<SectorIndex>& v) {
    std::set<std::vector<int>> s;
    for (auto& x : v) s.insert(x.m);
    return s;
  };

  auto o = sector_orbits(2, rat(1));
  CHECK(set_of(o) == std::set<std::vector<int>>{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}});
  CHECK(std::is_sorted(o.begin(), o.end(),
                       [](const SectorIndex& a, const SectorIndex& b) { return a.m < b.m; }));

  auto o3 = sector_orbits(3, rat(3, 4));
  CHECK(set_of(o3) == std::set<std::vector<int>>{{0, 0, 0, 0},
                                                 {1, 0, 0, 0},
                                                 {2, 0, 0, 0},
                                                 {1, 1, 0, 0},
                                                 {1, 1, 1, 0},
                                                 {2, 1, 0, 0}});

  auto o0 = sector_orbits(2, rat(0));
  REQUIRE(o0.size() == 1);
  CHECK(o0[0].m == std::vector<int>{0, 0, 0});
}
