#include <doctest.h>

#include "fixtures.hpp"

#include <functional>
#include <random>

using namespace l2poly;

namespace {

// Shortest i -> j length over simple paths, by exhaustive DFS.
ExtInt simple_path_min(const ExtMatrix& m, int from, int to) {
  const int n = m.dim();
  ExtInt best = ExtInt::plus_inf();
  std::vector<bool> seen(static_cast<std::size_t>(n));
  std::function<void(int, const ExtInt&)> go = [&](int v, const ExtInt& len) {
    if (v == to) {
      best = std::min(best, len);
      return;
    }
    seen[v] = true;
    for (int w = 0; w < n; ++w)
      if (!seen[w] && w != v && m(v, w).is_finite()) go(w, len + m(v, w));
    seen[v] = false;
  };
  go(from, 0);
  return best;
}

ExtInt entry(const GammaSystem& g, int i, int j) { return g(i - 1, j - 1); }

}  // namespace

TEST_CASE("closure of the 4-cycle summand") {
  GammaSystem c = triangle_closure(fixtures::example_g1());
  CHECK(entry(c, 3, 1) == ExtInt(15));
  CHECK(entry(c, 2, 3) == ExtInt(5));
  CHECK(entry(c, 2, 1) == ExtInt(20));
  CHECK(entry(c, 1, 4) == ExtInt(16));
  CHECK(entry(c, 2, 4) == ExtInt(13));
  CHECK(entry(c, 4, 2) == ExtInt(10));
  CHECK(entry(c, 4, 3) == ExtInt(15));
  CHECK(entry(c, 3, 2) == ExtInt(18));
  CHECK(entry(c, 1, 3) == ExtInt(8));

  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) CHECK(c(i, j) == simple_path_min(fixtures::example_g1().matrix(), i, j));
}

TEST_CASE("closure agrees with simple-path search on random matrices") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const int n = static_cast<int>(fixtures::uniform(rng, 2, 5));
    GammaSystem g = fixtures::random_gamma(rng, n, -3, 6);
    GammaSystem c = triangle_closure(g);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) {
          CHECK(c(i, j) == ExtInt(0));
          continue;
        }
        CHECK(c(i, j) == simple_path_min(g.matrix(), i, j));
        for (int k = 0; k < n; ++k)
          if (c(i, k).is_finite() && c(k, j).is_finite()) CHECK(c(i, j) <= c(i, k) + c(k, j));
      }
    CHECK(triangle_closure(c) == c);
  }
}

TEST_CASE("negative cycles") {
  ExtMatrix m(2, ExtInt(0));
  m(0, 1) = -1;
  auto cyc = detect_negative_cycle(m);
  REQUIRE(cyc.has_value());
  CHECK(cyc->vertices == std::vector<int>{0, 1});
  CHECK(cyc->length == -1);
  CHECK_THROWS_AS(GammaSystem{m}, NegativeCycleError);

  CHECK(!detect_negative_cycle(fixtures::example_g2().matrix()).has_value());

  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    ExtMatrix p(4, ExtInt(0));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j) p(i, j) = fixtures::uniform(rng, 0, 9);
    CHECK(!detect_negative_cycle(p).has_value());
  }

  ExtMatrix loop(3, ExtInt::plus_inf());
  loop(0, 0) = 0;
  loop(1, 1) = -2;
  loop(2, 2) = 0;
  CHECK(detect_negative_cycle(loop).has_value());

  // witness cycle really is negative
  ExtMatrix w(3, ExtInt::plus_inf());
  for (int i = 0; i < 3; ++i) w(i, i) = 0;
  w(2, 0) = 1;
  w(0, 1) = -3;
  w(1, 2) = 1;
  auto c3 = detect_negative_cycle(w);
  REQUIRE(c3.has_value());
  CHECK(c3->vertices == std::vector<int>{0, 1, 2});
  CHECK(c3->length == -1);
}

TEST_CASE("gamma_from_points") {
  GammaSystem d = gamma_from_points(PointSet(2, {{0, 0}, {1, 1}}));
  CHECK(d(0, 1) == ExtInt(0));
  CHECK(d(1, 0) == ExtInt(0));

  GammaSystem s = gamma_from_points(fixtures::lnat_sum());
  CHECK(entry(s, 2, 1) == ExtInt(0));
  CHECK(entry(s, 1, 2) == ExtInt(1));
  CHECK(entry(s, 3, 2) == ExtInt(1));
  CHECK(entry(s, 2, 3) == ExtInt(0));
  CHECK(entry(s, 1, 3) == ExtInt(1));
  CHECK(entry(s, 3, 1) == ExtInt(1));

  GammaSystem one = gamma_from_points(PointSet(3, {{4, -1, 7}}));
  CHECK(entry(one, 1, 2) == ExtInt(-5));
  CHECK(entry(one, 3, 1) == ExtInt(-3));
  CHECK(one.lattice_scoped());
}

TEST_CASE("membership") {
  GammaSystem g1 = fixtures::example_g1();
  CHECK(membership(g1, make_point({0, 3, 8, 16})));
  CHECK(!membership(g1, make_point({0, 4, 0, 0})));
  CHECK(membership(fixtures::example_g2(), make_point({0, 0, 0, 0})));
  CHECK_THROWS_AS(membership(g1, make_point({0, 0})), DimensionMismatch);

  LnatSystem l = lnat_from_points(fixtures::lnat_set1());
  CHECK(membership(l, make_point({1, 1, 0})));
  CHECK(!membership(l, make_point({1, 0, 0})));
  CHECK(!membership(l, make_point({2, 2, 0})));
}

TEST_CASE("L-natural systems") {
  std::vector<ExtInt> a{ExtInt(0)}, b{ExtInt(2)};
  LnatSystem iv(a, b, ExtMatrix(1, ExtInt(0)));
  GammaSystem t = lnat_to_l(iv);
  REQUIRE(t.dim() == 2);
  // extra coordinate last: x1 - x2 <= 2 and x2 - x1 <= 0
  CHECK(t(1, 0) == ExtInt(2));
  CHECK(t(0, 1) == ExtInt(0));
  CHECK(iv.bounded());

  LnatSystem back = l_to_lnat_restrict(t);
  CHECK(back.alpha()[0] == ExtInt(0));
  CHECK(back.beta()[0] == ExtInt(2));

  std::vector<ExtInt> bad_a{ExtInt(3)}, bad_b{ExtInt(1)};
  CHECK_THROWS_AS(LnatSystem(bad_a, bad_b, ExtMatrix(1, ExtInt(0))), NegativeCycleError);
  CHECK_THROWS_AS(l_to_lnat_restrict(GammaSystem(ExtMatrix(1, ExtInt(0)))), DimensionMismatch);

  std::vector<ExtInt> unb_a{ExtInt::minus_inf(), ExtInt(0)}, unb_b{ExtInt(1), ExtInt::plus_inf()};
  ExtMatrix g2(2, ExtInt::plus_inf());
  g2(0, 0) = g2(1, 1) = 0;
  CHECK(!LnatSystem(unb_a, unb_b, g2).bounded());
}

TEST_CASE("slice of the embedding reproduces the L-natural set") {
  for (const PointSet& set : {fixtures::lnat_set1(), fixtures::lnat_set2(), PointSet(3, {{0, 0, 0}})}) {
    LnatSystem l = lnat_from_points(set);
    GammaSystem t = lnat_to_l(l);
    PointSet slice(3);
    Window w{make_point({-1, -1, -1}), make_point({3, 3, 3})};
    for_each_point(w, [&](const Point& p) {
      Point q = p;
      q.emplace_back(0);
      if (membership(t, q)) slice.insert(p);
    });
    CHECK(slice == set);

    LnatSystem round = l_to_lnat_restrict(t);
    CHECK(points_of(round) == set);
  }
}

TEST_CASE("round trip on random L-natural systems") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    LnatSystem l = fixtures::random_lnat(rng, 3);
    CHECK(points_of(l_to_lnat_restrict(lnat_to_l(l))) == points_of(l));
  }
}

TEST_CASE("L-convex sets from points and back") {
  // one representative per class x + Z1, normalized to x4 = 0
  GammaSystem g = triangle_closure(fixtures::example_g1());
  PointSet reps(4);
  Window w{make_point({-25, -25, -25, 0}), make_point({25, 25, 25, 0})};
  for_each_point(w, [&](const Point& p) {
    if (membership(g, p)) reps.insert(p);
  });
  CHECK(is_l_convex(reps, true));
  GammaSystem again = gamma_from_points(reps);
  CHECK(again.matrix() == g.matrix());
}
