#include <doctest.h>

#include "fixtures.hpp"

#include <random>

using namespace l2poly;

namespace {

LnatSystem box(std::vector<long long> lo, std::vector<long long> hi) {
  const int n = static_cast<int>(lo.size());
  std::vector<ExtInt> a, b;
  for (int i = 0; i < n; ++i) {
    a.emplace_back(lo[i]);
    b.emplace_back(hi[i]);
  }
  ExtMatrix g(n, ExtInt::plus_inf());
  for (int i = 0; i < n; ++i) g(i, i) = 0;
  return LnatSystem(a, b, g);
}

}  // namespace

TEST_CASE("combined system") {
  InequalitySystem comb = build_combined_system(fixtures::example_instance());
  CHECK(comb.size() == 9);
  CHECK(comb.variables().size() == 8);
  CHECK(comb.index_of(var("x", 1)) == 0);
  CHECK(comb.index_of(var("y", 1)) == 4);

  GammaSystem one(ExtMatrix(1, ExtInt(0)));
  CHECK(build_combined_system(L2Instance(one, one)).empty());

  GammaSystem none = GammaSystem::from_edges(4, {});
  L2Instance free_second(fixtures::example_g1(), none);
  CHECK(build_combined_system(free_second).size() == 4);
  CHECK(l2_describe_fm(free_second).system.empty());

  CHECK_THROWS_AS(L2Instance(fixtures::example_g1(), one), DimensionMismatch);
}

TEST_CASE("elimination route on the 4-dimensional example") {
  Description d = l2_describe_fm(fixtures::example_instance());
  CHECK(fixtures::row_strings(d.system) == fixtures::example_rows());
  REQUIRE(d.supports.size() == 12);
  CHECK(d.supports.back().I == IndexSet{0, 2});
  CHECK(d.supports.back().J == IndexSet{1, 3});
  CHECK(d.trace.steps.size() == 4);
}

TEST_CASE("long inequality family") {
  for (int n : {2, 4, 6}) {
    Description d = l2_describe_fm(fixtures::long_family(n));
    CHECK(fixtures::row_strings(d.system) == std::vector<std::string>{fixtures::long_family_row(n)});
    CHECK(d.supports[0].I.size() == static_cast<std::size_t>(n / 2));
  }
}

TEST_CASE("a set plus itself doubles the closure") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 15; ++t) {
    const int n = static_cast<int>(fixtures::uniform(rng, 2, 4));
    GammaSystem g = fixtures::random_gamma(rng, n, -2, 5);
    Description d = l2_describe_fm(L2Instance(g, g));
    GammaSystem c = triangle_closure(g);
    InequalitySystem doubled(make_variables("x", n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && c(i, j).is_finite()) doubled.add(difference_row(IndexSet{j}, IndexSet{i}, 2 * c(i, j).value()));
    CHECK(mutually_implied(d.system, doubled));
    for (const auto& s : d.supports) CHECK(s.I.size() == 1);

    // lattice check on a window with the last coordinate pinned
    Point lo(n, -8), hi(n, 8);
    lo.back() = hi.back() = 0;
    Window w{lo, hi};
    CHECK(enumerate(d.system, w) == enumerate_l2(L2Instance(g, g), w));
  }
}

TEST_CASE("row shapes") {
  const int n = 3;
  CHECK_NOTHROW(support_of(parse_inequality("x1 - x2 <= 1"), n, RowShape::L2));
  CHECK_THROWS_AS(support_of(parse_inequality("x1 <= 1"), n, RowShape::L2), AssertionViolation);
  CHECK_NOTHROW(support_of(parse_inequality("x1 <= 1"), n, RowShape::Lnat2));
  CHECK_THROWS_AS(support_of(parse_inequality("x1 + x2 <= 1"), n, RowShape::Lnat2), AssertionViolation);
  CHECK_THROWS_AS(support_of(parse_inequality("2x1 - x2 <= 1"), n, RowShape::L2), AssertionViolation);
  CHECK_THROWS_AS(support_of(parse_inequality("x1 - y2 <= 1"), n, RowShape::L2), AssertionViolation);
  RowSupport s = support_of(parse_inequality("x3 + x1 - x2 <= 0"), n, RowShape::Lnat2);
  CHECK(s.I == IndexSet{1});
  CHECK(s.J == IndexSet{0, 2});

  std::mt19937_64 rng(37);
  for (int t = 0; t < 30; ++t) {
    L2Instance inst = fixtures::random_l2(rng, static_cast<int>(fixtures::uniform(rng, 2, 4)));
    Description d = l2_describe_fm(inst);
    for (const auto& sp : d.supports) CHECK(sp.I.size() == sp.J.size());
  }
}

TEST_CASE("L-natural-2 example") {
  LnatSystem s1 = lnat_from_points(fixtures::lnat_set1());
  LnatSystem s2 = lnat_from_points(fixtures::lnat_set2());
  Description d = lnat2_describe(s1, s2);
  Window w{make_point({-1, -1, -1}), make_point({3, 3, 3})};
  CHECK(enumerate(d.system, w) == fixtures::lnat_sum());
  for (const auto& r : d.system.rows()) CHECK_NOTHROW(support_of(r, 3, RowShape::Lnat2));
  CHECK(d.trace.steps.size() == 4);
}

TEST_CASE("sums of boxes and of singletons") {
  Description b = lnat2_describe(box({0, -1}, {2, 1}), box({1, 1}, {1, 3}));
  Window w{make_point({-2, -2}), make_point({6, 6})};
  PointSet expect(2);
  for_each_point(Window{make_point({1, 0}), make_point({3, 4})}, [&](const Point& p) { expect.insert(p); });
  CHECK(enumerate(b.system, w) == expect);
  for (const auto& r : b.system.rows()) CHECK(r.coeffs().size() == 1);

  Description s = lnat2_describe(box({1, 2}, {1, 2}), box({-3, 0}, {-3, 0}));
  CHECK(enumerate(s.system, w) == PointSet(2, {{-2, 2}}));
  CHECK(fixtures::row_strings(s.system) == std::vector<std::string>{"-x1 <= 2", "-x2 <= -2", "+x1 <= -2", "+x2 <= 2"});
}

TEST_CASE("L-natural-2 descriptions match the brute-force sum") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 25; ++t) {
    const int n = static_cast<int>(fixtures::uniform(rng, 1, 3));
    LnatSystem s1 = fixtures::random_lnat(rng, n);
    LnatSystem s2 = fixtures::random_lnat(rng, n);
    Description d = lnat2_describe(s1, s2);
    Window w = Window::for_sum(s1, s2, 1);
    PointSet sum = minkowski_sum(points_of(s1), points_of(s2));
    CHECK(enumerate(d.system, w) == sum);

    // slicing the embedded elimination result gives the same set
    Description emb = l2_describe_fm(lnat2_embedding(s1, s2));
    PointSet sliced(n);
    for_each_point(w, [&](const Point& p) {
      Point q = p;
      q.emplace_back(0);
      if (emb.system.satisfied_by(q)) sliced.insert(p);
    });
    CHECK(sliced == sum);
  }
}

TEST_CASE("empty slice") {
  InequalitySystem emb(make_variables("x", 2));
  emb.add("x1 + x2 <= -1");
  emb.add("-x1 <= 0");
  CHECK_THROWS_AS(slice_last_coordinate(emb, 1), Infeasible);
}

TEST_CASE("lower-dimensional sums keep the row shape") {
  // Zero cycles tie coordinates together; rows are then fixed only up to the
  // implicit equalities. These seeds used to produce +x4 +x5 -2x3 style rows.
  for (unsigned seed : {2u, 3u}) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 3000; ++t) {
      const int n = static_cast<int>(fixtures::uniform(rng, 2, 5));
      L2Instance inst = [&] {
        if (t % 3 == 0) {
          GammaSystem g = fixtures::random_gamma(rng, n, -2, 3);
          return L2Instance(g, g);
        }
        if (t % 3 == 1) return fixtures::random_l2(rng, n);
        return L2Instance(fixtures::random_gamma(rng, n, -1, 1), fixtures::random_gamma(rng, n, -1, 1));
      }();
      Description d;
      REQUIRE_NOTHROW(d = l2_describe_fm(inst));
      if (t % 50 == 0)
        CHECK(mutually_implied(d.system, project(build_combined_system(inst), make_variables("x", n)).system));
    }
  }
}
