#include <doctest.h>

#include "fixtures.hpp"

#include <algorithm>
#include <array>
#include <random>

using namespace l2poly;

namespace {

bool has_row(const InequalitySystem& sys, const std::string& text) {
  const LinearInequality want = parse_inequality(text);
  return std::find(sys.rows().begin(), sys.rows().end(), want) != sys.rows().end();
}

InequalitySystem system_of(int n, const std::vector<std::string>& rows, const std::string& block = "x") {
  InequalitySystem s(make_variables(block, n));
  for (const auto& r : rows) s.add(r);
  return s;
}

InequalitySystem example_result() { return system_of(4, fixtures::example_rows()); }

// Does (p1, p2) extend to a real u3 satisfying every row over u1..u3?
// Interval test, independent of elimination.
bool extends(const InequalitySystem& sys, const Point& p) {
  bool have_lo = false, have_hi = false;
  Integer lo_n, lo_d, hi_n, hi_d;  // bounds lo_n/lo_d <= u3 <= hi_n/hi_d, denominators > 0
  for (const auto& r : sys.rows()) {
    Integer a3 = r.coeff(var("u", 3));
    Integer rest = r.rhs() - r.coeff(var("u", 1)) * p[0] - r.coeff(var("u", 2)) * p[1];
    if (a3 == 0) {
      if (rest < 0) return false;
    } else if (a3 > 0) {
      if (!have_hi || rest * hi_d < hi_n * a3) {
        hi_n = rest;
        hi_d = a3;
        have_hi = true;
      }
    } else {
      Integer n = -rest, d = -a3;
      if (!have_lo || n * lo_d > lo_n * d) {
        lo_n = n;
        lo_d = d;
        have_lo = true;
      }
    }
  }
  return !have_lo || !have_hi || lo_n * hi_d <= hi_n * lo_d;
}

}  // namespace

TEST_CASE("eliminate_variable on small systems") {
  Elimination a = eliminate_variable(system_of(1, {"u1 <= 3", "-u1 <= -1"}, "u"), var("u", 1));
  CHECK(a.system.variables().empty());
  CHECK(fixtures::row_strings(a.system) == std::vector<std::string>{"0 <= 2"});
  CHECK(feasible(a.system));

  Elimination b = eliminate_variable(system_of(2, {"u1 - u2 <= 0", "u2 - u1 <= -1"}, "u"), var("u", 1));
  CHECK(fixtures::row_strings(b.system) == std::vector<std::string>{"0 <= -1"});
  CHECK(!feasible(b.system));
  CHECK(b.step.positive == 1);
  CHECK(b.step.negative == 1);
  CHECK(b.step.generated == 1);

  CHECK_THROWS_AS(eliminate_variable(system_of(1, {"u1 <= 3"}, "u"), var("u", 2)), UnknownVariable);
}

TEST_CASE("cross scaling and strictness") {
  InequalitySystem s(make_variables("u", 2));
  s.add("2u1 + u2 <= 4");
  s.add(parse_inequality("-3u1 < 1"));
  Elimination e = eliminate_variable(s, var("u", 1));
  REQUIRE(e.system.size() == 1);
  CHECK(e.system.rows()[0].str() == "+3u2 < 14");
  CHECK(e.step.max_scale == 3);
}

TEST_CASE("eliminating y1 from the combined system") {
  InequalitySystem comb = build_combined_system(fixtures::example_instance());
  CHECK(comb.size() == 9);
  CHECK(has_row(comb, "y3 - y1 + x1 - x3 <= 2"));
  Elimination e = eliminate_variable(comb, var("y", 1));
  // y_j - y_i + x1 - x_j <= gamma1_i1 + gamma2_j1 with i = 4, j = 3
  CHECK(has_row(e.system, "y3 - y4 + x1 - x3 <= 9"));
  CHECK(e.step.positive == 2);
  CHECK(e.step.negative == 2);
  CHECK(e.step.zero == 5);
  for (const auto& r : e.system.rows()) CHECK(r.coeff(var("y", 1)) == 0);
}

TEST_CASE("projection of the combined system") {
  Projection p = project(build_combined_system(fixtures::example_instance()), make_variables("x", 4));
  CHECK(fixtures::row_strings(p.system) == fixtures::example_rows());

  REQUIRE(p.trace.steps.size() == 4);
  const std::vector<std::array<std::size_t, 5>> expect{
      {2, 2, 5, 4, 0}, {3, 2, 4, 6, 1}, {7, 2, 0, 14, 2}, {0, 0, 12, 0, 0}};
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& s = p.trace.steps[k];
    CHECK(s.variable == var("y", static_cast<int>(k + 1)));
    CHECK(s.positive == expect[k][0]);
    CHECK(s.negative == expect[k][1]);
    CHECK(s.zero == expect[k][2]);
    CHECK(s.generated == expect[k][3]);
    CHECK(s.discarded == expect[k][4]);
    CHECK(s.max_scale == 1);
  }
  CHECK(!p.trace.lattice_overapprox());
}

TEST_CASE("projection onto every variable canonicalizes") {
  InequalitySystem s = system_of(2, {"2x1 - 2x2 <= 4", "x2 <= 5", "x2 <= 7"});
  Projection p = project(s, s.variables());
  CHECK(p.trace.steps.empty());
  CHECK(p.system == canonicalize(s));
}

TEST_CASE("long inequality from four variables") {
  L2Instance inst = fixtures::long_family(4);
  Projection p = project(build_combined_system(inst), make_variables("x", 4));
  CHECK(fixtures::row_strings(remove_redundant(p.system)) == std::vector<std::string>{"+x1 +x3 -x2 -x4 <= 0"});
}

TEST_CASE("feasible") {
  CHECK(!feasible(system_of(1, {"x1 <= 0", "-x1 <= -1"})));
  CHECK(feasible(example_result()));
  CHECK(feasible(InequalitySystem(make_variables("x", 3))));

  // rows of a gamma matrix with a negative cycle
  CHECK(!feasible(system_of(3, {"x2 - x1 <= 1", "x3 - x2 <= -4", "x1 - x3 <= 2"})));

  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    const int n = 3;
    ExtMatrix m(n, ExtInt::plus_inf());
    InequalitySystem s(make_variables("x", n));
    for (int i = 0; i < n; ++i) {
      m(i, i) = 0;
      for (int j = 0; j < n; ++j)
        if (i != j && fixtures::coin(rng)) {
          m(i, j) = fixtures::uniform(rng, -4, 3);
          s.add(difference_row(IndexSet{j}, IndexSet{i}, m(i, j).value()));
        }
    }
    CHECK(feasible(s) == !detect_negative_cycle(m).has_value());
  }
}

TEST_CASE("strict rows in feasibility") {
  CHECK(feasible(InequalitySystem(make_variables("x", 1))));
  InequalitySystem s(make_variables("x", 1));
  s.add("x1 <= 0");
  s.add(parse_inequality("-x1 < 0"));
  CHECK(!feasible(s));
  InequalitySystem t(make_variables("x", 1));
  t.add(parse_inequality("x1 < 1"));
  t.add(parse_inequality("-x1 < 0"));
  CHECK(feasible(t));
}

TEST_CASE("is_redundant") {
  InequalitySystem base = example_result();
  CHECK(implies(base, parse_inequality("x1 - x2 <= 29")));
  CHECK(implies(system_of(4, {"x1 - x3 <= 17", "x3 - x2 <= 12"}), parse_inequality("x1 - x2 <= 29")));
  CHECK(implies(base, parse_inequality("x1 + x3 - x2 - x4 <= 23")));
  CHECK(implies(system_of(4, {"x1 - x4 <= 11", "x3 - x2 <= 12"}), parse_inequality("x1 + x3 - x2 - x4 <= 23")));

  // the long row is needed
  const LinearInequality long_row = parse_inequality("x2 + x4 - x1 - x3 <= 15");
  CHECK(!is_redundant(long_row, base));
  for (const auto& r : base.rows()) CHECK(!is_redundant(r, base));

  InequalitySystem with29 = base;
  with29.add("x1 - x2 <= 29");
  CHECK(is_redundant(parse_inequality("x1 - x2 <= 29"), with29));
  CHECK(!implies(base, parse_inequality("x1 - x2 <= 28")));
}

TEST_CASE("remove_redundant") {
  InequalitySystem dup = system_of(2, {"x1 - x2 <= 3", "x1 - x2 <= 3", "x2 <= 1"});
  CHECK(fixtures::row_strings(remove_redundant(dup)) == std::vector<std::string>{"+x2 <= 1", "+x1 -x2 <= 3"});

  CHECK_THROWS_AS(remove_redundant(system_of(1, {"x1 <= 0", "-x1 <= -1"})), Infeasible);

  std::mt19937_64 rng(13);
  for (int t = 0; t < 40; ++t) {
    InequalitySystem s(make_variables("x", 3));
    const int rows = static_cast<int>(fixtures::uniform(rng, 2, 8));
    for (int k = 0; k < rows; ++k) {
      LinearInequality::Coeffs c;
      for (int i = 1; i <= 3; ++i) {
        Integer a = fixtures::uniform(rng, -2, 2);
        if (a != 0) c.emplace(var("x", i), a);
      }
      s.add(LinearInequality(c, fixtures::uniform(rng, -3, 6)));
    }
    s.add("x1 <= 4");
    s.add("-x1 <= 4");
    s.add("x2 <= 4");
    s.add("-x2 <= 4");
    s.add("x3 <= 4");
    s.add("-x3 <= 4");
    if (!feasible(s)) continue;
    InequalitySystem r = remove_redundant(s);
    Window w{make_point({-5, -5, -5}), make_point({5, 5, 5})};
    CHECK(enumerate(r, w) == enumerate(s, w));
    CHECK(mutually_implied(r, s));

    // another row order gives an equivalent result
    InequalitySystem shuffled(s.variables());
    auto rows_copy = s.rows();
    std::shuffle(rows_copy.begin(), rows_copy.end(), rng);
    for (auto& row : rows_copy) shuffled.add(row);
    CHECK(mutually_implied(remove_redundant(shuffled), r));
  }
}

TEST_CASE("projection soundness against the interval test") {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int t = 0; t < 80; ++t) {
    InequalitySystem s(make_variables("u", 3));
    const int rows = static_cast<int>(fixtures::uniform(rng, 3, 7));
    for (int k = 0; k < rows; ++k) {
      LinearInequality::Coeffs c;
      for (int i = 1; i <= 3; ++i) {
        Integer a = fixtures::uniform(rng, -5, 5);
        if (a != 0) c.emplace(var("u", i), a);
      }
      s.add(LinearInequality(c, fixtures::uniform(rng, -5, 5)));
    }
    Window w{make_point({-4, -4}), make_point({4, 4})};
    if (!feasible(s)) {
      CHECK_THROWS_AS(project(s, {var("u", 1), var("u", 2)}), Infeasible);
      for_each_point(w, [&](const Point& p) { CHECK(!extends(s, p)); });
      continue;
    }
    Projection p = project(s, {var("u", 1), var("u", 2)});
    for_each_point(w, [&](const Point& q) { CHECK(p.system.satisfied_by(q) == extends(s, q)); });
    ++checked;
  }
  CHECK(checked > 20);
}
