#include "l2poly/minkowski.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>

namespace l2poly {

L2Instance::L2Instance(GammaSystem g1, GammaSystem g2) : g1_(std::move(g1)), g2_(std::move(g2)) {
  if (g1_.dim() != g2_.dim())
    throw DimensionMismatch("summands of dimension " + std::to_string(g1_.dim()) + " and " +
                            std::to_string(g2_.dim()));
}

RowSupport support_of(const LinearInequality& row, int n, RowShape shape) {
  std::vector<int> I, J;
  for (const auto& [v, c] : row.coeffs()) {
    if (v.block != "x" || v.index < 1 || v.index > n)
      throw AssertionViolation("row " + row.str() + " mentions " + v.str() + " outside x1..x" +
                               std::to_string(n));
    if (c == 1)
      J.push_back(v.index - 1);
    else if (c == -1)
      I.push_back(v.index - 1);
    else
      throw AssertionViolation("row " + row.str() + " has a coefficient outside {-1, 0, 1}");
  }
  const auto diff = static_cast<long>(I.size()) - static_cast<long>(J.size());
  if (shape == RowShape::L2 && diff != 0)
    throw AssertionViolation("row " + row.str() + " has |I| != |J|");
  if (shape == RowShape::Lnat2 && std::labs(diff) > 1)
    throw AssertionViolation("row " + row.str() + " has ||I| - |J|| > 1");
  return RowSupport{IndexSet(std::move(I)), IndexSet(std::move(J))};
}

InequalitySystem build_combined_system(const L2Instance& inst) {
  const int n = inst.dim();
  auto vars = make_variables("x", n);
  auto ys = make_variables("y", n);
  vars.insert(vars.end(), ys.begin(), ys.end());
  InequalitySystem sys(std::move(vars));
  auto x = [](int i) { return Variable{"x", i + 1}; };
  auto y = [](int i) { return Variable{"y", i + 1}; };

  for (const auto& e : inst.g1().edges())
    sys.add(LinearInequality({{y(e.to), 1}, {y(e.from), -1}}, e.length));
  // z_b - z_a <= g2_ab with z = x - y
  for (const auto& e : inst.g2().edges())
    sys.add(LinearInequality({{y(e.from), 1}, {y(e.to), -1}, {x(e.to), 1}, {x(e.from), -1}}, e.length));
  return sys;
}

namespace {

using Rational = boost::multiprecision::cpp_rational;

Description with_supports(InequalitySystem sys, int n, RowShape shape) {
  Description d;
  for (const auto& r : sys.rows()) d.supports.push_back(support_of(r, n, shape));
  d.system = std::move(sys);
  return d;
}

bool fits(const std::vector<Integer>& a, RowShape shape) {
  long plus = 0, minus = 0;
  for (const auto& c : a) {
    if (c == 1)
      ++plus;
    else if (c == -1)
      ++minus;
    else if (c != 0)
      return false;
  }
  return shape == RowShape::L2 ? plus == minus : std::labs(plus - minus) <= 1;
}

// Some solution t of sum_k t_k * cols[k] = target, free unknowns zero.
std::optional<std::vector<Rational>> solve(const std::vector<std::vector<Integer>>& cols,
                                           const std::vector<Integer>& target) {
  const std::size_t rows = target.size(), m = cols.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(m + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < m; ++k) a[i][k] = Rational(cols[k][i]);
    a[i][m] = Rational(target[i]);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t k = 0; k < m && r < rows; ++k) {
    std::size_t p = r;
    while (p < rows && a[p][k] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][k] == 0) continue;
      const Rational f = a[i][k] / a[r][k];
      for (std::size_t t = k; t <= m; ++t) a[i][t] -= f * a[r][t];
    }
    pivot_col.push_back(k);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (a[i][m] != 0) return std::nullopt;
  std::vector<Rational> t(m, Rational(0));
  for (std::size_t i = 0; i < r; ++i) t[pivot_col[i]] = a[i][m] / a[i][pivot_col[i]];
  return t;
}

// Rows of a lower-dimensional polyhedron are fixed only up to its implicit
// equalities. Swaps each row outside `shape` for one inside it that cuts
// the same face; rows with no such partner are left alone.
InequalitySystem align_to_shape(const InequalitySystem& sys, int n, RowShape shape) {
  std::vector<LinearInequality> rows = sys.rows();
  auto dense = [&](const LinearInequality& r) {
    std::vector<Integer> a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) a[i] = r.coeff(Variable{"x", i + 1});
    return a;
  };
  std::vector<std::vector<Integer>> coeff;
  for (const auto& r : rows) coeff.push_back(dense(r));
  if (std::all_of(coeff.begin(), coeff.end(), [&](const auto& a) { return fits(a, shape); })) return sys;

  std::vector<bool> tight(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    LinearInequality reverse = rows[k].negated();
    tight[k] = implies(sys, LinearInequality(reverse.coeffs(), reverse.rhs(), false));
  }

  auto rebuild = [&] {
    InequalitySystem out(sys.variables(), sys.lattice_scoped());
    for (const auto& r : rows) out.add(r);
    return out;
  };
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (fits(coeff[k], shape)) continue;
    std::vector<std::vector<Integer>> cols{coeff[k]};
    std::vector<Integer> rhs{rows[k].rhs()};
    for (std::size_t e = 0; e < rows.size(); ++e)
      if (e != k && tight[e]) {
        cols.push_back(coeff[e]);
        rhs.push_back(rows[e].rhs());
      }
    // an inequality constant on the affine hull is redundant; an equality
    // may be replaced by any row of the span it lies in
    if (!tight[k] && solve({cols.begin() + 1, cols.end()}, coeff[k])) continue;

    std::vector<int> free_coords;
    for (int i = 0; i < n; ++i)
      if (std::any_of(cols.begin(), cols.end(), [&](const auto& c) { return c[i] != 0; })) free_coords.push_back(i);
    std::vector<std::vector<Integer>> candidates;
    std::vector<int> digit(free_coords.size(), 0);
    while (true) {
      std::size_t d = 0;
      while (d < digit.size() && digit[d] == 2) digit[d++] = 0;
      if (d == digit.size()) break;
      ++digit[d];
      std::vector<Integer> s(static_cast<std::size_t>(n), 0);
      for (std::size_t t = 0; t < digit.size(); ++t) s[free_coords[t]] = digit[t] == 2 ? -1 : digit[t];
      if (fits(s, shape)) candidates.push_back(std::move(s));
    }
    auto support = [](const std::vector<Integer>& s) { return std::count_if(s.begin(), s.end(), [](const Integer& c) { return c != 0; }); };
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const auto& x, const auto& y) { return support(x) < support(y); });

    const LinearInequality original = rows[k];
    for (const auto& s : candidates) {
      auto t = solve(cols, s);
      if (!t || (!tight[k] && (*t)[0] <= 0)) continue;
      Rational bound = 0;
      for (std::size_t c = 0; c < rhs.size(); ++c) bound += (*t)[c] * Rational(rhs[c]);
      if (denominator(bound) != 1) continue;
      LinearInequality::Coeffs sc;
      for (int i = 0; i < n; ++i)
        if (s[i] != 0) sc.emplace(Variable{"x", i + 1}, s[i]);
      rows[k] = LinearInequality(std::move(sc), numerator(bound));
      if (implies(rebuild(), original)) {
        coeff[k] = s;
        break;
      }
      rows[k] = original;
    }
  }
  return remove_redundant(rebuild());
}

}  // namespace

Description l2_describe_fm(const L2Instance& inst) {
  const int n = inst.dim();
  Projection p = project(build_combined_system(inst), make_variables("x", n));
  InequalitySystem rows = align_to_shape(remove_redundant(p.system), n, RowShape::L2);
  rows.set_lattice_scoped(inst.g1().lattice_scoped() && inst.g2().lattice_scoped());
  Description d = with_supports(canonicalize(rows), n, RowShape::L2);
  d.trace = std::move(p.trace);
  return d;
}

L2Instance lnat2_embedding(const LnatSystem& s1, const LnatSystem& s2) {
  if (s1.dim() != s2.dim())
    throw DimensionMismatch("summands of dimension " + std::to_string(s1.dim()) + " and " +
                            std::to_string(s2.dim()));
  return L2Instance(lnat_to_l(s1), lnat_to_l(s2));
}

Description slice_last_coordinate(const InequalitySystem& embedded, int n) {
  const Variable last{"x", n + 1};
  InequalitySystem sliced(make_variables("x", n), embedded.lattice_scoped());
  for (const auto& r : embedded.rows()) {
    LinearInequality s = r;
    s.set_coeff(last, 0);
    sliced.add(std::move(s));
  }
  if (!feasible(sliced)) throw Infeasible("the slice x" + std::to_string(n + 1) + " = 0 is empty");
  bool lattice = sliced.lattice_scoped();
  sliced.set_lattice_scoped(false);
  InequalitySystem rows = align_to_shape(remove_redundant(sliced), n, RowShape::Lnat2);
  rows.set_lattice_scoped(lattice);
  return with_supports(canonicalize(rows), n, RowShape::Lnat2);
}

Description lnat2_describe(const LnatSystem& s1, const LnatSystem& s2) {
  const int n = s1.dim();
  Description embedded = l2_describe_fm(lnat2_embedding(s1, s2));
  Description d = slice_last_coordinate(embedded.system, n);
  d.trace = std::move(embedded.trace);
  return d;
}

}  // namespace l2poly
