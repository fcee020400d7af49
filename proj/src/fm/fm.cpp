#include "l2poly/fm.hpp"

#include "l2poly/core/errors.hpp"

#include <algorithm>
#include <map>

namespace l2poly {

namespace {

struct DenseRow {
  std::vector<Integer> a;
  Integer b;
  bool strict = false;
};

std::vector<Variable> union_variables(const std::vector<Variable>& a, const std::vector<Variable>& b) {
  std::vector<Variable> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

DenseRow to_dense(const LinearInequality& r, const std::vector<Variable>& vars) {
  DenseRow d{std::vector<Integer>(vars.size(), 0), r.rhs(), r.strict()};
  for (const auto& [v, c] : r.coeffs()) {
    auto it = std::find(vars.begin(), vars.end(), v);
    if (it == vars.end()) throw UnknownVariable("variable " + v.str() + " not in system");
    d.a[static_cast<std::size_t>(it - vars.begin())] = c;
  }
  return d;
}

LinearInequality from_dense(const DenseRow& d, const std::vector<Variable>& vars) {
  LinearInequality::Coeffs c;
  for (std::size_t k = 0; k < vars.size(); ++k)
    if (d.a[k] != 0) c.emplace(vars[k], d.a[k]);
  return LinearInequality(std::move(c), d.b, d.strict);
}

// scale_i * ri + scale_k * rk, strict if either input is.
DenseRow combine(const DenseRow& ri, const Integer& scale_i, const DenseRow& rk, const Integer& scale_k) {
  DenseRow out{std::vector<Integer>(ri.a.size()), scale_i * ri.b + scale_k * rk.b, ri.strict || rk.strict};
  for (std::size_t t = 0; t < ri.a.size(); ++t) out.a[t] = scale_i * ri.a[t] + scale_k * rk.a[t];
  return out;
}

struct Multipliers {
  Integer for_positive;
  Integer for_negative;
};

// Multipliers cancelling column c between a positive and a negative row.
Multipliers cancel(const Integer& pos_coeff, const Integer& neg_coeff) {
  Integer p = pos_coeff;
  Integer q = -neg_coeff;
  Integer g = gcd(p, q);
  return {q / g, p / g};
}

// Drops satisfied constant rows and rows dominated by a parallel row; the
// first element is false when a constant row is violated.
std::pair<bool, std::vector<DenseRow>> reduce(std::vector<DenseRow> rows) {
  struct Entry {
    DenseRow row;
    Integer scale;  // gcd of the coefficients
  };
  std::map<std::vector<Integer>, Entry> best;
  for (auto& r : rows) {
    Integer g = 0;
    for (const auto& c : r.a) g = gcd(g, c);
    if (g == 0) {
      if (r.strict ? r.b <= 0 : r.b < 0) return {false, {}};
      continue;
    }
    std::vector<Integer> key(r.a.size());
    for (std::size_t t = 0; t < r.a.size(); ++t) key[t] = r.a[t] / g;
    if (r.b % g == 0) {
      r.a = key;
      r.b /= g;
      g = 1;
    }
    auto it = best.find(key);
    if (it == best.end()) {
      best.emplace(std::move(key), Entry{std::move(r), g});
      continue;
    }
    // compare r.b / g against cur.b / cur.scale
    Entry& cur = it->second;
    Integer lhs = r.b * cur.scale;
    Integer rhs = cur.row.b * g;
    if (lhs < rhs || (lhs == rhs && r.strict && !cur.row.strict)) cur = Entry{std::move(r), g};
  }
  std::vector<DenseRow> out;
  out.reserve(best.size());
  for (auto& [k, e] : best) out.push_back(std::move(e.row));
  return {true, std::move(out)};
}

bool feasible_dense(std::vector<DenseRow> rows, std::size_t ncols) {
  std::vector<bool> gone(ncols, false);
  while (true) {
    auto [ok, reduced] = reduce(std::move(rows));
    if (!ok) return false;
    rows = std::move(reduced);
    if (rows.empty()) return true;

    // Cheapest column first; the order does not affect the verdict.
    std::size_t col = ncols;
    std::size_t best_cost = 0;
    for (std::size_t c = 0; c < ncols; ++c) {
      if (gone[c]) continue;
      std::size_t pos = 0, neg = 0;
      for (const auto& r : rows) {
        if (r.a[c] > 0) ++pos;
        if (r.a[c] < 0) ++neg;
      }
      if (pos + neg == 0) continue;
      std::size_t cost = pos * neg;
      if (col == ncols || cost < best_cost) {
        col = c;
        best_cost = cost;
      }
    }
    if (col == ncols) return true;  // only constant rows remained and all hold

    std::vector<DenseRow> next;
    std::vector<const DenseRow*> pos, neg;
    for (const auto& r : rows) {
      if (r.a[col] > 0)
        pos.push_back(&r);
      else if (r.a[col] < 0)
        neg.push_back(&r);
      else
        next.push_back(r);
    }
    for (const DenseRow* ri : pos)
      for (const DenseRow* rk : neg) {
        auto m = cancel(ri->a[col], rk->a[col]);
        next.push_back(combine(*ri, m.for_positive, *rk, m.for_negative));
      }
    gone[col] = true;
    rows = std::move(next);
  }
}

}  // namespace

bool EliminationTrace::lattice_overapprox() const {
  return std::any_of(steps.begin(), steps.end(), [](const EliminationStep& s) { return s.max_scale > 1; });
}

Elimination eliminate_variable(const InequalitySystem& sys, const Variable& v) {
  const int col = sys.index_of(v);
  if (col < 0) throw UnknownVariable("cannot eliminate " + v.str() + ": not a variable of the system");
  const auto& vars = sys.variables();
  const auto c = static_cast<std::size_t>(col);

  std::vector<DenseRow> pos, neg, zero;
  for (const auto& r : sys.rows()) {
    DenseRow d = to_dense(r, vars);
    if (d.a[c] > 0)
      pos.push_back(std::move(d));
    else if (d.a[c] < 0)
      neg.push_back(std::move(d));
    else
      zero.push_back(std::move(d));
  }

  EliminationStep step;
  step.variable = v;
  step.positive = pos.size();
  step.negative = neg.size();
  step.zero = zero.size();
  step.generated = pos.size() * neg.size();

  std::vector<Variable> rest = vars;
  rest.erase(rest.begin() + col);
  InequalitySystem out(rest, sys.lattice_scoped());
  auto emit = [&](DenseRow d) {
    d.a.erase(d.a.begin() + col);
    out.add(from_dense(d, rest));
  };
  for (auto& d : zero) emit(std::move(d));
  for (const auto& ri : pos)
    for (const auto& rk : neg) {
      auto m = cancel(ri.a[c], rk.a[c]);
      step.max_scale = std::max({step.max_scale, m.for_positive, m.for_negative});
      emit(combine(ri, m.for_positive, rk, m.for_negative));
    }
  return {std::move(out), std::move(step)};
}

Projection project(const InequalitySystem& sys, const std::vector<Variable>& keep) {
  for (const auto& v : keep)
    if (sys.index_of(v) < 0) throw UnknownVariable("cannot keep " + v.str() + ": not a variable of the system");
  std::vector<Variable> drop;
  for (const auto& v : sys.variables())
    if (std::find(keep.begin(), keep.end(), v) == keep.end()) drop.push_back(v);
  std::sort(drop.begin(), drop.end());

  Projection result;
  // Elimination always works on the real reading.
  InequalitySystem cur = sys;
  cur.set_lattice_scoped(false);
  for (const auto& v : drop) {
    Elimination e = eliminate_variable(cur, v);
    InequalitySystem filtered = remove_redundant(e.system);
    e.step.discarded = e.system.size() - filtered.size();
    result.trace.steps.push_back(std::move(e.step));
    cur = std::move(filtered);
  }
  cur.set_lattice_scoped(sys.lattice_scoped());
  result.system = canonicalize(cur);
  return result;
}

bool feasible(const InequalitySystem& sys) {
  std::vector<DenseRow> rows;
  rows.reserve(sys.size());
  for (const auto& r : sys.rows()) rows.push_back(to_dense(r, sys.variables()));
  return feasible_dense(std::move(rows), sys.variables().size());
}

bool implies(const InequalitySystem& sys, const LinearInequality& row) {
  std::vector<Variable> vars;
  for (const auto& [v, c] : row.coeffs()) vars.push_back(v);
  vars = union_variables(sys.variables(), vars);
  std::vector<DenseRow> rows;
  rows.reserve(sys.size() + 1);
  for (const auto& r : sys.rows()) rows.push_back(to_dense(r, vars));
  rows.push_back(to_dense(row.negated(), vars));
  return !feasible_dense(std::move(rows), vars.size());
}

bool is_redundant(const LinearInequality& row, const InequalitySystem& sys) {
  InequalitySystem rest(sys.variables(), sys.lattice_scoped());
  bool skipped = false;
  for (const auto& r : sys.rows()) {
    if (!skipped && r == row) {
      skipped = true;
      continue;
    }
    rest.add(r);
  }
  return implies(rest, row);
}

InequalitySystem remove_redundant(const InequalitySystem& sys) {
  if (!feasible(sys)) throw Infeasible("system has no real solution");
  const InequalitySystem cur = canonicalize(sys);
  const auto& rows = cur.rows();

  // On a lower-dimensional polyhedron several irredundant subsets exist;
  // trying the widest rows first keeps the ones with small coefficients.
  auto weight = [](const LinearInequality& r) {
    Integer top = 0;
    for (const auto& [v, c] : r.coeffs()) top = std::max(top, Integer(abs(c)));
    return std::make_pair(top, r.coeffs().size());
  };
  std::vector<std::size_t> order(rows.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return weight(rows[a]) > weight(rows[b]); });

  std::vector<bool> gone(rows.size(), false);
  for (std::size_t k : order) {
    InequalitySystem rest(cur.variables(), cur.lattice_scoped());
    for (std::size_t t = 0; t < rows.size(); ++t)
      if (t != k && !gone[t]) rest.add(rows[t]);
    if (implies(rest, rows[k])) gone[k] = true;
  }
  InequalitySystem out(cur.variables(), cur.lattice_scoped());
  for (std::size_t t = 0; t < rows.size(); ++t)
    if (!gone[t]) out.add(rows[t]);
  return out;
}

bool mutually_implied(const InequalitySystem& a, const InequalitySystem& b) {
  InequalitySystem aa(union_variables(a.variables(), b.variables()));
  InequalitySystem bb(aa.variables());
  for (const auto& r : a.rows()) aa.add(r);
  for (const auto& r : b.rows()) bb.add(r);
  for (const auto& r : a.rows())
    if (!implies(bb, r)) return false;
  for (const auto& r : b.rows())
    if (!implies(aa, r)) return false;
  return true;
}

}  // namespace l2poly
