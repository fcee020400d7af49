#include "l2poly/graphrep.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace l2poly {

DistanceMatrix::DistanceMatrix(const GammaSystem& g) : dist_(triangle_closure(g.matrix())) {}

ExtInt lambda_pair(const DistanceMatrix& d, int i, int j) {
  if (i == j) throw SizeMismatch("lambda_pair needs i != j");
  return d(i, j);
}

Assignment lambda_set(const DistanceMatrix& d, const IndexSet& I, const IndexSet& J) {
  if (I.size() != J.size()) throw SizeMismatch("|I| = " + std::to_string(I.size()) + " but |J| = " +
                                               std::to_string(J.size()));
  if (!disjoint(I, J)) throw SizeMismatch("I = " + I.str() + " and J = " + J.str() + " intersect");
  if (!I.within(d.dim()) || !J.within(d.dim())) throw SizeMismatch("index outside 1.." + std::to_string(d.dim()));
  if (I.size() > 8) throw SizeMismatch("lambda_set supports |I| <= 8");

  const std::size_t k = I.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Assignment best{ExtInt::plus_inf(), {}};
  do {
    ExtInt total = 0;
    for (std::size_t t = 0; t < k && total.is_finite(); ++t) total += d(I[t], J[perm[t]]);
    if (total < best.value) {
      best.value = total;
      best.matching.clear();
      for (std::size_t t = 0; t < k; ++t) best.matching.emplace_back(I[t], J[perm[t]]);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

GammaIJ gamma_IJ(const GraphData& g, const IndexSet& I, const IndexSet& J) {
  GammaIJ r{lambda_set(g.d1, I, J), lambda_set(g.d2, I, J), 0};
  r.gamma = r.first.value + r.second.value;
  return r;
}

GammaIJ gamma_IJ(const L2Instance& inst, const IndexSet& I, const IndexSet& J) {
  return gamma_IJ(GraphData(inst), I, J);
}

std::string AlternateCycle::str() const {
  std::string s = "(";
  for (std::size_t r = 0; r < is.size(); ++r) {
    if (r) s += ',';
    s += std::to_string(is[r] + 1) + ',' + std::to_string(js[r] + 1);
  }
  return s + ")";
}

namespace {

struct CycleSearch {
  const GraphData& g;
  int n;
  std::size_t max_m;
  std::vector<CycleRow> out;
  std::vector<bool> used;
  AlternateCycle cur;

  // cur.is has one more entry than cur.js; `acc` covers the edges so far.
  void extend(const ExtInt& acc) {
    const int i = cur.is.back();
    const int head = cur.is.front();
    for (int j = 0; j < n; ++j) {
      if (used[j] || !g.d1(i, j).is_finite()) continue;
      ExtInt with_j = acc + g.d1(i, j);
      used[j] = true;
      cur.js.push_back(j);
      if (g.d2(head, j).is_finite()) {
        ExtInt total = with_j + g.d2(head, j);
        out.push_back({cur, total.value(),
                       difference_row(IndexSet(cur.js), IndexSet(cur.is), total.value())});
      }
      if (cur.is.size() < max_m) {
        for (int next = head + 1; next < n; ++next) {
          if (used[next] || !g.d2(next, j).is_finite()) continue;
          used[next] = true;
          cur.is.push_back(next);
          extend(with_j + g.d2(next, j));
          cur.is.pop_back();
          used[next] = false;
        }
      }
      cur.js.pop_back();
      used[j] = false;
    }
  }
};

InequalitySystem x_system(const L2Instance& inst) {
  return InequalitySystem(make_variables("x", inst.dim()),
                          inst.g1().lattice_scoped() && inst.g2().lattice_scoped());
}

}  // namespace

std::vector<CycleRow> enumerate_alternate_cycles(const L2Instance& inst, int max_m) {
  const int n = inst.dim();
  if (max_m < 0 || max_m > n / 2)
    throw std::invalid_argument("max_m must lie in [0, n/2], got " + std::to_string(max_m));
  GraphData g(inst);
  CycleSearch s{g, n, static_cast<std::size_t>(max_m), {}, std::vector<bool>(static_cast<std::size_t>(n)), {}};
  if (max_m == 0) return {};
  for (int head = 0; head < n; ++head) {
    s.used[head] = true;
    s.cur.is = {head};
    s.extend(0);
    s.used[head] = false;
  }
  return std::move(s.out);
}

InequalitySystem graph_candidates(const L2Instance& inst, GraphMode mode) {
  const int n = inst.dim();
  InequalitySystem sys = x_system(inst);
  if (mode == GraphMode::Cycles) {
    for (auto& c : enumerate_alternate_cycles(inst, n / 2)) sys.add(std::move(c.row));
    return sys;
  }
  if (n > 10) throw std::invalid_argument("pairs mode is limited to n <= 10");
  GraphData g(inst);
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  const IndexSet everything(all);
  for (int k = 1; k <= n / 2; ++k)
    for_each_subset(everything, static_cast<std::size_t>(k), [&](const IndexSet& I) {
      for_each_subset(everything.without(I), static_cast<std::size_t>(k), [&](const IndexSet& J) {
        ExtInt v = gamma_IJ(g, I, J).gamma;
        if (v.is_finite()) sys.add(difference_row(J, I, v.value()));
      });
    });
  return sys;
}

Description l2_describe_graph(const L2Instance& inst, GraphMode mode) {
  InequalitySystem rows = remove_redundant(graph_candidates(inst, mode));
  Description d;
  for (const auto& r : rows.rows()) d.supports.push_back(support_of(r, inst.dim(), RowShape::L2));
  d.system = std::move(rows);
  return d;
}

std::string to_string(RedundancyLabel l) {
  switch (l) {
    case RedundancyLabel::Irredundant: return "irredundant";
    case RedundancyLabel::Concatenation: return "concatenation";
    case RedundancyLabel::Splitting: return "splitting";
    case RedundancyLabel::Unexplained: return "unexplained";
  }
  return "unexplained";
}

RedundancyLabel classify_redundancy(const GraphData& g, const RowSupport& s, bool redundant) {
  if (!redundant) return RedundancyLabel::Irredundant;
  const std::size_t m = s.I.size();
  if (m == 0 || m != s.J.size()) return RedundancyLabel::Unexplained;

  if (m == 1) {
    const int i = s.I[0];
    const int j = s.J[0];
    auto splits_at = [&](const DistanceMatrix& d, int k) {
      return d(i, j).is_finite() && d(i, k).is_finite() && d(k, j).is_finite() &&
             d(i, j) == d(i, k) + d(k, j);
    };
    for (int k = 0; k < g.d1.dim(); ++k)
      if (k != i && k != j && splits_at(g.d1, k) && splits_at(g.d2, k)) return RedundancyLabel::Concatenation;
    return RedundancyLabel::Unexplained;
  }

  const ExtInt whole1 = lambda_set(g.d1, s.I, s.J).value;
  const ExtInt whole2 = lambda_set(g.d2, s.I, s.J).value;
  if (!whole1.is_finite() || !whole2.is_finite()) return RedundancyLabel::Unexplained;
  bool found = false;
  for (std::size_t k = 1; k < m && !found; ++k)
    for_each_subset(s.I, k, [&](const IndexSet& I1) {
      if (found) return;
      const IndexSet I2 = s.I.without(I1);
      for_each_subset(s.J, k, [&](const IndexSet& J1) {
        if (found) return;
        const IndexSet J2 = s.J.without(J1);
        auto parts = [&](const DistanceMatrix& d) {
          return lambda_set(d, I1, J1).value + lambda_set(d, I2, J2).value;
        };
        if (parts(g.d1) == whole1 && parts(g.d2) == whole2) found = true;
      });
    });
  return found ? RedundancyLabel::Splitting : RedundancyLabel::Unexplained;
}

std::string to_dot(const L2Instance& inst, GraphView view) {
  static constexpr const char* names[] = {"g1", "g2", "closure1", "closure2", "union"};
  const int n = inst.dim();
  std::ostringstream os;
  os << "digraph " << names[static_cast<int>(view)] << " {\n";
  os << "  node [shape=box];\n";
  for (int v = 1; v <= n; ++v) os << "  " << v << ";\n";

  auto edge = [&](int from, int to, const ExtInt& len, const char* attrs) {
    os << "  " << from + 1 << " -> " << to + 1 << " [label=\"" << len.str() << "\"" << attrs << "];\n";
  };
  auto raw = [&](const GammaSystem& g) {
    for (const auto& e : g.edges()) edge(e.from, e.to, e.length, "");
  };
  auto closure = [&](const DistanceMatrix& d, bool reversed, const char* attrs) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && d(i, j).is_finite()) {
          if (reversed)
            edge(j, i, d(i, j), attrs);
          else
            edge(i, j, d(i, j), attrs);
        }
  };

  switch (view) {
    case GraphView::G1: raw(inst.g1()); break;
    case GraphView::G2: raw(inst.g2()); break;
    case GraphView::Closure1: closure(DistanceMatrix(inst.g1()), false, ""); break;
    case GraphView::Closure2: closure(DistanceMatrix(inst.g2()), false, ""); break;
    case GraphView::Union: {
      GraphData g(inst);
      closure(g.d1, false, ", kind=\"hat1\", style=solid");
      closure(g.d2, true, ", kind=\"check2\", style=dashed");
      break;
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace l2poly
