#include "l2poly/lconvex.hpp"

#include <algorithm>

namespace l2poly {

namespace {

std::string cycle_str(const std::vector<int>& c) {
  std::string s;
  for (int v : c) s += std::to_string(v + 1) + " -> ";
  return s + std::to_string(c.front() + 1);
}

[[noreturn]] void throw_negative_cycle(const NegativeCycle& c) {
  throw NegativeCycleError(c.vertices, "negative cycle " + cycle_str(c.vertices) + " of length " +
                                           c.length.str());
}

void check_dim(std::size_t have, int want) {
  if (static_cast<int>(have) != want)
    throw DimensionMismatch("vector of dimension " + std::to_string(have) + ", expected " +
                            std::to_string(want));
}

// Matrix over N + {0} with the extra vertex last.
ExtMatrix extended_matrix(const std::vector<ExtInt>& alpha, const std::vector<ExtInt>& beta,
                          const ExtMatrix& gamma) {
  const int n = gamma.dim();
  ExtMatrix m(n + 1, ExtInt::plus_inf());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = gamma(i, j);
  for (int i = 0; i < n; ++i) {
    m(i, n) = -alpha[i];
    m(n, i) = beta[i];
  }
  m(n, n) = 0;
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------

GammaSystem::GammaSystem(ExtMatrix gamma, bool lattice_scoped)
    : gamma_(std::move(gamma)), lattice_scoped_(lattice_scoped) {
  if (auto c = detect_negative_cycle(gamma_)) throw_negative_cycle(*c);
  for (int i = 0; i < gamma_.dim(); ++i) gamma_(i, i) = 0;
}

GammaSystem GammaSystem::from_edges(int n, std::span<const Edge> edges, bool lattice_scoped) {
  ExtMatrix m(n, ExtInt::plus_inf());
  for (int i = 0; i < n; ++i) m(i, i) = 0;
  for (const auto& e : edges) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n)
      throw DimensionMismatch("edge endpoint outside 1.." + std::to_string(n));
    if (e.from == e.to) {
      if (e.length < 0) m(e.from, e.to) = e.length;
      continue;
    }
    if (ExtInt(e.length) < m(e.from, e.to)) m(e.from, e.to) = e.length;
  }
  return GammaSystem(std::move(m), lattice_scoped);
}

std::vector<Edge> GammaSystem::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (i != j && gamma_(i, j).is_finite()) out.push_back({i, j, gamma_(i, j).value()});
  return out;
}

InequalitySystem GammaSystem::to_system(const std::string& block) const {
  InequalitySystem sys(make_variables(block, dim()), lattice_scoped_);
  for (const auto& e : edges()) sys.add(difference_row(IndexSet{e.to}, IndexSet{e.from}, e.length, block));
  return sys;
}

// ---------------------------------------------------------------------------

LnatSystem::LnatSystem(std::vector<ExtInt> alpha, std::vector<ExtInt> beta, ExtMatrix gamma,
                       bool lattice_scoped)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)),
      lattice_scoped_(lattice_scoped) {
  check_dim(alpha_.size(), gamma_.dim());
  check_dim(beta_.size(), gamma_.dim());
  for (const auto& a : alpha_)
    if (a.is_plus_inf()) throw std::invalid_argument("alpha_i = +inf");
  for (const auto& b : beta_)
    if (b.is_minus_inf()) throw std::invalid_argument("beta_i = -inf");
  ExtMatrix ext = extended_matrix(alpha_, beta_, gamma_);
  if (auto c = detect_negative_cycle(ext)) throw_negative_cycle(*c);
  for (int i = 0; i < gamma_.dim(); ++i) gamma_(i, i) = 0;
}

bool LnatSystem::bounded() const {
  return std::all_of(alpha_.begin(), alpha_.end(), [](const ExtInt& a) { return a.is_finite(); }) &&
         std::all_of(beta_.begin(), beta_.end(), [](const ExtInt& b) { return b.is_finite(); });
}

InequalitySystem LnatSystem::to_system(const std::string& block) const {
  const int n = dim();
  InequalitySystem sys(make_variables(block, n), lattice_scoped_);
  for (int i = 0; i < n; ++i) {
    if (alpha_[i].is_finite()) sys.add(difference_row({}, IndexSet{i}, -alpha_[i].value(), block));
    if (beta_[i].is_finite()) sys.add(difference_row(IndexSet{i}, {}, beta_[i].value(), block));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && gamma_(i, j).is_finite())
        sys.add(difference_row(IndexSet{j}, IndexSet{i}, gamma_(i, j).value(), block));
  return sys;
}

// ---------------------------------------------------------------------------

std::optional<NegativeCycle> detect_negative_cycle(const ExtMatrix& m) {
  const int n = m.dim();
  for (int i = 0; i < n; ++i)
    if (m(i, i) < ExtInt(0)) return NegativeCycle{{i}, m(i, i).value()};

  // Virtual source at distance 0 to every vertex.
  std::vector<Integer> dist(static_cast<std::size_t>(n), 0);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  int last = -1;
  for (int round = 0; round < n; ++round) {
    last = -1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || !m(i, j).is_finite()) continue;
        Integer cand = dist[i] + m(i, j).value();
        if (cand < dist[j]) {
          dist[j] = std::move(cand);
          parent[j] = i;
          last = j;
        }
      }
    if (last < 0) return std::nullopt;
  }
  // A relaxation in round n means some vertex lies on or behind a negative cycle.
  int v = last;
  for (int k = 0; k < n; ++k) v = parent[v];
  std::vector<int> cyc;
  for (int u = v;; u = parent[u]) {
    cyc.push_back(u);
    if (parent[u] == v) break;
  }
  // parent pointers run backwards along the cycle
  std::reverse(cyc.begin(), cyc.end());
  auto lo = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), lo, cyc.end());
  Integer len = 0;
  for (std::size_t k = 0; k < cyc.size(); ++k) len += m(cyc[k], cyc[(k + 1) % cyc.size()]).value();
  return NegativeCycle{std::move(cyc), std::move(len)};
}

ExtMatrix triangle_closure(const ExtMatrix& m) {
  if (auto c = detect_negative_cycle(m)) throw_negative_cycle(*c);
  const int n = m.dim();
  ExtMatrix d = m;
  for (int i = 0; i < n; ++i) d(i, i) = 0;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!d(i, k).is_finite()) continue;
      for (int j = 0; j < n; ++j) {
        if (!d(k, j).is_finite()) continue;
        ExtInt via = d(i, k) + d(k, j);
        if (via < d(i, j)) d(i, j) = std::move(via);
      }
    }
  return d;
}

GammaSystem triangle_closure(const GammaSystem& g) {
  return GammaSystem(triangle_closure(g.matrix()), g.lattice_scoped());
}

GammaSystem gamma_from_points(const PointSet& s) {
  if (s.empty()) throw std::invalid_argument("gamma_from_points: empty point set");
  const int n = s.dim();
  ExtMatrix m(n, ExtInt::minus_inf());
  for (const auto& x : s)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        ExtInt d = Integer(x[j] - x[i]);
        if (d > m(i, j)) m(i, j) = std::move(d);
      }
  return GammaSystem(std::move(m), true);
}

LnatSystem lnat_from_points(const PointSet& s) {
  GammaSystem g = gamma_from_points(s);
  std::vector<ExtInt> alpha, beta;
  for (const auto& v : s.lower()) alpha.emplace_back(v);
  for (const auto& v : s.upper()) beta.emplace_back(v);
  return LnatSystem(std::move(alpha), std::move(beta), g.matrix(), true);
}

bool membership(const GammaSystem& g, std::span<const Integer> x) {
  check_dim(x.size(), g.dim());
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j)
      if (i != j && ExtInt(Integer(x[j] - x[i])) > g(i, j)) return false;
  return true;
}

bool membership(const LnatSystem& s, std::span<const Integer> x) {
  check_dim(x.size(), s.dim());
  for (int i = 0; i < s.dim(); ++i) {
    ExtInt xi = x[i];
    if (xi < s.alpha()[i] || xi > s.beta()[i]) return false;
    for (int j = 0; j < s.dim(); ++j)
      if (i != j && ExtInt(Integer(x[j] - x[i])) > s.gamma()(i, j)) return false;
  }
  return true;
}

GammaSystem lnat_to_l(const LnatSystem& s) {
  return GammaSystem(extended_matrix(s.alpha(), s.beta(), s.gamma()), s.lattice_scoped());
}

LnatSystem l_to_lnat_restrict(const GammaSystem& g) {
  const int n = g.dim() - 1;
  if (n < 1) throw DimensionMismatch("l_to_lnat_restrict needs dimension >= 2");
  ExtMatrix c = triangle_closure(g.matrix());
  std::vector<ExtInt> alpha, beta;
  ExtMatrix gamma(n, ExtInt::plus_inf());
  for (int i = 0; i < n; ++i) {
    alpha.push_back(-c(i, n));
    beta.push_back(c(n, i));
    for (int j = 0; j < n; ++j) gamma(i, j) = c(i, j);
  }
  try {
    return LnatSystem(std::move(alpha), std::move(beta), std::move(gamma), g.lattice_scoped());
  } catch (const NegativeCycleError& e) {
    throw EmptySlice(std::string("slice x_{n+1} = 0 is empty: ") + e.what());
  }
}

}  // namespace l2poly
