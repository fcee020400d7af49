#pragma once

// Instances shared by the unit tests and the acceptance binary.

#include "l2poly/graphrep.hpp"
#include "l2poly/oracle.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace fixtures {

using namespace l2poly;

inline Edge edge(int i, int j, long long g) { return Edge{i - 1, j - 1, Integer(g)}; }

inline GammaSystem example_g1() {
  std::vector<Edge> e{edge(1, 2, 3), edge(2, 3, 5), edge(3, 4, 8), edge(4, 1, 7)};
  return GammaSystem::from_edges(4, e, true);
}

inline GammaSystem example_g2() {
  std::vector<Edge> e{edge(3, 1, 2), edge(1, 4, 1), edge(3, 2, 3), edge(2, 4, 5), edge(4, 3, 2)};
  return GammaSystem::from_edges(4, e, true);
}

inline L2Instance example_instance() { return L2Instance(example_g1(), example_g2()); }

inline std::vector<std::string> example_rows() {
  return {"+x1 -x3 <= 17", "+x1 -x4 <= 11", "+x2 -x1 <= 9",  "+x2 -x3 <= 21",
          "+x2 -x4 <= 15", "+x3 -x1 <= 11", "+x3 -x2 <= 12", "+x3 -x4 <= 17",
          "+x4 -x1 <= 17", "+x4 -x2 <= 18", "+x4 -x3 <= 11", "+x2 +x4 -x1 -x3 <= 15"};
}

inline std::vector<std::string> row_strings(const InequalitySystem& sys) {
  std::vector<std::string> out;
  for (const auto& r : sys.rows()) out.push_back(r.str());
  return out;
}

// y_{2i-1} <= y_{2i} and z_{2i+1} <= z_{2i}, indices mod n.
inline L2Instance long_family(int n) {
  std::vector<Edge> e1, e2;
  for (int i = 1; 2 * i <= n; ++i) {
    e1.push_back(edge(2 * i, 2 * i - 1, 0));
    e2.push_back(edge(2 * i, (2 * i) % n + 1, 0));
  }
  return L2Instance(GammaSystem::from_edges(n, e1, true), GammaSystem::from_edges(n, e2, true));
}

inline std::string long_family_row(int n) {
  std::string s;
  for (int i = 1; i <= n; i += 2) s += "+x" + std::to_string(i) + " ";
  for (int i = 2; i <= n; i += 2) s += "-x" + std::to_string(i) + " ";
  return s + "<= 0";
}

inline PointSet lnat_set1() { return PointSet(3, {{0, 0, 0}, {1, 1, 0}}); }
inline PointSet lnat_set2() { return PointSet(3, {{0, 0, 0}, {0, 1, 1}}); }
inline PointSet lnat_sum() { return PointSet(3, {{0, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 2, 1}}); }

inline long long uniform(std::mt19937_64& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline bool coin(std::mt19937_64& rng) { return uniform(rng, 0, 1) == 1; }

// Random finite entries in [lo, hi], each present with probability 1/2,
// redrawn until there is no negative cycle.
inline GammaSystem random_gamma(std::mt19937_64& rng, int n, long long lo, long long hi) {
  while (true) {
    ExtMatrix m(n, ExtInt::plus_inf());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = i == j ? ExtInt(0) : coin(rng) ? ExtInt(uniform(rng, lo, hi)) : ExtInt::plus_inf();
    if (!detect_negative_cycle(m)) return GammaSystem(m, true);
  }
}

inline L2Instance random_l2(std::mt19937_64& rng, int n) {
  GammaSystem g1 = random_gamma(rng, n, -3, 5);
  GammaSystem g2 = random_gamma(rng, n, -3, 5);
  return L2Instance(g1, g2);
}

inline LnatSystem random_lnat(std::mt19937_64& rng, int n) {
  while (true) {
    std::vector<ExtInt> alpha, beta;
    for (int i = 0; i < n; ++i) {
      long long a = uniform(rng, -2, 2), b = uniform(rng, -2, 2);
      alpha.emplace_back(std::min(a, b));
      beta.emplace_back(std::max(a, b));
    }
    ExtMatrix g(n, ExtInt::plus_inf());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = i == j ? ExtInt(0) : coin(rng) ? ExtInt(uniform(rng, -2, 4)) : ExtInt::plus_inf();
    try {
      return LnatSystem(alpha, beta, g, true);
    } catch (const NegativeCycleError&) {
    }
  }
}

// A random subset of a small box; nonempty.
inline PointSet random_subset(std::mt19937_64& rng, int n, std::size_t max_points) {
  PointSet s(n);
  const std::size_t want = static_cast<std::size_t>(uniform(rng, 1, static_cast<long long>(max_points)));
  for (std::size_t t = 0; t < want * 2 && s.size() < want; ++t) {
    Point p;
    for (int i = 0; i < n; ++i) p.emplace_back(uniform(rng, -1, 2));
    s.insert(std::move(p));
  }
  return s;
}

}  // namespace fixtures
