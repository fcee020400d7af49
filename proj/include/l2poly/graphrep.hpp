#pragma once

// Graph route to L2 descriptions: the bound of x(J) - x(I) is the sum over
// both summands of the cheapest way to route |I| shortest paths from I to J,
// and the irredundant rows can be enumerated from alternate directed cycles
// of the two transitive closures.

#include "l2poly/minkowski.hpp"

#include <string>
#include <utility>
#include <vector>

namespace l2poly {

/// Shortest-path lengths of one summand's constraint graph.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const GammaSystem& g);

  int dim() const noexcept { return dist_.dim(); }
  const ExtInt& operator()(int i, int j) const { return dist_(i, j); }
  const ExtMatrix& matrix() const noexcept { return dist_; }

 private:
  ExtMatrix dist_;
};

/// Shortest i -> j length; i != j.
ExtInt lambda_pair(const DistanceMatrix& d, int i, int j);

struct Assignment {
  ExtInt value;
  std::vector<std::pair<int, int>> matching;  // (i, sigma(i)), empty when value is +inf
};

/// Minimum over bijections sigma: I -> J of sum d(i, sigma(i)), found by
/// exhaustive permutation search (|I| <= 8). Throws SizeMismatch unless
/// |I| = |J| and I, J are disjoint.
Assignment lambda_set(const DistanceMatrix& d, const IndexSet& I, const IndexSet& J);

/// Both distance matrices of an instance.
struct GraphData {
  explicit GraphData(const L2Instance& inst) : d1(inst.g1()), d2(inst.g2()) {}
  DistanceMatrix d1;
  DistanceMatrix d2;
};

struct GammaIJ {
  Assignment first;
  Assignment second;
  ExtInt gamma;
};

/// gamma_IJ = lambda(I, J; G1) + lambda(I, J; G2).
GammaIJ gamma_IJ(const GraphData& g, const IndexSet& I, const IndexSet& J);
GammaIJ gamma_IJ(const L2Instance& inst, const IndexSet& I, const IndexSet& J);

/// (i1, j1, ..., im, jm): edges i_r -> j_r in the closure of G1 and
/// j_r -> i_{r+1} in the reversed closure of G2 (i_{m+1} = i1).
struct AlternateCycle {
  std::vector<int> is;
  std::vector<int> js;

  std::size_t length() const noexcept { return is.size(); }
  /// "(1,2,3,4)", 1-based.
  std::string str() const;

  friend bool operator==(const AlternateCycle&, const AlternateCycle&) = default;
};

struct CycleRow {
  AlternateCycle cycle;
  Integer value;  // sum of lambda(i_r, j_r; G1) + lambda(i_{r+1}, j_r; G2)
  LinearInequality row;
};

/// Every simple alternate cycle with at most max_m pairs and finite value,
/// rotated so that the smallest i leads, in lexicographic order of the
/// vertex sequence. Throws std::invalid_argument when max_m > n/2.
std::vector<CycleRow> enumerate_alternate_cycles(const L2Instance& inst, int max_m);

enum class GraphMode { Pairs, Cycles };

/// Candidate rows before redundancy removal: one per (I, J) with finite
/// gamma_IJ (pairs; n <= 10) or one per alternate cycle (cycles).
InequalitySystem graph_candidates(const L2Instance& inst, GraphMode mode);

/// graph_candidates() followed by remove_redundant().
Description l2_describe_graph(const L2Instance& inst, GraphMode mode);

enum class RedundancyLabel { Irredundant, Concatenation, Splitting, Unexplained };

std::string to_string(RedundancyLabel l);

/// Explains why the row for (I, J) is redundant when `redundant` is set:
/// Concatenation if |I| = 1 and some k has lambda(i,j) = lambda(i,k) + lambda(k,j)
/// in both graphs; Splitting if a proper split I = I1 + I2, J = J1 + J2 has
/// lambda(I,J) = lambda(I1,J1) + lambda(I2,J2) in both graphs; else Unexplained.
RedundancyLabel classify_redundancy(const GraphData& g, const RowSupport& s, bool redundant);

enum class GraphView { G1, G2, Closure1, Closure2, Union };

/// Graphviz digraph over vertices 1..n with edge labels equal to lengths.
/// Union shows closure-of-G1 edges (kind="hat1") and reversed closure-of-G2
/// edges (kind="check2", dashed).
std::string to_dot(const L2Instance& inst, GraphView view);

}  // namespace l2poly
