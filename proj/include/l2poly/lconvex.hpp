#pragma once

// L-convex and L-natural-convex sets and polyhedra described by difference
// constraints x_j - x_i <= gamma_ij (plus bounds alpha_i <= x_i <= beta_i in
// the L-natural case).

#include "l2poly/core/errors.hpp"
#include "l2poly/core/ext_int.hpp"
#include "l2poly/core/inequality.hpp"
#include "l2poly/core/point_set.hpp"

#include <optional>
#include <span>
#include <tuple>
#include <vector>

namespace l2poly {

/// Dense n x n matrix of extended integers, row-major, 0-based.
class ExtMatrix {
 public:
  ExtMatrix() = default;
  ExtMatrix(int n, const ExtInt& fill) : n_(n), data_(static_cast<std::size_t>(n * n), fill) {}

  int dim() const noexcept { return n_; }
  ExtInt& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * n_ + j)]; }
  const ExtInt& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * n_ + j)]; }

  friend bool operator==(const ExtMatrix&, const ExtMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<ExtInt> data_;
};

/// One finite bound gamma_ij on x_j - x_i (0-based i, j).
struct Edge {
  int from;
  int to;
  Integer length;
};

/// The constraint matrix of an L-convex polyhedron {x | x_j - x_i <= gamma_ij}.
/// +inf entries mean "no constraint". The diagonal is 0. Construction rejects
/// matrices with a negative cycle, so a GammaSystem always describes a
/// nonempty set.
class GammaSystem {
 public:
  /// Throws NegativeCycleError. Negative diagonal entries count as negative cycles.
  explicit GammaSystem(ExtMatrix gamma, bool lattice_scoped = false);

  /// All entries +inf except those in `edges`; parallel edges keep the minimum.
  static GammaSystem from_edges(int n, std::span<const Edge> edges, bool lattice_scoped = false);

  int dim() const noexcept { return gamma_.dim(); }
  const ExtInt& operator()(int i, int j) const { return gamma_(i, j); }
  const ExtMatrix& matrix() const noexcept { return gamma_; }
  bool lattice_scoped() const noexcept { return lattice_scoped_; }

  /// Finite off-diagonal entries in row-major order.
  std::vector<Edge> edges() const;

  /// Rows x_j - x_i <= gamma_ij over `block`1..n; +inf entries are omitted.
  InequalitySystem to_system(const std::string& block = "x") const;

  friend bool operator==(const GammaSystem&, const GammaSystem&) = default;

 private:
  ExtMatrix gamma_;
  bool lattice_scoped_ = false;
};

/// An L-natural-convex description {x | alpha <= x <= beta, x_j - x_i <= gamma_ij}.
/// alpha may hold -inf, beta +inf. Construction checks that the matrix over
/// N + {0} with entries gamma~_{i0} = -alpha_i and gamma~_{0j} = beta_j has no
/// negative cycle.
class LnatSystem {
 public:
  LnatSystem(std::vector<ExtInt> alpha, std::vector<ExtInt> beta, ExtMatrix gamma,
             bool lattice_scoped = true);

  int dim() const noexcept { return gamma_.dim(); }
  const std::vector<ExtInt>& alpha() const noexcept { return alpha_; }
  const std::vector<ExtInt>& beta() const noexcept { return beta_; }
  const ExtMatrix& gamma() const noexcept { return gamma_; }
  bool lattice_scoped() const noexcept { return lattice_scoped_; }

  /// Every alpha_i and beta_i finite.
  bool bounded() const;

  InequalitySystem to_system(const std::string& block = "x") const;

  friend bool operator==(const LnatSystem&, const LnatSystem&) = default;

 private:
  std::vector<ExtInt> alpha_;
  std::vector<ExtInt> beta_;
  ExtMatrix gamma_;
  bool lattice_scoped_ = true;
};

/// A cycle i1 -> ... -> im -> i1 of negative total length, rotated so that
/// the smallest vertex comes first.
struct NegativeCycle {
  std::vector<int> vertices;
  Integer length;
};

/// Bellman-Ford from a virtual source over the edges i -> j of length m(i, j).
std::optional<NegativeCycle> detect_negative_cycle(const ExtMatrix& m);

/// All-pairs shortest path lengths (Floyd-Warshall). Same polyhedron, and the
/// result satisfies gamma_ij + gamma_jk >= gamma_ik.
GammaSystem triangle_closure(const GammaSystem& g);
/// Closure of a raw matrix; throws NegativeCycleError.
ExtMatrix triangle_closure(const ExtMatrix& m);

/// gamma_ij = max{x_j - x_i | x in S}. The result is lattice-scoped.
GammaSystem gamma_from_points(const PointSet& s);

/// (alpha, beta, gamma) with alpha_i = min x_i, beta_i = max x_i and
/// gamma_ij = max (x_j - x_i) over a nonempty finite set.
LnatSystem lnat_from_points(const PointSet& s);

/// Throws DimensionMismatch.
bool membership(const GammaSystem& g, std::span<const Integer> x);
bool membership(const LnatSystem& s, std::span<const Integer> x);

/// The (n+1)-dimensional L-convex description whose slice x_{n+1} = 0 is the
/// L-natural set of `s`. The extra coordinate is the last index.
GammaSystem lnat_to_l(const LnatSystem& s);

/// Slice {x | (x, 0) in T} of an (n+1)-dimensional L-convex description,
/// with alpha_i = -gamma^_{i,n+1}, beta_i = gamma^_{n+1,i} taken from the
/// closure gamma^. Throws DimensionMismatch for a 1-dimensional input and
/// EmptySlice if the sliced bounds are inconsistent.
LnatSystem l_to_lnat_restrict(const GammaSystem& g);

}  // namespace l2poly
