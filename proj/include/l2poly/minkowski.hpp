#pragma once

// Polyhedral descriptions of Minkowski sums of two L-convex (L2) or two
// L-natural-convex (L-natural-2) polyhedra, computed by substituting
// z = x - y into the summands' constraints and projecting y away.

#include "l2poly/core/index_set.hpp"
#include "l2poly/fm.hpp"
#include "l2poly/lconvex.hpp"

#include <vector>

namespace l2poly {

/// P = P1 + P2 with P1 (edges of g1) and P2 (edges of g2) L-convex in R^n.
class L2Instance {
 public:
  /// Throws DimensionMismatch when the summands differ in dimension.
  L2Instance(GammaSystem g1, GammaSystem g2);

  int dim() const noexcept { return g1_.dim(); }
  const GammaSystem& g1() const noexcept { return g1_; }
  const GammaSystem& g2() const noexcept { return g2_; }

 private:
  GammaSystem g1_;
  GammaSystem g2_;
};

/// A row x(J) - x(I) <= bound, identified by its index sets.
struct RowSupport {
  IndexSet I;  // coefficient -1
  IndexSet J;  // coefficient +1

  friend bool operator==(const RowSupport&, const RowSupport&) = default;
};

/// Description over x1..xn with one RowSupport per row.
struct Description {
  InequalitySystem system;
  std::vector<RowSupport> supports;
  EliminationTrace trace;  // empty unless produced by elimination
};

enum class RowShape {
  L2,     // |I| = |J|
  Lnat2,  // |I| - |J| in {-1, 0, 1}
};

/// Reads (I, J) off a row over x1..xn. Throws AssertionViolation if a
/// coefficient lies outside {-1, 0, 1} or the sizes violate `shape`.
RowSupport support_of(const LinearInequality& row, int n, RowShape shape);

/// Rows y_j - y_i <= g1_ij for finite g1 entries and y_a - y_b + x_b - x_a <= g2_ab
/// for finite g2 entries, over x1..xn, y1..yn. +inf entries are omitted.
InequalitySystem build_combined_system(const L2Instance& inst);

/// Projects the combined system onto x, removes redundant rows and checks
/// that every row has the x(J) - x(I) shape with |I| = |J|. When P is not
/// full-dimensional a row may first be traded for an equivalent one of
/// that shape modulo the implicit equalities. Throws
/// AssertionViolation or Infeasible.
Description l2_describe_fm(const L2Instance& inst);

/// The L2 instance in dimension n+1 whose slice x_{n+1} = 0 is s1 + s2.
L2Instance lnat2_embedding(const LnatSystem& s1, const LnatSystem& s2);

/// Substitutes x_{n+1} = 0 into a description over x1..x_{n+1}, removes
/// redundant rows and checks the L-natural-2 row shape. Throws Infeasible
/// when the slice is empty, AssertionViolation on a shape violation.
Description slice_last_coordinate(const InequalitySystem& embedded, int n);

/// Description of s1 + s2 via the (n+1)-dimensional embedding, the
/// elimination route and slice_last_coordinate(). The trace is the
/// elimination trace of the embedded instance.
Description lnat2_describe(const LnatSystem& s1, const LnatSystem& s2);

}  // namespace l2poly
