#pragma once

// Exact Fourier-Motzkin elimination, feasibility and redundancy tests over
// integer-coefficient systems.

#include "l2poly/core/inequality.hpp"

#include <vector>

namespace l2poly {

/// Bookkeeping for eliminating one variable.
struct EliminationStep {
  Variable variable;
  std::size_t positive = 0;  // rows with a positive coefficient on `variable`
  std::size_t negative = 0;
  std::size_t zero = 0;
  std::size_t generated = 0;  // positive * negative
  std::size_t discarded = 0;  // generated or carried rows removed as redundant
  /// Largest multiplier applied to a row when cancelling `variable`. A value
  /// above 1 means the lattice reading of the result may over-approximate.
  Integer max_scale = 1;
};

struct EliminationTrace {
  std::vector<EliminationStep> steps;

  bool lattice_overapprox() const;
};

struct Elimination {
  InequalitySystem system;
  EliminationStep step;
};

/// Pairs every row with a positive coefficient on `v` with every row with a
/// negative one, cross-scaled by |a_kv|/g and |a_iv|/g (g their gcd). The
/// result omits `v` from its variable list and keeps the zero rows first,
/// then the generated rows in pair order. Throws UnknownVariable.
Elimination eliminate_variable(const InequalitySystem& sys, const Variable& v);

struct Projection {
  InequalitySystem system;
  EliminationTrace trace;
};

/// Eliminates every variable outside `keep` in ascending order, removing
/// redundant rows after each elimination. The result is canonical. Throws
/// UnknownVariable or Infeasible.
Projection project(const InequalitySystem& sys, const std::vector<Variable>& keep);

/// Whether the system has a real solution, honouring strict rows.
bool feasible(const InequalitySystem& sys);

/// Whether every real solution of `sys` satisfies `row`.
bool implies(const InequalitySystem& sys, const LinearInequality& row);

/// Whether `row` is implied by `sys` minus one copy of `row` over the reals.
bool is_redundant(const LinearInequality& row, const InequalitySystem& sys);

/// Canonicalizes, then drops rows implied by the others one at a time,
/// largest coefficient and widest support first. Output keeps canonical
/// order. Throws Infeasible.
InequalitySystem remove_redundant(const InequalitySystem& sys);

/// Every row of `a` is implied by `b` and vice versa. Both systems are read
/// over the union of their variables.
bool mutually_implied(const InequalitySystem& a, const InequalitySystem& b);

}  // namespace l2poly
