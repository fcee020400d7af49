#pragma once

#include "l2poly/core/index_set.hpp"
#include "l2poly/core/integer.hpp"
#include "l2poly/core/variable.hpp"

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace l2poly {

using Point = std::vector<Integer>;

/// <a, x> <= b (or < b when strict) with integer coefficients keyed by
/// variable. Zero coefficients are never stored.
class LinearInequality {
 public:
  using Coeffs = std::map<Variable, Integer>;

  LinearInequality() = default;
  LinearInequality(Coeffs coeffs, Integer rhs, bool strict = false);

  const Coeffs& coeffs() const noexcept { return coeffs_; }
  const Integer& coeff(const Variable& v) const;
  void set_coeff(const Variable& v, Integer c);

  const Integer& rhs() const noexcept { return rhs_; }
  void set_rhs(Integer b) { rhs_ = std::move(b); }

  /// Strict rows only occur inside feasibility and redundancy tests.
  bool strict() const noexcept { return strict_; }

  bool is_constant() const noexcept { return coeffs_.empty(); }

  /// Negation <-a, x> < -b (or <= -b when this row is strict).
  LinearInequality negated() const;

  /// <a, point> with point aligned to `vars`. Throws DimensionMismatch or
  /// UnknownVariable.
  Integer lhs_value(std::span<const Variable> vars, std::span<const Integer> point) const;

  /// Positive terms first, then negative ones, e.g. "+x2 +x4 -x1 -x3 <= 15".
  std::string str() const;

  friend bool operator==(const LinearInequality&, const LinearInequality&) = default;

 private:
  Coeffs coeffs_;
  Integer rhs_ = 0;
  bool strict_ = false;
};

/// x(J) - x(I) <= bound over variables `block`1..n (I, J 0-based).
LinearInequality difference_row(const IndexSet& J, const IndexSet& I, Integer bound,
                                const std::string& block = "x");

/// Parses "x2 + x4 - x1 - x3 <= 15", "2y1 - 3x2 < 4", "0 <= 2".
LinearInequality parse_inequality(std::string_view text);

/// True iff <a, point> <= b (strictly when the row is strict).
bool evaluate(const LinearInequality& row, std::span<const Variable> vars,
              std::span<const Integer> point);

/// Rows over an ordered variable list. A lattice-scoped system is read over
/// Z^n, which permits rounding right-hand sides in canonicalize().
class InequalitySystem {
 public:
  InequalitySystem() = default;
  explicit InequalitySystem(std::vector<Variable> variables, bool lattice_scoped = false);

  const std::vector<Variable>& variables() const noexcept { return variables_; }
  const std::vector<LinearInequality>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }

  bool lattice_scoped() const noexcept { return lattice_scoped_; }
  void set_lattice_scoped(bool v) noexcept { lattice_scoped_ = v; }

  /// Throws UnknownVariable if the row mentions a variable outside variables().
  void add(LinearInequality row);
  void add(std::string_view text) { add(parse_inequality(text)); }
  void erase(std::size_t k) { rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(k)); }

  /// -1 when absent.
  int index_of(const Variable& v) const;

  bool satisfied_by(std::span<const Integer> point) const;

  /// One row per line.
  std::string str() const;

  friend bool operator==(const InequalitySystem&, const InequalitySystem&) = default;

 private:
  std::vector<Variable> variables_;
  std::vector<LinearInequality> rows_;
  bool lattice_scoped_ = false;
};

/// block1, ..., blockn.
std::vector<Variable> make_variables(const std::string& block, int n);

/// Ordering used for canonical listings: support size, then positive-term
/// variables, then negative-term variables, then coefficients, rhs, strictness.
bool canonical_less(const LinearInequality& a, const LinearInequality& b);

/// Divides each row by the gcd of its coefficients when that gcd divides the
/// rhs (lattice-scoped systems floor the rhs instead), merges rows with equal
/// coefficients keeping the tightest, and sorts with canonical_less.
InequalitySystem canonicalize(const InequalitySystem& sys);

}  // namespace l2poly
