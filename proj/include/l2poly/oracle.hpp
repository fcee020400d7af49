#pragma once

// Brute-force ground truth over finite integer point sets.

#include "l2poly/minkowski.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace l2poly {

/// Integer box [lo, hi].
struct Window {
  Point lo;
  Point hi;

  int dim() const noexcept { return static_cast<int>(lo.size()); }
  /// Number of lattice points; 0 when some lo_i > hi_i.
  Integer volume() const;
  bool contains(const Point& p) const;

  /// [lower - slack, upper + slack] around a nonempty set.
  static Window around(const PointSet& s, long long slack = 0);
  /// [alpha1 + alpha2 - slack, beta1 + beta2 + slack]; both systems bounded.
  static Window for_sum(const LnatSystem& s1, const LnatSystem& s2, long long slack = 1);
};

/// L2POLY_ENUM_CAP if set, 10^6 otherwise. Throws Error on a malformed value.
std::uint64_t enumeration_cap();

/// Calls f on every lattice point of w in lexicographic order. Throws
/// VolumeCapExceeded when the volume exceeds enumeration_cap().
void for_each_point(const Window& w, const std::function<void(const Point&)>& f);

/// Integer points of w satisfying every row; sys's variables are matched to
/// the window coordinates in order.
PointSet enumerate(const InequalitySystem& sys, const Window& w);

PointSet minkowski_sum(const PointSet& a, const PointSet& b);

bool is_box(const PointSet& s);

/// Closed under componentwise max and min.
bool is_sublattice(const PointSet& s);

/// Without modulo_one the set itself must be closed under x +- 1, which a
/// finite set never is. With modulo_one each point stands for its class
/// x + Z1 (normalized so that x_n = 0) and join/meet closure is checked on
/// the saturation.
bool is_l_convex(const PointSet& s, bool modulo_one);

/// Round trip through (alpha, beta, gamma) read off the points.
bool is_lnat_convex(const PointSet& s);

/// z + d, z + d' in s imply z, z + d + d' in s for distinct d, d' in
/// {-chi1, chi1 - chi2, ..., chi(n-1) - chin, chin}, and s is the set of
/// lattice points cut out by its own bounds on consecutive sums x(I).
bool is_multimodular(const PointSet& s);

/// (Dy)_i = y_i - y_{i-1}; the inverse takes prefix sums.
PointSet d_transform(const PointSet& s, bool inverse);

/// Lattice points of a bounded L-natural system.
PointSet points_of(const LnatSystem& s);

/// x in (P1 + P2) cap Z^n: the system y in P1, x - y in P2 is a difference
/// system in y, feasible over Z iff it has no negative cycle.
bool l2_membership(const L2Instance& inst, const Point& x);
bool lnat2_membership(const LnatSystem& s1, const LnatSystem& s2, const Point& x);

PointSet enumerate_l2(const L2Instance& inst, const Window& w);

/// Componentwise max and min of a nonempty set and whether they belong to it.
/// Every bounded L-natural-2 set contains both.
struct ExtremeCheck {
  Point max;
  Point min;
  bool has_max = false;
  bool has_min = false;

  bool holds() const noexcept { return has_max && has_min; }
};

ExtremeCheck extreme_elements(const PointSet& s);

/// s equals points_of(s1) + points_of(s2).
bool verify_lnat2_decomposition(const PointSet& s, const LnatSystem& s1, const LnatSystem& s2);

enum class Proposition {
  L2AndLnat,            // L2 and L-natural implies L
  Lnat2AndMultimodular, // implies box
  Lnat2AndMnat2,        // implies box
};

/// Hypotheses and conclusion evaluated on one set. An inconsistent verdict
/// means a bug in this library; `set` is then the counterexample.
struct PropositionCheck {
  Proposition which = Proposition::L2AndLnat;
  bool first = false;   // L2 / L-natural-2 side, certified by the decomposition
  bool second = false;
  bool conclusion = false;
  PointSet set;

  bool hypotheses() const noexcept { return first && second; }
  bool consistent() const noexcept { return !hypotheses() || conclusion; }
};

/// The L2 set of `inst` restricted to w; L-natural convexity of the
/// restriction against sublattice closure.
PropositionCheck check_proposition(const L2Instance& inst, const Window& w);
/// s1 + s2 against multimodularity.
PropositionCheck check_proposition(const LnatSystem& s1, const LnatSystem& s2);
/// s1 + s2 against a supplied M-natural-2 description: every row must be
/// c * chi_I <= b and its lattice points on the bounding window must equal the set.
PropositionCheck check_proposition(const LnatSystem& s1, const LnatSystem& s2, const InequalitySystem& mnat2);

std::string to_string(Proposition p);

}  // namespace l2poly
