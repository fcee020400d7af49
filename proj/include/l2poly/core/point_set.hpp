#pragma once

#include "l2poly/core/inequality.hpp"

#include <initializer_list>
#include <set>
#include <string>
#include <vector>

namespace l2poly {

/// Finite duplicate-free set of integer n-vectors.
class PointSet {
 public:
  explicit PointSet(int n = 0) : n_(n) {}
  PointSet(int n, std::initializer_list<std::initializer_list<long long>> pts);

  int dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return pts_.size(); }
  bool empty() const noexcept { return pts_.empty(); }

  /// Throws DimensionMismatch.
  void insert(Point p);
  bool contains(const Point& p) const { return pts_.count(p) != 0; }

  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }

  /// Componentwise min / max over the points; the set must be nonempty.
  Point lower() const;
  Point upper() const;

  std::string str() const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  int n_;
  std::set<Point> pts_;
};

Point make_point(std::initializer_list<long long> xs);
std::string point_str(const Point& p);

}  // namespace l2poly
