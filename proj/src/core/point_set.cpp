#include "l2poly/core/point_set.hpp"

#include "l2poly/core/errors.hpp"

namespace l2poly {

PointSet::PointSet(int n, std::initializer_list<std::initializer_list<long long>> pts) : n_(n) {
  for (const auto& p : pts) insert(make_point(p));
}

void PointSet::insert(Point p) {
  if (static_cast<int>(p.size()) != n_)
    throw DimensionMismatch("point of dimension " + std::to_string(p.size()) + " in a set of dimension " +
                            std::to_string(n_));
  pts_.insert(std::move(p));
}

Point PointSet::lower() const {
  if (pts_.empty()) throw std::logic_error("lower() of an empty point set");
  Point lo = *pts_.begin();
  for (const auto& p : pts_)
    for (int i = 0; i < n_; ++i)
      if (p[i] < lo[i]) lo[i] = p[i];
  return lo;
}

Point PointSet::upper() const {
  if (pts_.empty()) throw std::logic_error("upper() of an empty point set");
  Point hi = *pts_.begin();
  for (const auto& p : pts_)
    for (int i = 0; i < n_; ++i)
      if (p[i] > hi[i]) hi[i] = p[i];
  return hi;
}

std::string PointSet::str() const {
  std::string s = "{";
  bool first = true;
  for (const auto& p : pts_) {
    if (!first) s += ", ";
    first = false;
    s += point_str(p);
  }
  return s + "}";
}

Point make_point(std::initializer_list<long long> xs) {
  Point p;
  p.reserve(xs.size());
  for (long long x : xs) p.emplace_back(x);
  return p;
}

std::string point_str(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += p[i].str();
  }
  return s + ")";
}

}  // namespace l2poly
