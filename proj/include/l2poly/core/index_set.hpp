#pragma once

#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace l2poly {

/// Sorted, duplicate-free set of 0-based indices. External formats print
/// them 1-based (see str()).
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> idx) : IndexSet(std::vector<int>(idx)) {}
  explicit IndexSet(std::vector<int> idx);

  /// Builds from 1-based indices as they appear in files and on the command line.
  static IndexSet from_one_based(const std::vector<int>& idx);

  std::size_t size() const noexcept { return idx_.size(); }
  bool empty() const noexcept { return idx_.empty(); }
  bool contains(int i) const;
  /// All indices lie in [0, n).
  bool within(int n) const;
  int operator[](std::size_t k) const { return idx_[k]; }

  auto begin() const { return idx_.begin(); }
  auto end() const { return idx_.end(); }
  const std::vector<int>& indices() const noexcept { return idx_; }

  IndexSet without(const IndexSet& other) const;

  /// "{1,3}" in 1-based notation.
  std::string str() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<int> idx_;
};

bool disjoint(const IndexSet& a, const IndexSet& b);

/// Calls f on every k-element subset of `from`, in lexicographic order.
void for_each_subset(const IndexSet& from, std::size_t k,
                     const std::function<void(const IndexSet&)>& f);

}  // namespace l2poly
