#include "l2poly/core/index_set.hpp"

#include <algorithm>

namespace l2poly {

IndexSet::IndexSet(std::vector<int> idx) : idx_(std::move(idx)) {
  std::sort(idx_.begin(), idx_.end());
  idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
}

IndexSet IndexSet::from_one_based(const std::vector<int>& idx) {
  std::vector<int> z;
  z.reserve(idx.size());
  for (int i : idx) z.push_back(i - 1);
  return IndexSet(std::move(z));
}

bool IndexSet::contains(int i) const { return std::binary_search(idx_.begin(), idx_.end(), i); }

bool IndexSet::within(int n) const {
  return idx_.empty() || (idx_.front() >= 0 && idx_.back() < n);
}

IndexSet IndexSet::without(const IndexSet& other) const {
  std::vector<int> out;
  std::set_difference(idx_.begin(), idx_.end(), other.idx_.begin(), other.idx_.end(),
                      std::back_inserter(out));
  return IndexSet(std::move(out));
}

std::string IndexSet::str() const {
  std::string s = "{";
  for (std::size_t k = 0; k < idx_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(idx_[k] + 1);
  }
  return s + "}";
}

bool disjoint(const IndexSet& a, const IndexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return true;
}

void for_each_subset(const IndexSet& from, std::size_t k,
                     const std::function<void(const IndexSet&)>& f) {
  const auto& base = from.indices();
  if (k > base.size()) return;
  std::vector<std::size_t> pos(k);
  for (std::size_t t = 0; t < k; ++t) pos[t] = t;
  std::vector<int> pick(k);
  while (true) {
    for (std::size_t t = 0; t < k; ++t) pick[t] = base[pos[t]];
    f(IndexSet(pick));
    // advance to the next combination
    std::size_t t = k;
    while (t > 0 && pos[t - 1] == base.size() - k + t - 1) --t;
    if (t == 0) return;
    ++pos[t - 1];
    for (std::size_t u = t; u < k; ++u) pos[u] = pos[u - 1] + 1;
  }
}

}  // namespace l2poly
