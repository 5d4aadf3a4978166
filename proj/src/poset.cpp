#include "arrangements/poset.hpp"

#include <stdexcept>

namespace arr {

Poset::Poset(OrderMatrix less) : less_(std::move(less)) {
  const int n = size();
  if (less_.cols() != n) throw std::invalid_argument("poset: order matrix must be square");
  for (int i = 0; i < n; ++i) {
    if (less_(i, i)) throw std::invalid_argument("poset: relation is not irreflexive");
    for (int j = 0; j < n; ++j) {
      if (!less_(i, j)) continue;
      for (int k = 0; k < n; ++k)
        if (less_(j, k) && !less_(i, k)) throw std::invalid_argument("poset: relation is not transitive");
    }
  }
  covers_.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!less_(i, j)) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k)
        if (less_(i, k) && less_(k, j)) cover = false;
      if (cover) covers_[i].push_back(j);
    }
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int j = 0; j < size(); ++j)
    if (!less_.col(j).any()) out.push_back(j);
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (covers_[i].empty()) out.push_back(i);
  return out;
}

Poset Poset::induced(std::span<const int> members) const {
  const auto m = static_cast<Eigen::Index>(members.size());
  OrderMatrix sub(m, m);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b) sub(a, b) = less_(members[a], members[b]);
  return Poset(std::move(sub));
}

}  // namespace arr
