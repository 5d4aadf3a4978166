// Finite posets given by their strict order relation.
#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

namespace arr {

class Poset {
 public:
  using OrderMatrix = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

  Poset() = default;
  /// less(i, j) means i < j. Throws std::invalid_argument unless the relation
  /// is irreflexive and transitive (hence antisymmetric).
  explicit Poset(OrderMatrix less);

  int size() const noexcept { return static_cast<int>(less_.rows()); }
  bool empty() const noexcept { return size() == 0; }
  bool less(int i, int j) const { return less_(i, j); }
  bool leq(int i, int j) const { return i == j || less_(i, j); }
  const OrderMatrix& relation() const noexcept { return less_; }

  /// Elements covering i, ascending.
  const std::vector<int>& upper_covers(int i) const { return covers_[i]; }
  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

  /// Subposet on the given elements, numbered in the order given.
  Poset induced(std::span<const int> members) const;

 private:
  OrderMatrix less_;
  std::vector<std::vector<int>> covers_;
};

/// A poset together with the indices of its elements in a parent structure.
struct SubPoset {
  Poset poset;
  std::vector<int> members;
};

}  // namespace arr
