// Order complexes and their rational homology.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "arrangements/lattice.hpp"
#include "arrangements/poset.hpp"

namespace arr {

using Chain = std::vector<int>;

/// All chains of a poset, grouped by dimension (a chain of k+1 elements has
/// dimension k). Chains list their elements in increasing order.
class OrderComplex {
 public:
  explicit OrderComplex(const Poset& poset);

  bool empty() const noexcept { return faces_.empty(); }
  /// -1 for the empty complex.
  int dimension() const noexcept { return static_cast<int>(faces_.size()) - 1; }
  const std::vector<Chain>& faces(int k) const { return faces_.at(k); }
  std::size_t face_count() const;
  const std::vector<int>& vertices() const noexcept { return vertices_; }
  /// Maximal chains.
  std::vector<Chain> facets() const;

 private:
  std::vector<int> vertices_;
  std::vector<std::vector<Chain>> faces_;
};

/// Reduced rational Betti numbers for i = -1, 0, 1, ...
struct BettiVector {
  /// values[i + 1] = reduced beta_i.
  std::vector<std::int64_t> values;

  std::int64_t reduced(int i) const;
  /// Ordinary Betti numbers: beta_0 = reduced beta_0 + 1 for a nonempty complex.
  std::int64_t unreduced(int i) const;
  /// Largest i with a nonzero reduced Betti number; -2 if all vanish.
  int top() const;
  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

BettiVector reduced_betti(const OrderComplex& k);
BettiVector reduced_betti(const Poset& p);

/// Sum over faces of (-1)^dim, minus one for the empty face.
std::int64_t euler_char_reduced(const OrderComplex& k);

struct CmResult {
  bool cohen_macaulay = true;
  /// First failing pair in the lattice with a top adjoined; the top has
  /// index lattice.size().
  std::optional<std::pair<int, int>> failing_interval;
  int failing_degree = 0;
};

CmResult is_rationally_cm(const Semilattice& lattice);

}  // namespace arr
