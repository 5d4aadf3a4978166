#include "arrangements/topology.hpp"

#include <algorithm>
#include <map>

#include <Eigen/SparseCore>

#include "arrangements/linalg.hpp"

namespace arr {

OrderComplex::OrderComplex(const Poset& poset) {
  const int n = poset.size();
  for (int v = 0; v < n; ++v) vertices_.push_back(v);
  Chain chain;
  auto extend = [&](auto& self, int v) -> void {
    chain.push_back(v);
    const auto k = chain.size() - 1;
    if (faces_.size() <= k) faces_.resize(k + 1);
    faces_[k].push_back(chain);
    for (int u = 0; u < n; ++u)
      if (poset.less(v, u)) self(self, u);
    chain.pop_back();
  };
  for (int v = 0; v < n; ++v) extend(extend, v);
  // Chains are emitted in increasing poset order, so sorting the vertex
  // lists is unnecessary; sort each dimension for a stable face order.
  for (auto& fs : faces_) std::sort(fs.begin(), fs.end());
}

std::size_t OrderComplex::face_count() const {
  std::size_t total = 0;
  for (const auto& fs : faces_) total += fs.size();
  return total;
}

std::vector<Chain> OrderComplex::facets() const {
  std::vector<Chain> out;
  for (std::size_t k = 0; k < faces_.size(); ++k) {
    std::map<Chain, bool> covered;
    if (k + 1 < faces_.size())
      for (const auto& big : faces_[k + 1])
        for (std::size_t drop = 0; drop < big.size(); ++drop) {
          Chain c = big;
          c.erase(c.begin() + static_cast<std::ptrdiff_t>(drop));
          covered[c] = true;
        }
    for (const auto& f : faces_[k])
      if (!covered.count(f)) out.push_back(f);
  }
  return out;
}

std::int64_t BettiVector::reduced(int i) const {
  const auto idx = static_cast<std::size_t>(i + 1);
  return i >= -1 && idx < values.size() ? values[idx] : 0;
}

std::int64_t BettiVector::unreduced(int i) const {
  if (i < 0) return 0;
  const bool nonempty = reduced(-1) == 0;
  return reduced(i) + (i == 0 && nonempty ? 1 : 0);
}

int BettiVector::top() const {
  for (int i = static_cast<int>(values.size()) - 2; i >= -1; --i)
    if (reduced(i) != 0) return i;
  return -2;
}

BettiVector reduced_betti(const OrderComplex& k) {
  BettiVector out;
  if (k.empty()) {
    out.values = {1};
    return out;
  }
  const int dim = k.dimension();
  // rank_of[k] = rank of the boundary from dimension k to k - 1; the
  // augmentation (k = 0) has rank 1 for a nonempty complex.
  std::vector<Eigen::Index> rank_of(dim + 2, 0);
  rank_of[0] = 1;
  for (int d = 1; d <= dim; ++d) {
    const auto& lower = k.faces(d - 1);
    const auto& upper = k.faces(d);
    std::map<Chain, int> index;
    for (std::size_t r = 0; r < lower.size(); ++r) index.emplace(lower[r], static_cast<int>(r));
    std::vector<Eigen::Triplet<int>> entries;
    for (std::size_t c = 0; c < upper.size(); ++c)
      for (std::size_t drop = 0; drop < upper[c].size(); ++drop) {
        Chain face = upper[c];
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
        entries.emplace_back(index.at(face), static_cast<int>(c), drop % 2 == 0 ? 1 : -1);
      }
    Eigen::SparseMatrix<int> boundary(static_cast<Eigen::Index>(lower.size()),
                                      static_cast<Eigen::Index>(upper.size()));
    boundary.setFromTriplets(entries.begin(), entries.end());
    rank_of[d] = rational_rank(boundary);
  }
  out.values.assign(dim + 2, 0);
  out.values[0] = 0;  // C_{-1} = Q is hit by the augmentation
  for (int d = 0; d <= dim; ++d) {
    const auto faces = static_cast<Eigen::Index>(k.faces(d).size());
    out.values[d + 1] = faces - rank_of[d] - rank_of[d + 1];
  }
  return out;
}

BettiVector reduced_betti(const Poset& p) { return reduced_betti(OrderComplex(p)); }

std::int64_t euler_char_reduced(const OrderComplex& k) {
  std::int64_t chi = -1;
  for (int d = 0; d <= k.dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(k.faces(d).size());
  return chi;
}

CmResult is_rationally_cm(const Semilattice& lattice) {
  const int size = lattice.size();
  // Adjoin a new top above everything.
  Poset::OrderMatrix less = Poset::OrderMatrix::Constant(size + 1, size + 1, false);
  less.topLeftCorner(size, size) = lattice.order.relation();
  for (int i = 0; i < size; ++i) less(i, size) = true;
  const Poset hat(std::move(less));

  CmResult out;
  for (int x = 0; x <= size; ++x)
    for (int y = x + 1; y <= size; ++y) {
      if (!hat.less(x, y)) continue;
      std::vector<int> members;
      for (int z = 0; z <= size; ++z)
        if (hat.less(x, z) && hat.less(z, y)) members.push_back(z);
      const OrderComplex k(hat.induced(members));
      const auto betti = reduced_betti(k);
      for (int i = -1; i < k.dimension(); ++i)
        if (betti.reduced(i) != 0) {
          out.cohen_macaulay = false;
          out.failing_interval = std::make_pair(x, y);
          out.failing_degree = i;
          return out;
        }
    }
  return out;
}

}  // namespace arr
