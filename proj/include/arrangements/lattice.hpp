// Intersection semilattices of arrangements and their Möbius functions.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "arrangements/arrangement.hpp"
#include "arrangements/poset.hpp"

namespace arr {

/// All nonempty intersections of subfamilies, ordered by reverse inclusion.
/// Element 0 is the bottom (the whole space); elements are sorted by
/// dimension descending and then by canonical matrix, which is a linear
/// extension of the order.
struct Semilattice {
  Ring ring;
  Ambient ambient = Ambient::affine;
  int n = 0;
  std::vector<CanonicalSubspace> elements;
  std::vector<int> dims;
  Poset order;
  std::vector<int> atoms;
  /// Element index of each input subspace; -1 when it was skipped as empty.
  std::vector<int> generators;

  int size() const noexcept { return static_cast<int>(elements.size()); }
  /// Unique maximal element, if there is one.
  std::optional<int> top() const;
  /// Maximal dimension of a non-bottom element; -1 if there is none.
  int dimension() const;
  int ambient_dim() const noexcept { return ambient == Ambient::affine ? n : n - 1; }
};

/// Subspaces that are empty over the ring are skipped and duplicates merge
/// (both can only arise from reductions mod p). A subspace equal to the
/// whole space is rejected with std::invalid_argument.
Semilattice build_lattice(const Arrangement& a);

using MobiusTable = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// mu(x, y) for x <= y and 0 elsewhere.
MobiusTable mobius(const Semilattice& lattice);

/// Elements other than the bottom with dim >= j.
SubPoset truncation(const Semilattice& lattice, int j);

/// The open interval (0, x); x must not be the bottom.
SubPoset open_interval_below(const Semilattice& lattice, int x);

/// The open interval (x, y) of the semilattice.
SubPoset open_interval(const Semilattice& lattice, int x, int y);

bool is_hereditary(const Semilattice& lattice);

/// All maximal chains (from the bottom) have lengths congruent mod m.
bool is_mod_m_pure(const Semilattice& lattice, int m);

}  // namespace arr
