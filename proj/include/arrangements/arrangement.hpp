// Arrangements of affine or projective subspaces defined by integer forms,
// either over Z or already reduced to F_p.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arrangements/linalg.hpp"

namespace arr {

/// Ring of definition: Z when prime == 0, otherwise F_prime.
struct Ring {
  std::uint32_t prime = 0;

  static Ring integers() { return Ring{0}; }
  static Ring field(std::uint32_t p);
  bool is_integers() const noexcept { return prime == 0; }
  friend bool operator==(const Ring&, const Ring&) = default;
};

enum class Ambient { affine, projective };

const char* to_string(Ambient a) noexcept;

/// The form c0 + a1 x1 + ... + an xn, stored as (c0, a1, ..., an).
struct LinearForm {
  std::vector<std::int64_t> coeffs;

  std::int64_t constant() const { return coeffs.front(); }
  std::size_t variables() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// The forms whose common zero set is one subspace.
using FormGroup = std::vector<LinearForm>;

class Arrangement;

/// A subspace in canonical form: the reduced row echelon form of its
/// equations. Affine columns are (a1..an | c0); projective columns are
/// (a1..an) and describe the affine cone.
struct CanonicalSubspace {
  Ring ring;
  Ambient ambient = Ambient::affine;
  int n = 0;
  bool empty = false;
  /// rank() rows; empty subspaces keep no matrix.
  RationalMatrix equations;
  /// Affine dimension, or projective dimension (cone dimension - 1); -1 if empty.
  int dim = 0;

  int rank() const noexcept { return static_cast<int>(equations.rows()); }
  bool is_whole_space() const noexcept { return !empty && equations.rows() == 0; }

  friend bool operator==(const CanonicalSubspace& a, const CanonicalSubspace& b);
};

/// Lexicographic order on (rows, entries) of the canonical matrix.
bool canonical_less(const CanonicalSubspace& a, const CanonicalSubspace& b);

CanonicalSubspace whole_space(Ring ring, Ambient ambient, int n);

/// Canonical form of the solution set of a group of forms. Coefficients are
/// reduced mod p first when the ring is F_p.
CanonicalSubspace canonicalize(const FormGroup& forms, Ring ring, Ambient ambient, int n);

/// Intersection of the given subspaces (the whole space for an empty list
/// is not defined: at least one input is required). Throws
/// std::invalid_argument on mixed ambient, ring or dimension.
CanonicalSubspace intersect(std::span<const CanonicalSubspace> xs);
CanonicalSubspace intersect(const CanonicalSubspace& a, const CanonicalSubspace& b);

/// True iff the point set of `small` lies inside that of `big`.
bool contained_in(const CanonicalSubspace& small, const CanonicalSubspace& big);

class Arrangement {
 public:
  /// Validates every subspace: correct form lengths, nonempty solution set
  /// over the ring, not the whole space, homogeneous when projective, and no
  /// duplicates. Errors are std::invalid_argument naming the subspace index.
  Arrangement(Ring ring, Ambient ambient, int n, std::vector<FormGroup> subspaces, std::string name = {});

  /// Skips the nonempty / whole-space / duplicate checks; form lengths and
  /// projective homogeneity are still enforced. Used for reductions mod p.
  static Arrangement unchecked(Ring ring, Ambient ambient, int n, std::vector<FormGroup> subspaces,
                               std::string name = {});

  Ring ring() const noexcept { return ring_; }
  Ambient ambient() const noexcept { return ambient_; }
  /// Number of coordinates; the projective ambient is P^{n-1}.
  int n() const noexcept { return n_; }
  /// Dimension of the ambient space (n or n - 1).
  int ambient_dim() const noexcept { return ambient_ == Ambient::affine ? n_ : n_ - 1; }
  const std::vector<FormGroup>& subspaces() const noexcept { return subspaces_; }
  std::size_t size() const noexcept { return subspaces_.size(); }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  CanonicalSubspace canonical(std::size_t i) const;
  /// Maximal dimension of a subspace; -1 for the empty arrangement.
  int dimension() const;
  /// Affine arrangement with only homogeneous forms.
  bool is_central() const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  Arrangement() = default;
  void check_shape() const;

  Ring ring_;
  Ambient ambient_ = Ambient::affine;
  int n_ = 0;
  std::vector<FormGroup> subspaces_;
  std::string name_;
};

struct ModPReduction {
  Arrangement arrangement;
  /// Subspaces whose reduced system has no solutions (or only 0).
  std::vector<std::size_t> inconsistent;
  /// Subspaces whose reduced forms all vanish.
  std::vector<std::size_t> whole_space;
  /// Pairs (i, j), i < j, that coincide after reduction.
  std::vector<std::pair<std::size_t, std::size_t>> duplicates;

  bool clean() const noexcept { return inconsistent.empty() && whole_space.empty() && duplicates.empty(); }
};

ModPReduction reduce_mod_p(const Arrangement& a, std::uint32_t p);

struct GoodPrimeResult {
  bool good = true;
  /// On failure: subspace indices whose stacked forms drop rank mod p.
  std::vector<std::size_t> witness;
  int rank_q = 0;
  int rank_p = 0;
  std::uint64_t subsets_visited = 0;
};

/// Rank condition over all subsets of subspaces. For affine arrangements both
/// the full forms and their linear parts are compared, so consistency is
/// preserved too. Throws std::length_error once more than `cap` subsets
/// would be examined.
GoodPrimeResult good_prime(const Arrangement& a, std::uint32_t p, std::uint64_t cap = std::uint64_t{1} << 20);

/// Ranks of the stacked forms of a subset over Q and over F_p (full forms).
std::pair<int, int> stacked_ranks(const Arrangement& a, std::span<const std::size_t> subset, std::uint32_t p);

enum class KEqualFamily { A, B, D };

std::optional<KEqualFamily> parse_family(const std::string& s);

/// The k-equal arrangement as a central affine Z-arrangement in n variables.
Arrangement generate_k_equal(KEqualFamily family, int n, int k);

/// Reinterpret a central affine arrangement projectively.
Arrangement projectivize(const Arrangement& a);

/// Affine cone of a projective arrangement. The cone over the empty
/// arrangement is the origin.
Arrangement affine_cone(const Arrangement& a);

}  // namespace arr
