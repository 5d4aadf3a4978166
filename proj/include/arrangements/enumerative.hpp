// Characteristic polynomials, Betti tables of truncations and intervals,
// zeta factorizations and Frobenius weight profiles.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arrangements/algebra.hpp"
#include "arrangements/lattice.hpp"
#include "arrangements/topology.hpp"

namespace arr {

/// sum_x mu(0, x) t^{dim x}. Affine lattices only.
IntPolynomial char_poly(const Semilattice& lattice);

/// sum_x mu(0, x) (1 + t + ... + t^{dim x}). Projective lattices only.
IntPolynomial reduced_char_poly(const Semilattice& lattice);

/// (t - 1) P*(projective) == P(central).
bool central_vs_projective_check(const Semilattice& central, const Semilattice& projective);

/// -chi~(Delta(L^{>=j})) for j = 0 .. ambient dimension.
std::vector<std::int64_t> truncation_euler_values(const Semilattice& lattice);

/// Every coefficient c_j of the reduced characteristic polynomial equals
/// -chi~(Delta(L^{>=j})).
bool truncation_euler_check(const Semilattice& lattice);

/// Unreduced Betti numbers of the truncations: rows[j][i] for 0 <= j <= d
/// and 0 <= i <= d - j.
struct BetaTriangle {
  int d = -1;
  std::vector<std::vector<std::int64_t>> rows;

  std::int64_t at(int j, int i) const;
  friend bool operator==(const BetaTriangle&, const BetaTriangle&) = default;
};

BetaTriangle beta_triangle(const Semilattice& lattice);

/// Reduced Betti vectors of Delta(L^{>=j}) for j = 0 .. ambient dimension;
/// rows past the arrangement dimension are empty complexes.
std::vector<BettiVector> reduced_beta_triangle(const Semilattice& lattice);

/// sum over x with dim x = j of the reduced Betti numbers of Delta(0, x).
/// Atoms contribute through the empty interval at i = -1.
struct LocalBetaTable {
  int n = 0;
  /// entries[{j, i}] with zero entries omitted.
  std::map<std::pair<int, int>, std::int64_t> entries;

  std::int64_t at(int j, int i) const;
  friend bool operator==(const LocalBetaTable&, const LocalBetaTable&) = default;
};

LocalBetaTable local_beta_table(const Semilattice& lattice);

/// The table for puncturing the whole ambient A^n at the origin: a single
/// empty interval below the point of dimension n.
LocalBetaTable punctured_ambient_table(int n);

/// beta^C_i = sum_j beta^{>=j}_{i-2j}, i = 0 .. 2d.
std::vector<std::int64_t> complex_betti(const BetaTriangle& b);

/// Zeta function of a variety with N_s = sum_j a_j q^{js}: e_j = -a_j.
ZetaFactorization zeta_from_count_polynomial(const IntPolynomial& counts);

ZetaFactorization zeta_affine_complement(const IntPolynomial& p);

/// e_j = c_j - 1 for j <= d. Throws std::invalid_argument when a
/// coefficient above d differs from 1.
ZetaFactorization zeta_projective_union(const IntPolynomial& pstar, int d);

/// Exponent of (1 - q^{d-j} t) is (-1)^{j+1} beta^C_{2d-j} - [j odd].
ZetaFactorization zeta_from_cm(const std::vector<std::int64_t>& betti_complex, int d);

enum class ProfileKind { projective_union, affine_complement, central_punctured, projective_complement };

const char* to_string(ProfileKind k) noexcept;

/// Multiplicities m_{i,j} of the eigenvalue q^j on cohomology of degree i.
struct FrobeniusProfile {
  ProfileKind kind = ProfileKind::projective_union;
  /// Compactly supported cohomology (otherwise ordinary reduced cohomology).
  bool compact_support = true;
  std::map<std::pair<int, int>, std::int64_t> multiplicities;

  void add(int i, int j, std::int64_t m);
  std::int64_t at(int i, int j) const;
  /// Highest degree with a nonzero multiplicity; -1 if none.
  int max_degree() const;
  /// sum_i (-1)^i sum_j m_{i,j} q^{js}.
  BigInt trace(const BigInt& q, int s) const;
  /// prod_i P_i(t)^{(-1)^{i+1}} as an exponent vector.
  ZetaFactorization to_zeta() const;
  /// P_i(t) as text, "1" when trivial.
  std::string polynomial(int i) const;

  friend bool operator==(const FrobeniusProfile&, const FrobeniusProfile&) = default;
};

FrobeniusProfile frobenius_projective_union(const BetaTriangle& b);

/// Includes the top class in degree 2n.
FrobeniusProfile frobenius_affine_complement(const LocalBetaTable& t, int n);

/// Throws std::invalid_argument unless every element contains the origin.
FrobeniusProfile frobenius_central_punctured(const Semilattice& lattice);
FrobeniusProfile frobenius_central_punctured(const LocalBetaTable& t);

struct ProjectiveComplementProfiles {
  FrobeniusProfile compact;
  FrobeniusProfile ordinary;
};

/// Compactly supported and ordinary reduced cohomology of the complement in
/// P^{n-1}.
ProjectiveComplementProfiles frobenius_projective_complement(const Semilattice& lattice);

enum class PolynomialKind { affine, projective };

/// (-1)^{d-j} c_j <= 0 for 0 <= j <= d.
bool check_sign_alternation(const IntPolynomial& p, int d, PolynomialKind kind);

/// Every nonzero reduced entry of rows j <= d sits at i + j = d mod m.
bool check_mod_m_vanishing(const std::vector<BettiVector>& reduced_rows, int d, int m);

}  // namespace arr
