// Exact linear algebra over Q and over finite fields.
//
// Matrices are plain Eigen dense matrices over the field's scalar type; the
// field itself is passed alongside as a small policy object so that finite
// fields with a runtime modulus work with the same templates as Q.
#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "arrangements/algebra.hpp"

namespace arr {

/// The field of rationals.
struct RationalField {
  using Scalar = Rational;

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  bool is_zero(const Scalar& a) const { return a == 0; }
  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar neg(const Scalar& a) const { return -a; }
  Scalar inv(const Scalar& a) const;
  Scalar from_integer(const BigInt& v) const { return Rational(v); }
  /// Canonical rational image of an element (identity here).
  Rational to_rational(const Scalar& a) const { return a; }
  Scalar from_rational(const Rational& a) const { return a; }

  bool operator==(const RationalField&) const noexcept { return true; }
};

/// A finite field F_{p^k}; scalars are element indices of the FieldDesc.
class FiniteField {
 public:
  using Scalar = FieldDesc::Index;

  explicit FiniteField(std::shared_ptr<const FieldDesc> desc);
  static FiniteField prime(std::uint32_t p);

  const FieldDesc& desc() const noexcept { return *desc_; }
  const std::shared_ptr<const FieldDesc>& desc_ptr() const noexcept { return desc_; }

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  bool is_zero(Scalar a) const { return a == 0; }
  Scalar add(Scalar a, Scalar b) const { return desc_->add(a, b); }
  Scalar sub(Scalar a, Scalar b) const { return desc_->sub(a, b); }
  Scalar mul(Scalar a, Scalar b) const { return desc_->mul(a, b); }
  Scalar neg(Scalar a) const { return desc_->neg(a); }
  Scalar inv(Scalar a) const { return desc_->inv(a); }
  Scalar from_integer(const BigInt& v) const;
  /// Element index as an integer rational (used to store canonical forms).
  Rational to_rational(Scalar a) const { return Rational(a); }
  /// Integral rationals through Z -> F_p; inverts to_rational on prime fields.
  Scalar from_rational(const Rational& a) const;

  bool operator==(const FiniteField& other) const noexcept { return *desc_ == *other.desc_; }

 private:
  std::shared_ptr<const FieldDesc> desc_;
};

template <class Field>
using ExactMatrix = Eigen::Matrix<typename Field::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Field>
using ExactVector = Eigen::Matrix<typename Field::Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = ExactMatrix<RationalField>;

template <class Field>
struct RrefResult {
  ExactMatrix<Field> matrix;
  std::vector<Eigen::Index> pivots;

  Eigen::Index rank() const noexcept { return static_cast<Eigen::Index>(pivots.size()); }
};

/// Reduced row echelon form over a finite field; the pivot is the first
/// nonzero entry in column order.
template <class Field>
RrefResult<Field> rref(ExactMatrix<Field> m, const Field& f) {
  RrefResult<Field> out;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = r; i < m.rows(); ++i)
      if (!f.is_zero(m(i, c))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    const auto scale = f.inv(m(r, c));
    for (Eigen::Index j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), scale);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      const auto factor = m(i, c);
      for (Eigen::Index j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    out.pivots.push_back(c);
    ++r;
  }
  // Zero rows sink to the bottom already; drop nothing so the shape is kept.
  out.matrix = std::move(m);
  return out;
}

/// Over Q: fraction-free elimination on primitive integer rows followed by
/// normalization of each pivot to 1.
RrefResult<RationalField> rref(RationalMatrix m, const RationalField& f);

template <class Field>
Eigen::Index rank(const ExactMatrix<Field>& m, const Field& f) {
  return rref(m, f).rank();
}

/// Rows [0, rank) of the reduced form: the canonical equation matrix.
template <class Field>
ExactMatrix<Field> row_basis(const ExactMatrix<Field>& m, const Field& f) {
  auto r = rref(m, f);
  return r.matrix.topRows(r.rank());
}

template <class Field>
struct SolutionSet {
  bool empty = true;
  ExactVector<Field> particular;
  /// Columns span the homogeneous solution space.
  ExactMatrix<Field> nullspace;

  Eigen::Index dimension() const noexcept { return empty ? -1 : nullspace.cols(); }
};

/// Solutions of A x = b in canonical form: free variables are zero in the
/// particular solution and each nullspace vector has a single 1 among the
/// free coordinates.
template <class Field>
SolutionSet<Field> solve_affine(const ExactMatrix<Field>& a, const ExactVector<Field>& b, const Field& f) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_affine: row count mismatch");
  const Eigen::Index n = a.cols();
  ExactMatrix<Field> aug(a.rows(), n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  auto red = rref(std::move(aug), f);
  SolutionSet<Field> out;
  if (!red.pivots.empty() && red.pivots.back() == n) return out;
  out.empty = false;
  out.particular = ExactVector<Field>::Constant(n, f.zero());
  std::vector<bool> is_pivot(n, false);
  for (std::size_t k = 0; k < red.pivots.size(); ++k) {
    is_pivot[red.pivots[k]] = true;
    out.particular(red.pivots[k]) = red.matrix(k, n);
  }
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  out.nullspace = ExactMatrix<Field>::Constant(n, static_cast<Eigen::Index>(free_cols.size()), f.zero());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    out.nullspace(free_cols[j], j) = f.one();
    for (std::size_t k = 0; k < red.pivots.size(); ++k)
      out.nullspace(red.pivots[k], j) = f.neg(red.matrix(k, free_cols[j]));
  }
  return out;
}

/// Row space grown one vector at a time; cheap to copy for backtracking.
template <class Field>
class IncrementalEchelon {
 public:
  IncrementalEchelon(Eigen::Index cols, Field field) : cols_(cols), field_(std::move(field)) {}

  Eigen::Index rank() const noexcept { return static_cast<Eigen::Index>(rows_.size()); }

  /// Returns true iff the row was independent of the rows inserted so far.
  bool insert(ExactVector<Field> row) {
    for (const auto& [pc, prow] : rows_) {
      if (field_.is_zero(row(pc))) continue;
      const auto factor = row(pc);
      for (Eigen::Index j = pc; j < cols_; ++j) row(j) = field_.sub(row(j), field_.mul(factor, prow(j)));
    }
    for (Eigen::Index c = 0; c < cols_; ++c) {
      if (field_.is_zero(row(c))) continue;
      const auto scale = field_.inv(row(c));
      for (Eigen::Index j = c; j < cols_; ++j) row(j) = field_.mul(row(j), scale);
      rows_.emplace(c, std::move(row));
      return true;
    }
    return false;
  }

 private:
  Eigen::Index cols_;
  Field field_;
  std::map<Eigen::Index, ExactVector<Field>> rows_;
};

/// Shared prime field F_p; constructed once per prime and kept alive.
const FiniteField& cached_prime_field(std::uint32_t p);

/// Rank over Q of an integer matrix given in sparse form (boundary maps).
Eigen::Index rational_rank(const Eigen::SparseMatrix<int>& m);

/// Convert a matrix of canonical rationals into field scalars and back.
template <class Field>
ExactMatrix<Field> to_field(const RationalMatrix& m, const Field& f) {
  ExactMatrix<Field> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = f.from_rational(m(i, j));
  return out;
}

template <class Field>
RationalMatrix to_rational(const ExactMatrix<Field>& m, const Field& f) {
  RationalMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = f.to_rational(m(i, j));
  return out;
}

}  // namespace arr
