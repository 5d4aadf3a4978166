// Exact arithmetic foundation: big integers and rationals, dense integer
// polynomials, truncated rational power series and finite fields F_{p^k}.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>

namespace arr {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

bool is_prime(std::uint64_t n) noexcept;

// ---------------------------------------------------------------------------
// Finite fields
// ---------------------------------------------------------------------------

/// Description of F_{p^k} = F_p[x]/(f) for a monic irreducible f of degree k.
///
/// Elements are addressed by an index in [0, p^k): the coefficient vector
/// (c_0, ..., c_{k-1}) of the residue polynomial read as base-p digits with
/// c_0 least significant. The index-level operations below are what the
/// linear algebra and the point-counting kernels use; FFElement wraps them
/// in a value type.
class FieldDesc {
 public:
  using Index = std::uint32_t;

  /// Throws std::invalid_argument if p is not prime or the modulus is not a
  /// monic irreducible polynomial over F_p. For k = 1 the modulus is x.
  FieldDesc(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const noexcept { return p_; }
  int degree() const noexcept { return k_; }
  std::uint64_t order() const noexcept { return order_; }
  /// Monic modulus, low degree first, length k + 1.
  std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }

  Index zero() const noexcept { return 0; }
  Index one() const noexcept { return 1; }
  Index add(Index a, Index b) const;
  Index sub(Index a, Index b) const;
  Index neg(Index a) const;
  Index mul(Index a, Index b) const;
  /// Throws std::domain_error on zero.
  Index inv(Index a) const;
  Index pow(Index a, std::uint64_t e) const;
  /// Multiplication by an element c of the prime subfield.
  Index scale(std::uint32_t c, Index a) const;
  /// Image of an integer under Z -> F_p -> F_{p^k}.
  Index from_integer(std::int64_t v) const;

  std::vector<std::uint32_t> digits(Index a) const;
  Index from_digits(std::span<const std::uint32_t> digits) const;

  bool operator==(const FieldDesc& other) const noexcept {
    return p_ == other.p_ && modulus_ == other.modulus_;
  }

 private:
  Index poly_mul(Index a, Index b) const;

  std::uint32_t p_;
  int k_;
  std::uint64_t order_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> place_;  // p^i
  // Discrete log tables for k > 1 and moderate order; empty otherwise.
  std::vector<Index> exp_;
  std::vector<std::uint32_t> log_;
  // Full addition table for small extension fields.
  std::vector<Index> add_table_;
};

/// F_{p^k} with the lexicographically smallest monic irreducible modulus,
/// coefficients compared from the constant term upwards.
std::shared_ptr<const FieldDesc> make_extension_field(std::uint32_t p, int k);

/// True iff the monic polynomial (low degree first) is irreducible over F_p.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic);

class FFElement {
 public:
  FFElement(std::shared_ptr<const FieldDesc> field, std::span<const std::uint32_t> coefficients);
  static FFElement from_index(std::shared_ptr<const FieldDesc> field, FieldDesc::Index index);

  const FieldDesc& field() const noexcept { return *field_; }
  const std::shared_ptr<const FieldDesc>& field_ptr() const noexcept { return field_; }
  FieldDesc::Index index() const noexcept { return index_; }
  std::vector<std::uint32_t> coefficients() const { return field_->digits(index_); }
  bool is_zero() const noexcept { return index_ == 0; }

  FFElement inverse() const;
  FFElement pow(std::uint64_t e) const;

  friend FFElement operator+(const FFElement& a, const FFElement& b);
  friend FFElement operator-(const FFElement& a, const FFElement& b);
  friend FFElement operator*(const FFElement& a, const FFElement& b);
  friend bool operator==(const FFElement& a, const FFElement& b);

 private:
  FFElement(std::shared_ptr<const FieldDesc> field, FieldDesc::Index index)
      : field_(std::move(field)), index_(index) {}

  std::shared_ptr<const FieldDesc> field_;
  FieldDesc::Index index_ = 0;
};

enum class FieldOp { add, mul, inv };

/// Field operation dispatch; `inv` ignores b. Mixed fields throw
/// std::invalid_argument, inverting zero throws std::domain_error.
FFElement ff_arith(const FFElement& a, const FFElement& b, FieldOp op);

// ---------------------------------------------------------------------------
// Polynomials and series
// ---------------------------------------------------------------------------

/// Dense polynomial with big-integer coefficients, index = degree.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  static IntPolynomial monomial(int degree, BigInt coefficient = 1);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Zero outside the stored range.
  BigInt coefficient(int j) const;
  std::span<const BigInt> coefficients() const noexcept { return coeffs_; }

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

BigInt poly_eval_int(const IntPolynomial& p, const BigInt& v);

/// Ascending degree with explicit signs, e.g. "-26*t^2 + 45*t^3 - 20*t^4 + t^6".
std::string to_string(const IntPolynomial& p, const std::string& var = "t");

/// Power series truncated after t^order.
struct RationalSeries {
  std::vector<Rational> coefficients;

  int order() const noexcept { return static_cast<int>(coefficients.size()) - 1; }
  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;
};

/// Exponent vector of prod_j (1 - q^j t)^{e_j}. Zero exponents are not stored.
struct ZetaFactorization {
  std::map<int, long long> exponents;

  long long exponent(int j) const;
  void add(int j, long long e);
  friend bool operator==(const ZetaFactorization&, const ZetaFactorization&) = default;
};

/// Point counts N_s = -sum_j e_j q^{js} read off the logarithmic derivative.
BigInt factorization_count(const ZetaFactorization& z, const BigInt& q, int s);

/// exp(sum_{s=1}^{m} N_s t^s / s) truncated at order m. counts[s-1] = N_s.
RationalSeries series_exp_of_counts(std::span<const BigInt> counts, int order);

/// prod_j (1 - q^j t)^{e_j} expanded to order m.
RationalSeries series_expand_factorization(const ZetaFactorization& z, const BigInt& q, int order);

/// "(1-q^2 t)^25 / ((1-t)(1-q t)(1-q^3 t)^20)"; "1" for the empty product.
std::string to_string(const ZetaFactorization& z);

/// "1-q^j t" style factor text.
std::string tate_factor(int j);

}  // namespace arr

namespace Eigen {

template <>
struct NumTraits<arr::Rational> : GenericNumTraits<arr::Rational> {
  using Real = arr::Rational;
  using NonInteger = arr::Rational;
  using Nested = arr::Rational;
  using Literal = arr::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 150
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<arr::BigInt> : GenericNumTraits<arr::BigInt> {
  using Real = arr::BigInt;
  using NonInteger = arr::Rational;
  using Nested = arr::BigInt;
  using Literal = arr::BigInt;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 50,
    MulCost = 50
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
