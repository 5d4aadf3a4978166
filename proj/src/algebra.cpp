#include "arrangements/algebra.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace arr {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Polynomials over F_p, low degree first, no trailing zeros.
using FpPoly = std::vector<std::uint32_t>;

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo a nonzero polynomial m.
FpPoly poly_rem(FpPoly a, const FpPoly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = mod_inverse(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = factor * m[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

FpPoly poly_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  }
  return poly_rem(std::move(prod), m, p);
}

FpPoly poly_powmod(FpPoly base, std::uint64_t e, const FpPoly& m, std::uint32_t p) {
  FpPoly result{1};
  base = poly_rem(std::move(base), m, p);
  while (e) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

FpPoly poly_gcd(FpPoly a, FpPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FpPoly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::uint32_t eval_at(const FpPoly& f, std::uint32_t x, std::uint32_t p) {
  std::uint64_t acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * x + *it) % p;
  return static_cast<std::uint32_t>(acc);
}

constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 31;
constexpr std::uint64_t kLogTableLimit = std::uint64_t{1} << 20;
constexpr std::uint64_t kAddTableLimit = 1024;

}  // namespace

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic) {
  FpPoly f(monic.begin(), monic.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  if (p <= 100000) {
    for (std::uint32_t x = 0; x < p; ++x)
      if (eval_at(f, x, p) == 0) return false;
  }
  // f is irreducible iff gcd(f, x^{p^i} - x) = 1 for 1 <= i <= k/2.
  FpPoly h{0, 1};
  for (std::size_t i = 1; i <= k / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    FpPoly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

FieldDesc::FieldDesc(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (modulus_.size() < 2 || modulus_.back() != 1)
    throw std::invalid_argument("field modulus must be monic of degree >= 1");
  for (auto c : modulus_)
    if (c >= p) throw std::invalid_argument("field modulus coefficients must be reduced mod p");
  k_ = static_cast<int>(modulus_.size()) - 1;
  if (k_ > 1 && !is_irreducible(p, modulus_))
    throw std::invalid_argument("field modulus is not irreducible");
  order_ = 1;
  place_.reserve(k_);
  for (int i = 0; i < k_; ++i) {
    place_.push_back(order_);
    order_ *= p;
    if (order_ >= kMaxFieldOrder) throw std::invalid_argument("field order exceeds 2^31");
  }
  if (k_ > 1 && order_ <= kAddTableLimit) {
    add_table_.resize(order_ * order_);
    for (Index a = 0; a < order_; ++a)
      for (Index b = 0; b < order_; ++b) {
        Index sum = 0;
        Index x = a, y = b;
        for (int i = 0; i < k_; ++i) {
          sum += static_cast<Index>(((x % p_ + y % p_) % p_) * place_[i]);
          x /= p_;
          y /= p_;
        }
        add_table_[a * order_ + b] = sum;
      }
  }
  if (k_ > 1 && order_ <= kLogTableLimit) {
    const std::uint64_t units = order_ - 1;
    for (Index g = 2; g < order_; ++g) {
      std::vector<Index> table(units);
      Index cur = 1;
      bool primitive = true;
      for (std::uint64_t i = 0; i < units; ++i) {
        if (i > 0 && cur == 1) {
          primitive = false;
          break;
        }
        table[i] = cur;
        cur = poly_mul(cur, g);
      }
      if (!primitive || cur != 1) continue;
      exp_ = std::move(table);
      log_.assign(order_, 0);
      for (std::uint64_t i = 0; i < units; ++i) log_[exp_[i]] = static_cast<std::uint32_t>(i);
      break;
    }
  }
}

std::vector<std::uint32_t> FieldDesc::digits(Index a) const {
  std::vector<std::uint32_t> out(k_);
  for (int i = 0; i < k_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

FieldDesc::Index FieldDesc::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() > static_cast<std::size_t>(k_))
    throw std::invalid_argument("coefficient vector longer than the extension degree");
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) idx += (digits[i] % p_) * place_[i];
  return static_cast<Index>(idx);
}

FieldDesc::Index FieldDesc::add(Index a, Index b) const {
  if (k_ == 1) return static_cast<Index>((static_cast<std::uint64_t>(a) + b) % p_);
  if (!add_table_.empty()) return add_table_[a * order_ + b];
  std::uint64_t sum = 0;
  for (int i = 0; i < k_; ++i) {
    sum += ((a % p_ + b % p_) % p_) * place_[i];
    a /= p_;
    b /= p_;
  }
  return static_cast<Index>(sum);
}

FieldDesc::Index FieldDesc::neg(Index a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  std::uint64_t out = 0;
  for (int i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * place_[i];
    a /= p_;
  }
  return static_cast<Index>(out);
}

FieldDesc::Index FieldDesc::sub(Index a, Index b) const { return add(a, neg(b)); }

FieldDesc::Index FieldDesc::scale(std::uint32_t c, Index a) const {
  c %= p_;
  if (k_ == 1) return static_cast<Index>(static_cast<std::uint64_t>(c) * a % p_);
  std::uint64_t out = 0;
  for (int i = 0; i < k_; ++i) {
    out += (static_cast<std::uint64_t>(c) * (a % p_) % p_) * place_[i];
    a /= p_;
  }
  return static_cast<Index>(out);
}

FieldDesc::Index FieldDesc::poly_mul(Index a, Index b) const {
  FpPoly pa = digits(a), pb = digits(b);
  trim(pa);
  trim(pb);
  FpPoly prod = poly_mulmod(pa, pb, modulus_, p_);
  prod.resize(k_, 0);
  return from_digits(prod);
}

FieldDesc::Index FieldDesc::mul(Index a, Index b) const {
  if (k_ == 1) return static_cast<Index>(static_cast<std::uint64_t>(a) * b % p_);
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (order_ - 1)];
  return poly_mul(a, b);
}

FieldDesc::Index FieldDesc::pow(Index a, std::uint64_t e) const {
  Index result = 1;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

FieldDesc::Index FieldDesc::inv(Index a) const {
  if (a == 0) throw std::domain_error("inverse of zero in a finite field");
  if (!exp_.empty()) return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
  return pow(a, order_ - 2);
}

FieldDesc::Index FieldDesc::from_integer(std::int64_t v) const {
  const std::int64_t p = p_;
  return static_cast<Index>(((v % p) + p) % p);
}

std::shared_ptr<const FieldDesc> make_extension_field(std::uint32_t p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw std::invalid_argument("extension degree must be at least 1");
  if (k == 1) return std::make_shared<const FieldDesc>(p, std::vector<std::uint32_t>{0, 1});
  // Odometer over (c_0, ..., c_{k-1}) with c_0 most significant.
  std::vector<std::uint32_t> f(k + 1, 0);
  f[k] = 1;
  while (true) {
    if (is_irreducible(p, f)) return std::make_shared<const FieldDesc>(p, f);
    int pos = k - 1;
    while (pos >= 0 && ++f[pos] == p) f[pos--] = 0;
    if (pos < 0) break;
  }
  throw std::logic_error("no irreducible polynomial found");
}

FFElement::FFElement(std::shared_ptr<const FieldDesc> field, std::span<const std::uint32_t> coefficients)
    : field_(std::move(field)) {
  if (!field_) throw std::invalid_argument("null field");
  std::vector<std::uint32_t> reduced(coefficients.begin(), coefficients.end());
  for (auto& c : reduced) c %= field_->characteristic();
  while (!reduced.empty() && reduced.back() == 0) reduced.pop_back();
  index_ = field_->from_digits(reduced);
}

FFElement FFElement::from_index(std::shared_ptr<const FieldDesc> field, FieldDesc::Index index) {
  if (!field) throw std::invalid_argument("null field");
  if (index >= field->order()) throw std::out_of_range("field element index out of range");
  return FFElement(std::move(field), index);
}

namespace {
void require_same_field(const FFElement& a, const FFElement& b) {
  if (a.field_ptr() != b.field_ptr() && !(a.field() == b.field()))
    throw std::invalid_argument("field elements belong to different fields");
}
}  // namespace

FFElement operator+(const FFElement& a, const FFElement& b) {
  require_same_field(a, b);
  return FFElement(a.field_, a.field_->add(a.index_, b.index_));
}

FFElement operator-(const FFElement& a, const FFElement& b) {
  require_same_field(a, b);
  return FFElement(a.field_, a.field_->sub(a.index_, b.index_));
}

FFElement operator*(const FFElement& a, const FFElement& b) {
  require_same_field(a, b);
  return FFElement(a.field_, a.field_->mul(a.index_, b.index_));
}

bool operator==(const FFElement& a, const FFElement& b) {
  return a.index_ == b.index_ && (a.field_ == b.field_ || *a.field_ == *b.field_);
}

FFElement FFElement::inverse() const { return FFElement(field_, field_->inv(index_)); }

FFElement FFElement::pow(std::uint64_t e) const { return FFElement(field_, field_->pow(index_, e)); }

FFElement ff_arith(const FFElement& a, const FFElement& b, FieldOp op) {
  switch (op) {
    case FieldOp::add:
      return a + b;
    case FieldOp::mul:
      return a * b;
    case FieldOp::inv:
      return a.inverse();
  }
  throw std::invalid_argument("unknown field operation");
}

// ---------------------------------------------------------------------------

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(int degree, BigInt coefficient) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<BigInt> c(degree + 1);
  c[degree] = std::move(coefficient);
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int j) const {
  if (j < 0 || j > degree()) return 0;
  return coeffs_[j];
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(out));
}

BigInt poly_eval_int(const IntPolynomial& p, const BigInt& v) {
  BigInt acc = 0;
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * v + *it;
  return acc;
}

std::string to_string(const IntPolynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto c = p.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    const bool negative = c[j] < 0;
    const BigInt mag = negative ? BigInt(-c[j]) : c[j];
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (j == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << "*";
    out << var;
    if (j > 1) out << "^" << j;
  }
  return out.str();
}

// ---------------------------------------------------------------------------

long long ZetaFactorization::exponent(int j) const {
  auto it = exponents.find(j);
  return it == exponents.end() ? 0 : it->second;
}

void ZetaFactorization::add(int j, long long e) {
  if (e == 0) return;
  auto& slot = exponents[j];
  slot += e;
  if (slot == 0) exponents.erase(j);
}

BigInt factorization_count(const ZetaFactorization& z, const BigInt& q, int s) {
  BigInt total = 0;
  for (const auto& [j, e] : z.exponents) total -= BigInt(e) * boost::multiprecision::pow(q, static_cast<unsigned>(j * s));
  return total;
}

RationalSeries series_exp_of_counts(std::span<const BigInt> counts, int order) {
  if (order < 1) throw std::invalid_argument("series order must be at least 1");
  if (counts.size() < static_cast<std::size_t>(order))
    throw std::invalid_argument("need one point count per series coefficient");
  // Z' = L' Z with L' = sum N_k t^{k-1}, hence n Z_n = sum_{k=1}^{n} N_k Z_{n-k}.
  RationalSeries z;
  z.coefficients.assign(order + 1, Rational(0));
  z.coefficients[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += Rational(counts[k - 1]) * z.coefficients[n - k];
    z.coefficients[n] = acc / n;
  }
  return z;
}

RationalSeries series_expand_factorization(const ZetaFactorization& z, const BigInt& q, int order) {
  if (order < 1) throw std::invalid_argument("series order must be at least 1");
  std::vector<Rational> result(order + 1, Rational(0));
  result[0] = 1;
  for (const auto& [j, e] : z.exponents) {
    const Rational a = Rational(boost::multiprecision::pow(q, static_cast<unsigned>(j)));
    // (1 - a t)^e = sum_k binom(e, k) (-a)^k t^k
    std::vector<Rational> factor(order + 1, Rational(0));
    factor[0] = 1;
    for (int k = 1; k <= order; ++k) factor[k] = factor[k - 1] * Rational(e - k + 1) / k * (-a);
    std::vector<Rational> next(order + 1, Rational(0));
    for (int i = 0; i <= order; ++i) {
      if (result[i] == 0) continue;
      for (int k = 0; i + k <= order; ++k) next[i + k] += result[i] * factor[k];
    }
    result = std::move(next);
  }
  return RationalSeries{std::move(result)};
}

std::string tate_factor(int j) {
  if (j == 0) return "1-t";
  if (j == 1) return "1-q t";
  return "1-q^" + std::to_string(j) + " t";
}

std::string to_string(const ZetaFactorization& z) {
  std::string num, den;
  int den_count = 0;
  for (const auto& [j, e] : z.exponents) {
    std::string f = "(" + tate_factor(j) + ")";
    const long long mag = e < 0 ? -e : e;
    if (mag > 1) f += "^" + std::to_string(mag);
    if (e > 0) {
      num += f;
    } else {
      den += f;
      ++den_count;
    }
  }
  if (den_count == 0) return num.empty() ? "1" : num;
  if (num.empty()) num = "1";
  if (den_count > 1) den = "(" + den + ")";
  return num + " / " + den;
}

}  // namespace arr
