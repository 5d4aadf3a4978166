#include "arrangements/linalg.hpp"

#include <mutex>
#include <stdexcept>

namespace arr {

namespace {

BigInt abs_gcd(const BigInt& a, const BigInt& b) {
  BigInt g = boost::multiprecision::gcd(a, b);
  return g < 0 ? BigInt(-g) : g;
}

// Scale a rational row to coprime integers, keeping its direction.
std::vector<BigInt> primitive_row(const RationalMatrix& m, Eigen::Index r) {
  BigInt den = 1;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    const BigInt d = boost::multiprecision::denominator(m(r, j));
    den = den / abs_gcd(den, d) * d;
  }
  std::vector<BigInt> row(m.cols());
  BigInt content = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    row[j] = boost::multiprecision::numerator(m(r, j)) * (den / boost::multiprecision::denominator(m(r, j)));
    content = abs_gcd(content, row[j]);
  }
  if (content > 1)
    for (auto& v : row) v /= content;
  return row;
}

void divide_content(std::vector<BigInt>& row) {
  BigInt content = 0;
  for (const auto& v : row) {
    if (v != 0) content = abs_gcd(content, v);
    if (content == 1) return;
  }
  if (content > 1)
    for (auto& v : row) v /= content;
}

}  // namespace

Rational RationalField::inv(const Rational& a) const {
  if (a == 0) throw std::domain_error("division by zero in Q");
  return Rational(1) / a;
}

FiniteField::FiniteField(std::shared_ptr<const FieldDesc> desc) : desc_(std::move(desc)) {
  if (!desc_) throw std::invalid_argument("FiniteField: null field description");
}

FiniteField FiniteField::prime(std::uint32_t p) { return FiniteField(make_extension_field(p, 1)); }

FiniteField::Scalar FiniteField::from_integer(const BigInt& v) const {
  const BigInt p = desc_->characteristic();
  BigInt r = v % p;
  if (r < 0) r += p;
  return desc_->from_integer(r.convert_to<std::int64_t>());
}

FiniteField::Scalar FiniteField::from_rational(const Rational& a) const {
  if (boost::multiprecision::denominator(a) != 1)
    throw std::invalid_argument("FiniteField: non-integral rational");
  return from_integer(boost::multiprecision::numerator(a));
}

const FiniteField& cached_prime_field(std::uint32_t p) {
  static std::mutex mutex;
  static std::map<std::uint32_t, std::unique_ptr<FiniteField>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[p];
  if (!slot) slot = std::make_unique<FiniteField>(FiniteField::prime(p));
  return *slot;
}

RrefResult<RationalField> rref(RationalMatrix m, const RationalField&) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<std::vector<BigInt>> a(rows);
  for (Eigen::Index i = 0; i < rows; ++i) a[i] = primitive_row(m, i);

  RrefResult<RationalField> out;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[r]);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const BigInt pv = a[r][c], f = a[i][c];
      for (Eigen::Index j = 0; j < cols; ++j) a[i][j] = pv * a[i][j] - f * a[r][j];
      divide_content(a[i]);
    }
    out.pivots.push_back(c);
    ++r;
  }

  out.matrix = RationalMatrix::Zero(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (i < r) {
      const Rational pv(a[i][out.pivots[i]]);
      for (Eigen::Index j = 0; j < cols; ++j) out.matrix(i, j) = Rational(a[i][j]) / pv;
    }
  }
  return out;
}

Eigen::Index rational_rank(const Eigen::SparseMatrix<int>& m) {
  using SparseVec = std::map<Eigen::Index, BigInt>;
  std::map<Eigen::Index, SparseVec> echelon;  // keyed by leading index
  for (Eigen::Index c = 0; c < m.outerSize(); ++c) {
    SparseVec v;
    for (Eigen::SparseMatrix<int>::InnerIterator it(m, c); it; ++it)
      if (it.value() != 0) v[it.index()] = it.value();
    while (!v.empty()) {
      auto hit = echelon.find(v.begin()->first);
      if (hit == echelon.end()) break;
      const SparseVec& piv = hit->second;
      const BigInt pl = piv.begin()->second, vl = v.begin()->second;
      SparseVec next;
      for (const auto& [k, x] : v) next[k] = pl * x;
      for (const auto& [k, x] : piv) next[k] -= vl * x;
      BigInt content = 0;
      for (auto it = next.begin(); it != next.end();) {
        if (it->second == 0) {
          it = next.erase(it);
        } else {
          content = abs_gcd(content, it->second);
          ++it;
        }
      }
      if (content > 1)
        for (auto& [k, x] : next) x /= content;
      v = std::move(next);
    }
    if (!v.empty()) echelon.emplace(v.begin()->first, std::move(v));
  }
  return static_cast<Eigen::Index>(echelon.size());
}

}  // namespace arr
