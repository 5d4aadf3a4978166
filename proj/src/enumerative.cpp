#include "arrangements/enumerative.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace arr {

namespace {

void require_ambient(const Semilattice& lattice, Ambient want, const char* what) {
  if (lattice.ambient != want)
    throw std::invalid_argument(std::string(what) + ": expected a " + to_string(want) + " lattice");
}

IntPolynomial geometric(int degree) {
  std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1, 1);
  return IntPolynomial(std::move(c));
}

}  // namespace

IntPolynomial char_poly(const Semilattice& lattice) {
  require_ambient(lattice, Ambient::affine, "char_poly");
  const auto mu = mobius(lattice);
  IntPolynomial p;
  for (int x = 0; x < lattice.size(); ++x) p += IntPolynomial::monomial(lattice.dims[x], BigInt(mu(0, x)));
  return p;
}

IntPolynomial reduced_char_poly(const Semilattice& lattice) {
  require_ambient(lattice, Ambient::projective, "reduced_char_poly");
  const auto mu = mobius(lattice);
  IntPolynomial p;
  for (int x = 0; x < lattice.size(); ++x) p += IntPolynomial{static_cast<long long>(mu(0, x))} * geometric(lattice.dims[x]);
  return p;
}

bool central_vs_projective_check(const Semilattice& central, const Semilattice& projective) {
  return IntPolynomial{-1, 1} * reduced_char_poly(projective) == char_poly(central);
}

std::vector<std::int64_t> truncation_euler_values(const Semilattice& lattice) {
  std::vector<std::int64_t> out;
  for (int j = 0; j <= lattice.ambient_dim(); ++j)
    out.push_back(-euler_char_reduced(OrderComplex(truncation(lattice, j).poset)));
  return out;
}

bool truncation_euler_check(const Semilattice& lattice) {
  const auto p = reduced_char_poly(lattice);
  const auto values = truncation_euler_values(lattice);
  for (std::size_t j = 0; j < values.size(); ++j)
    if (p.coefficient(static_cast<int>(j)) != values[j]) return false;
  return p.degree() <= static_cast<int>(values.size()) - 1;
}

std::int64_t BetaTriangle::at(int j, int i) const {
  if (j < 0 || j >= static_cast<int>(rows.size())) return 0;
  const auto& row = rows[j];
  return i >= 0 && i < static_cast<int>(row.size()) ? row[i] : 0;
}

BetaTriangle beta_triangle(const Semilattice& lattice) {
  require_ambient(lattice, Ambient::projective, "beta_triangle");
  BetaTriangle out;
  out.d = lattice.dimension();
  for (int j = 0; j <= out.d; ++j) {
    const auto betti = reduced_betti(truncation(lattice, j).poset);
    if (betti.top() > out.d - j)
      throw std::logic_error("beta_triangle: homology outside the expected range");
    std::vector<std::int64_t> row;
    for (int i = 0; i <= out.d - j; ++i) row.push_back(betti.unreduced(i));
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::vector<BettiVector> reduced_beta_triangle(const Semilattice& lattice) {
  std::vector<BettiVector> out;
  for (int j = 0; j <= lattice.ambient_dim(); ++j) out.push_back(reduced_betti(truncation(lattice, j).poset));
  return out;
}

std::int64_t LocalBetaTable::at(int j, int i) const {
  const auto it = entries.find({j, i});
  return it == entries.end() ? 0 : it->second;
}

LocalBetaTable local_beta_table(const Semilattice& lattice) {
  require_ambient(lattice, Ambient::affine, "local_beta_table");
  LocalBetaTable out;
  out.n = lattice.n;
  for (int x = 1; x < lattice.size(); ++x) {
    const auto betti = reduced_betti(open_interval_below(lattice, x).poset);
    for (int i = -1; i <= betti.top(); ++i)
      if (const auto b = betti.reduced(i); b != 0) out.entries[{lattice.dims[x], i}] += b;
  }
  return out;
}

LocalBetaTable punctured_ambient_table(int n) {
  LocalBetaTable out;
  out.n = n;
  out.entries[{n, -1}] = 1;
  return out;
}

std::vector<std::int64_t> complex_betti(const BetaTriangle& b) {
  if (b.d < 0) return {};
  std::vector<std::int64_t> out(static_cast<std::size_t>(2 * b.d) + 1, 0);
  for (int i = 0; i <= 2 * b.d; ++i)
    for (int j = 0; j <= b.d; ++j) out[i] += b.at(j, i - 2 * j);
  return out;
}

ZetaFactorization zeta_from_count_polynomial(const IntPolynomial& counts) {
  ZetaFactorization z;
  for (int j = 0; j <= counts.degree(); ++j) z.add(j, -counts.coefficient(j).convert_to<long long>());
  return z;
}

ZetaFactorization zeta_affine_complement(const IntPolynomial& p) {
  ZetaFactorization z;
  for (int j = 0; j <= p.degree(); ++j) z.add(j, -p.coefficient(j).convert_to<long long>());
  return z;
}

ZetaFactorization zeta_projective_union(const IntPolynomial& pstar, int d) {
  ZetaFactorization z;
  for (int j = 0; j <= d; ++j) z.add(j, pstar.coefficient(j).convert_to<long long>() - 1);
  for (int j = std::max(d + 1, 0); j <= pstar.degree(); ++j)
    if (pstar.coefficient(j) != 1)
      throw std::invalid_argument("zeta_projective_union: coefficient of t^" + std::to_string(j) +
                                  " must be 1 above the arrangement dimension");
  return z;
}

ZetaFactorization zeta_from_cm(const std::vector<std::int64_t>& betti_complex, int d) {
  ZetaFactorization z;
  for (int j = 0; j <= d; ++j) {
    const auto idx = static_cast<std::size_t>(2 * d - j);
    const std::int64_t b = idx < betti_complex.size() ? betti_complex[idx] : 0;
    const std::int64_t sign = j % 2 == 0 ? -1 : 1;
    z.add(d - j, sign * b - (j % 2));
  }
  return z;
}

const char* to_string(ProfileKind k) noexcept {
  switch (k) {
    case ProfileKind::projective_union: return "proj-union";
    case ProfileKind::affine_complement: return "aff-complement";
    case ProfileKind::central_punctured: return "central-punctured";
    case ProfileKind::projective_complement: return "proj-complement";
  }
  return "?";
}

void FrobeniusProfile::add(int i, int j, std::int64_t m) {
  if (m == 0) return;
  auto& slot = multiplicities[{i, j}];
  slot += m;
  if (slot < 0) throw std::logic_error("FrobeniusProfile: negative multiplicity");
  if (slot == 0) multiplicities.erase({i, j});
}

std::int64_t FrobeniusProfile::at(int i, int j) const {
  const auto it = multiplicities.find({i, j});
  return it == multiplicities.end() ? 0 : it->second;
}

int FrobeniusProfile::max_degree() const {
  int top = -1;
  for (const auto& [ij, m] : multiplicities) top = std::max(top, ij.first);
  return top;
}

BigInt FrobeniusProfile::trace(const BigInt& q, int s) const {
  BigInt total = 0;
  for (const auto& [ij, m] : multiplicities) {
    const BigInt term = BigInt(m) * boost::multiprecision::pow(q, static_cast<unsigned>(ij.second * s));
    total += ij.first % 2 == 0 ? term : BigInt(-term);
  }
  return total;
}

ZetaFactorization FrobeniusProfile::to_zeta() const {
  ZetaFactorization z;
  for (const auto& [ij, m] : multiplicities) z.add(ij.second, ij.first % 2 == 0 ? -m : m);
  return z;
}

std::string FrobeniusProfile::polynomial(int i) const {
  std::ostringstream out;
  bool any = false;
  for (const auto& [ij, m] : multiplicities) {
    if (ij.first != i) continue;
    out << '(' << tate_factor(ij.second) << ')';
    if (m != 1) out << '^' << m;
    any = true;
  }
  if (!any) return "1";
  const std::string s = out.str();
  // A lone unit-power factor prints without parentheses.
  if (std::count(s.begin(), s.end(), '(') == 1 && s.back() == ')') return s.substr(1, s.size() - 2);
  return s;
}

FrobeniusProfile frobenius_projective_union(const BetaTriangle& b) {
  FrobeniusProfile f;
  f.kind = ProfileKind::projective_union;
  for (int j = 0; j <= b.d; ++j)
    for (int i = 0; i <= b.d - j; ++i) f.add(i + 2 * j, j, b.at(j, i));
  return f;
}

FrobeniusProfile frobenius_affine_complement(const LocalBetaTable& t, int n) {
  FrobeniusProfile f;
  f.kind = ProfileKind::affine_complement;
  for (const auto& [ji, b] : t.entries) f.add(ji.second + 2 * ji.first + 2, ji.first, b);
  f.add(2 * n, n, 1);
  return f;
}

FrobeniusProfile frobenius_central_punctured(const LocalBetaTable& t) {
  FrobeniusProfile f;
  f.kind = ProfileKind::central_punctured;
  f.compact_support = false;
  for (const auto& [ji, b] : t.entries) f.add(ji.second + 2 * ji.first, ji.first, b);
  return f;
}

FrobeniusProfile frobenius_central_punctured(const Semilattice& lattice) {
  require_ambient(lattice, Ambient::affine, "frobenius_central_punctured");
  for (const auto& e : lattice.elements) {
    const auto cols = e.equations.cols();
    for (Eigen::Index r = 0; r < e.equations.rows(); ++r)
      if (e.equations(r, cols - 1) != 0)
        throw std::invalid_argument("frobenius_central_punctured: arrangement is not central");
  }
  return frobenius_central_punctured(local_beta_table(lattice));
}

ProjectiveComplementProfiles frobenius_projective_complement(const Semilattice& lattice) {
  require_ambient(lattice, Ambient::projective, "frobenius_projective_complement");
  const int N = lattice.ambient_dim();
  const auto rows = reduced_beta_triangle(lattice);
  ProjectiveComplementProfiles out;
  out.compact.kind = out.ordinary.kind = ProfileKind::projective_complement;
  out.ordinary.compact_support = false;
  for (int j = 0; j < N; ++j) {
    const auto& betti = rows[j];
    for (int k = -1; k <= betti.top(); ++k) {
      const auto b = betti.reduced(k);
      out.compact.add(2 * j + 1 + k, j, b);
      out.ordinary.add(2 * N - (2 * j + 1 + k), N - j, b);
    }
  }
  out.compact.add(2 * N, N, 1);
  return out;
}

bool check_sign_alternation(const IntPolynomial& p, int d, PolynomialKind) {
  for (int j = 0; j <= d; ++j) {
    const BigInt c = p.coefficient(j);
    const BigInt signed_c = (d - j) % 2 == 0 ? c : BigInt(-c);
    if (signed_c > 0) return false;
  }
  return true;
}

bool check_mod_m_vanishing(const std::vector<BettiVector>& reduced_rows, int d, int m) {
  if (m < 1) throw std::invalid_argument("check_mod_m_vanishing: m must be positive");
  for (int j = 0; j <= d && j < static_cast<int>(reduced_rows.size()); ++j) {
    const auto& row = reduced_rows[j];
    for (int i = -1; i <= row.top(); ++i) {
      if (row.reduced(i) == 0) continue;
      const int r = ((i + j - d) % m + m) % m;
      if (r != 0) return false;
    }
  }
  return true;
}

}  // namespace arr
