#include "arrangements/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace arr {

namespace {

template <class Fn>
decltype(auto) with_field(Ring ring, Fn&& fn) {
  if (ring.is_integers()) return fn(RationalField{});
  return fn(cached_prime_field(ring.prime));
}

std::int64_t reduce(std::int64_t v, std::uint32_t p) {
  const auto m = static_cast<std::int64_t>(p);
  return ((v % m) + m) % m;
}

// Canonical form from an equation matrix already laid out in the column
// convention of the ambient type.
template <class Field>
CanonicalSubspace canonical_from(ExactMatrix<Field> m, const Field& f, Ring ring, Ambient ambient, int n) {
  CanonicalSubspace out;
  out.ring = ring;
  out.ambient = ambient;
  out.n = n;
  auto red = rref(std::move(m), f);
  const auto r = red.rank();
  if (ambient == Ambient::affine) {
    if (r > 0 && red.pivots.back() == n) {
      out.empty = true;
      out.dim = -1;
      out.equations = RationalMatrix(0, n + 1);
      return out;
    }
    out.dim = n - static_cast<int>(r);
  } else {
    if (r == n) {
      out.empty = true;
      out.dim = -1;
      out.equations = RationalMatrix(0, n);
      return out;
    }
    out.dim = n - 1 - static_cast<int>(r);
  }
  out.equations = to_rational<Field>(red.matrix.topRows(r), f);
  return out;
}

Eigen::Index columns(Ambient ambient, int n) { return ambient == Ambient::affine ? n + 1 : n; }

void require_compatible(const CanonicalSubspace& a, const CanonicalSubspace& b) {
  if (a.ambient != b.ambient || !(a.ring == b.ring) || a.n != b.n)
    throw std::invalid_argument("intersect: subspaces live in different ambient spaces or rings");
}

std::string ring_name(Ring r) { return r.is_integers() ? "Z" : "F_" + std::to_string(r.prime); }

}  // namespace

Ring Ring::field(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("ring: " + std::to_string(p) + " is not prime");
  return Ring{p};
}

const char* to_string(Ambient a) noexcept { return a == Ambient::affine ? "affine" : "projective"; }

bool operator==(const CanonicalSubspace& a, const CanonicalSubspace& b) {
  if (a.ambient != b.ambient || !(a.ring == b.ring) || a.n != b.n || a.empty != b.empty) return false;
  if (a.empty) return true;
  return a.equations.rows() == b.equations.rows() && a.equations.cols() == b.equations.cols() &&
         a.equations == b.equations;
}

bool canonical_less(const CanonicalSubspace& a, const CanonicalSubspace& b) {
  if (a.equations.rows() != b.equations.rows()) return a.equations.rows() < b.equations.rows();
  for (Eigen::Index i = 0; i < a.equations.rows(); ++i)
    for (Eigen::Index j = 0; j < a.equations.cols(); ++j)
      if (a.equations(i, j) != b.equations(i, j)) return a.equations(i, j) < b.equations(i, j);
  return false;
}

CanonicalSubspace whole_space(Ring ring, Ambient ambient, int n) {
  CanonicalSubspace out;
  out.ring = ring;
  out.ambient = ambient;
  out.n = n;
  out.equations = RationalMatrix(0, columns(ambient, n));
  out.dim = ambient == Ambient::affine ? n : n - 1;
  return out;
}

CanonicalSubspace canonicalize(const FormGroup& forms, Ring ring, Ambient ambient, int n) {
  return with_field(ring, [&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    ExactMatrix<F> m(static_cast<Eigen::Index>(forms.size()), columns(ambient, n));
    for (std::size_t i = 0; i < forms.size(); ++i) {
      const auto& c = forms[i].coeffs;
      if (c.size() != static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("canonicalize: form has " + std::to_string(c.size()) + " entries, expected " +
                                    std::to_string(n + 1));
      for (int j = 0; j < n; ++j) m(i, j) = f.from_integer(BigInt(c[j + 1]));
      if (ambient == Ambient::affine) m(i, n) = f.from_integer(BigInt(c[0]));
    }
    return canonical_from<F>(std::move(m), f, ring, ambient, n);
  });
}

CanonicalSubspace intersect(std::span<const CanonicalSubspace> xs) {
  if (xs.empty()) throw std::invalid_argument("intersect: no subspaces given");
  const auto& first = xs.front();
  Eigen::Index rows = 0;
  for (const auto& x : xs) {
    require_compatible(first, x);
    if (x.empty) return x;
    rows += x.equations.rows();
  }
  const Eigen::Index cols = columns(first.ambient, first.n);
  RationalMatrix stacked(rows, cols);
  Eigen::Index at = 0;
  for (const auto& x : xs) {
    stacked.middleRows(at, x.equations.rows()) = x.equations;
    at += x.equations.rows();
  }
  return with_field(first.ring, [&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    return canonical_from<F>(to_field(stacked, f), f, first.ring, first.ambient, first.n);
  });
}

CanonicalSubspace intersect(const CanonicalSubspace& a, const CanonicalSubspace& b) {
  const CanonicalSubspace pair[] = {a, b};
  return intersect(std::span<const CanonicalSubspace>(pair));
}

bool contained_in(const CanonicalSubspace& small, const CanonicalSubspace& big) {
  if (small.empty) return true;
  if (big.empty) return false;
  if (small.dim > big.dim) return false;
  return intersect(small, big) == small;
}

// ---------------------------------------------------------------------------
// Arrangement
// ---------------------------------------------------------------------------

void Arrangement::check_shape() const {
  if (n_ < 1) throw std::invalid_argument("arrangement: n must be at least 1");
  for (std::size_t i = 0; i < subspaces_.size(); ++i) {
    if (subspaces_[i].empty())
      throw std::invalid_argument("subspace " + std::to_string(i) + ": no defining forms");
    for (std::size_t k = 0; k < subspaces_[i].size(); ++k) {
      const auto& form = subspaces_[i][k];
      if (form.coeffs.size() != static_cast<std::size_t>(n_) + 1)
        throw std::invalid_argument("subspace " + std::to_string(i) + ", form " + std::to_string(k) + ": expected " +
                                    std::to_string(n_ + 1) + " coefficients, got " +
                                    std::to_string(form.coeffs.size()));
      if (ambient_ == Ambient::projective && form.constant() != 0)
        throw std::invalid_argument("subspace " + std::to_string(i) + ", form " + std::to_string(k) +
                                    ": projective forms must have c0 = 0");
    }
  }
}

Arrangement Arrangement::unchecked(Ring ring, Ambient ambient, int n, std::vector<FormGroup> subspaces,
                                   std::string name) {
  Arrangement a;
  a.ring_ = ring;
  a.ambient_ = ambient;
  a.n_ = n;
  a.subspaces_ = std::move(subspaces);
  a.name_ = std::move(name);
  if (!ring.is_integers()) {
    if (!is_prime(ring.prime)) throw std::invalid_argument("ring: " + std::to_string(ring.prime) + " is not prime");
    for (auto& group : a.subspaces_)
      for (auto& form : group)
        for (auto& c : form.coeffs) c = reduce(c, ring.prime);
  }
  a.check_shape();
  return a;
}

Arrangement::Arrangement(Ring ring, Ambient ambient, int n, std::vector<FormGroup> subspaces, std::string name) {
  *this = unchecked(ring, ambient, n, std::move(subspaces), std::move(name));
  std::vector<CanonicalSubspace> canon;
  canon.reserve(subspaces_.size());
  for (std::size_t i = 0; i < subspaces_.size(); ++i) {
    auto c = canonical(i);
    const std::string where = "subspace " + std::to_string(i);
    if (c.empty)
      throw std::invalid_argument(where + ": no solutions over " + ring_name(ring_) +
                                  (ambient_ == Ambient::projective ? " other than 0" : ""));
    if (c.is_whole_space()) throw std::invalid_argument(where + ": forms vanish identically (whole space)");
    for (std::size_t j = 0; j < canon.size(); ++j)
      if (canon[j] == c)
        throw std::invalid_argument(where + ": duplicates subspace " + std::to_string(j));
    canon.push_back(std::move(c));
  }
}

CanonicalSubspace Arrangement::canonical(std::size_t i) const {
  return canonicalize(subspaces_.at(i), ring_, ambient_, n_);
}

int Arrangement::dimension() const {
  int d = -1;
  for (std::size_t i = 0; i < subspaces_.size(); ++i) d = std::max(d, canonical(i).dim);
  return d;
}

bool Arrangement::is_central() const {
  if (ambient_ != Ambient::affine) return false;
  for (const auto& group : subspaces_)
    for (const auto& form : group)
      if (form.constant() != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Reduction and good primes
// ---------------------------------------------------------------------------

ModPReduction reduce_mod_p(const Arrangement& a, std::uint32_t p) {
  if (!a.ring().is_integers()) throw std::invalid_argument("reduce_mod_p: arrangement is not over Z");
  const Ring ring = Ring::field(p);
  ModPReduction out{Arrangement::unchecked(ring, a.ambient(), a.n(), a.subspaces(), a.name()), {}, {}, {}};
  std::vector<CanonicalSubspace> canon;
  for (std::size_t i = 0; i < out.arrangement.size(); ++i) {
    canon.push_back(out.arrangement.canonical(i));
    if (canon.back().empty) out.inconsistent.push_back(i);
    else if (canon.back().is_whole_space()) out.whole_space.push_back(i);
  }
  for (std::size_t i = 0; i < canon.size(); ++i)
    for (std::size_t j = i + 1; j < canon.size(); ++j)
      if (!canon[i].empty && canon[i] == canon[j]) out.duplicates.emplace_back(i, j);
  return out;
}

namespace {

template <class Field>
ExactVector<Field> form_vector(const LinearForm& form, const Field& f, bool linear_part) {
  const auto skip = linear_part ? 1u : 0u;
  ExactVector<Field> v(static_cast<Eigen::Index>(form.coeffs.size() - skip));
  for (std::size_t j = skip; j < form.coeffs.size(); ++j) v(j - skip) = f.from_integer(BigInt(form.coeffs[j]));
  return v;
}

struct RankState {
  IncrementalEchelon<RationalField> q_full, q_lin;
  IncrementalEchelon<FiniteField> p_full, p_lin;
};

}  // namespace

GoodPrimeResult good_prime(const Arrangement& a, std::uint32_t p, std::uint64_t cap) {
  if (!a.ring().is_integers()) throw std::invalid_argument("good_prime: arrangement is not over Z");
  if (!is_prime(p)) throw std::invalid_argument("good_prime: " + std::to_string(p) + " is not prime");
  const FiniteField& fp = cached_prime_field(p);
  const RationalField fq;
  const bool affine = a.ambient() == Ambient::affine;
  const Eigen::Index n = a.n();

  RankState total{IncrementalEchelon<RationalField>(n + 1, fq), IncrementalEchelon<RationalField>(n, fq),
                  IncrementalEchelon<FiniteField>(n + 1, fp), IncrementalEchelon<FiniteField>(n, fp)};
  for (const auto& group : a.subspaces())
    for (const auto& form : group) {
      total.q_full.insert(form_vector(form, fq, false));
      if (affine) total.q_lin.insert(form_vector(form, fq, true));
    }

  GoodPrimeResult out;
  std::vector<std::size_t> subset;
  std::function<bool(std::size_t, const RankState&)> dfs = [&](std::size_t start, const RankState& state) {
    for (std::size_t i = start; i < a.size(); ++i) {
      if (++out.subsets_visited > cap)
        throw std::length_error("good_prime: more than " + std::to_string(cap) + " subsets; raise the cap");
      RankState next = state;
      for (const auto& form : a.subspaces()[i]) {
        next.q_full.insert(form_vector(form, fq, false));
        next.p_full.insert(form_vector(form, fp, false));
        if (affine) {
          next.q_lin.insert(form_vector(form, fq, true));
          next.p_lin.insert(form_vector(form, fp, true));
        }
      }
      subset.push_back(i);
      const bool full_ok = next.q_full.rank() == next.p_full.rank();
      if (!full_ok || next.q_lin.rank() != next.p_lin.rank()) {
        out.good = false;
        out.witness = subset;
        out.rank_q = static_cast<int>(full_ok ? next.q_lin.rank() : next.q_full.rank());
        out.rank_p = static_cast<int>(full_ok ? next.p_lin.rank() : next.p_full.rank());
        return true;
      }
      // Once the F_p ranks reach the total rank over Q, every superset agrees
      // too, since rank mod p never exceeds rank over Q.
      const bool saturated = next.p_full.rank() == total.q_full.rank() && next.p_lin.rank() == total.q_lin.rank();
      if (!saturated && dfs(i + 1, next)) return true;
      subset.pop_back();
    }
    return false;
  };
  RankState root{IncrementalEchelon<RationalField>(n + 1, fq), IncrementalEchelon<RationalField>(n, fq),
                 IncrementalEchelon<FiniteField>(n + 1, fp), IncrementalEchelon<FiniteField>(n, fp)};
  dfs(0, root);
  return out;
}

std::pair<int, int> stacked_ranks(const Arrangement& a, std::span<const std::size_t> subset, std::uint32_t p) {
  std::vector<const LinearForm*> forms;
  for (auto i : subset)
    for (const auto& form : a.subspaces().at(i)) forms.push_back(&form);
  const Eigen::Index cols = a.n() + 1;
  auto ranked = [&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    ExactMatrix<F> m(static_cast<Eigen::Index>(forms.size()), cols);
    for (std::size_t r = 0; r < forms.size(); ++r) m.row(r) = form_vector(*forms[r], f, false).transpose();
    return static_cast<int>(rank(m, f));
  };
  return {ranked(RationalField{}), ranked(cached_prime_field(p))};
}

// ---------------------------------------------------------------------------
// Families and ambient conversions
// ---------------------------------------------------------------------------

std::optional<KEqualFamily> parse_family(const std::string& s) {
  if (s == "A") return KEqualFamily::A;
  if (s == "B") return KEqualFamily::B;
  if (s == "D") return KEqualFamily::D;
  return std::nullopt;
}

namespace {

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

LinearForm zero_form(int n) { return LinearForm{std::vector<std::int64_t>(n + 1, 0)}; }

}  // namespace

Arrangement generate_k_equal(KEqualFamily family, int n, int k) {
  if (n < 2 || k < 2 || k > n)
    throw std::invalid_argument("generate_k_equal: need 2 <= k <= n, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
  std::vector<FormGroup> groups;
  std::vector<CanonicalSubspace> seen;
  auto emit = [&](FormGroup g) {
    auto c = canonicalize(g, Ring::integers(), Ambient::affine, n);
    if (std::find(seen.begin(), seen.end(), c) != seen.end()) return;
    seen.push_back(std::move(c));
    groups.push_back(std::move(g));
  };

  const auto tuples = subsets_of_size(n, k);
  for (const auto& idx : tuples) {
    // Signs of x_{i_2}..x_{i_k}; the first sign is fixed to +1 since eps and
    // -eps describe the same subspace.
    const std::uint32_t patterns = family == KEqualFamily::A ? 1u : (1u << (k - 1));
    for (std::uint32_t mask = 0; mask < patterns; ++mask) {
      auto sign = [&](int m) -> std::int64_t { return m == 0 ? 1 : ((mask >> (m - 1)) & 1u) ? -1 : 1; };
      FormGroup g;
      for (int m = 0; m + 1 < k; ++m) {
        auto form = zero_form(n);
        form.coeffs[idx[m] + 1] = sign(m);
        form.coeffs[idx[m + 1] + 1] = -sign(m + 1);
        g.push_back(std::move(form));
      }
      emit(std::move(g));
    }
  }
  if (family == KEqualFamily::B) {
    for (const auto& idx : subsets_of_size(n, k - 1)) {
      FormGroup g;
      for (int j : idx) {
        auto form = zero_form(n);
        form.coeffs[j + 1] = 1;
        g.push_back(std::move(form));
      }
      emit(std::move(g));
    }
  }
  const char* tag = family == KEqualFamily::A ? "A" : family == KEqualFamily::B ? "B" : "D";
  return Arrangement(Ring::integers(), Ambient::affine, n, std::move(groups),
                     std::string(tag) + "_" + std::to_string(n) + "," + std::to_string(k));
}

Arrangement projectivize(const Arrangement& a) {
  if (!a.is_central()) throw std::invalid_argument("projectivize: arrangement is not central");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.canonical(i).dim < 1)
      throw std::invalid_argument("projectivize: subspace " + std::to_string(i) + " is the origin");
  return Arrangement(a.ring(), Ambient::projective, a.n(), a.subspaces(), a.name());
}

Arrangement affine_cone(const Arrangement& a) {
  if (a.ambient() != Ambient::projective) throw std::invalid_argument("affine_cone: arrangement is not projective");
  if (a.size() > 0) return Arrangement(a.ring(), Ambient::affine, a.n(), a.subspaces(), a.name());
  FormGroup origin;
  for (int i = 1; i <= a.n(); ++i) {
    LinearForm f{std::vector<std::int64_t>(static_cast<std::size_t>(a.n()) + 1, 0)};
    f.coeffs[i] = 1;
    origin.push_back(std::move(f));
  }
  return Arrangement(a.ring(), Ambient::affine, a.n(), {origin}, a.name());
}

}  // namespace arr
