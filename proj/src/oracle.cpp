#include "arrangements/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace arr {

PrimePower PrimePower::parse(std::uint64_t q) {
  if (q < 2 || q >= (std::uint64_t{1} << 31)) throw std::invalid_argument("q must be a prime power in [2, 2^31)");
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  PrimePower out{static_cast<std::uint32_t>(p), 0};
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++out.alpha;
  }
  if (rest != 1) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  return out;
}

std::uint64_t PrimePower::value() const {
  std::uint64_t v = 1;
  for (int i = 0; i < alpha; ++i) v *= p;
  return v;
}

const char* to_string(CountMode m) noexcept { return m == CountMode::union_points ? "union" : "complement"; }

BigInt ambient_count(Ambient ambient, int n, const BigInt& qs) {
  const BigInt all = boost::multiprecision::pow(qs, static_cast<unsigned>(n));
  if (ambient == Ambient::affine) return all;
  return (all - 1) / (qs - 1);
}

namespace {

struct Term {
  int var;
  std::uint32_t coeff;
};

struct CompiledForm {
  std::uint32_t constant;
  std::vector<Term> terms;
};

// The forms of an F_p-arrangement prepared for evaluation over F_{p^k}.
class Evaluator {
 public:
  Evaluator(const Arrangement& a, const FieldDesc& field) : field_(field) {
    for (const auto& group : a.subspaces()) {
      std::vector<CompiledForm> g;
      for (const auto& form : group) {
        CompiledForm cf{static_cast<std::uint32_t>(form.coeffs[0]), {}};
        for (std::size_t j = 1; j < form.coeffs.size(); ++j)
          if (form.coeffs[j] != 0) cf.terms.push_back({static_cast<int>(j - 1), static_cast<std::uint32_t>(form.coeffs[j])});
        g.push_back(std::move(cf));
      }
      groups_.push_back(std::move(g));
    }
    const auto order = field.order();
    if (order <= (1u << 16)) {
      scale_.assign(field.characteristic(), {});
      for (std::uint32_t c = 0; c < field.characteristic(); ++c) {
        scale_[c].resize(order);
        for (std::uint64_t x = 0; x < order; ++x) scale_[c][x] = field.scale(c, static_cast<FieldDesc::Index>(x));
      }
    }
  }

  bool on_union(const std::vector<FieldDesc::Index>& x) const {
    for (const auto& g : groups_) {
      bool all_zero = true;
      for (const auto& f : g) {
        FieldDesc::Index v = f.constant;
        for (const auto& t : f.terms) v = field_.add(v, scale(t.coeff, x[t.var]));
        if (v != 0) {
          all_zero = false;
          break;
        }
      }
      if (all_zero) return true;
    }
    return false;
  }

 private:
  FieldDesc::Index scale(std::uint32_t c, FieldDesc::Index x) const {
    return scale_.empty() ? field_.scale(c, x) : scale_[c][x];
  }

  const FieldDesc& field_;
  std::vector<std::vector<CompiledForm>> groups_;
  std::vector<std::vector<FieldDesc::Index>> scale_;
};

// Union points among those whose first `free_count` coordinates range
// freely, except the first, which is pinned to `lead`; the remaining
// coordinates are taken from x.
std::uint64_t count_block(const Evaluator& ev, std::uint64_t order, std::vector<FieldDesc::Index> x,
                          int free_count, FieldDesc::Index lead) {
  std::uint64_t hits = 0;
  if (free_count == 0) return ev.on_union(x) ? 1 : 0;
  x[0] = lead;
  for (int i = 1; i < free_count; ++i) x[i] = 0;
  while (true) {
    if (ev.on_union(x)) ++hits;
    int i = 1;
    while (i < free_count && ++x[i] == order) x[i++] = 0;
    if (i >= free_count) break;
  }
  return hits;
}

}  // namespace

std::uint64_t count_points(const Arrangement& a, PrimePower q, int s, CountMode mode, const CountOptions& opts) {
  if (s < 1) throw std::invalid_argument("count_points: s must be positive");
  const Arrangement over_fp = a.ring().is_integers() ? reduce_mod_p(a, q.p).arrangement : a;
  if (over_fp.ring().prime != q.p)
    throw std::invalid_argument("count_points: arrangement is over F_" + std::to_string(over_fp.ring().prime) +
                                " but q = " + std::to_string(q.value()));
  const int n = a.n();
  const BigInt qs = boost::multiprecision::pow(BigInt(q.value()), static_cast<unsigned>(s));
  const BigInt size = boost::multiprecision::pow(qs, static_cast<unsigned>(n));
  if (size > opts.cap)
    throw std::length_error("count_points: enumeration of " + size.str() + " points exceeds the cap of " +
                            std::to_string(opts.cap));
  const auto field = make_extension_field(q.p, q.alpha * s);
  const Evaluator ev(over_fp, *field);
  const std::uint64_t order = field->order();

  // Work items: (number of free leading coordinates, fixed tail, lead value).
  struct Block {
    int free_count;
    std::vector<FieldDesc::Index> x;
    FieldDesc::Index lead;
  };
  std::vector<Block> blocks;
  auto add_blocks = [&](int free_count, std::vector<FieldDesc::Index> x) {
    if (free_count == 0) {
      blocks.push_back({0, std::move(x), 0});
      return;
    }
    for (std::uint64_t v = 0; v < order; ++v) blocks.push_back({free_count, x, static_cast<FieldDesc::Index>(v)});
  };
  if (a.ambient() == Ambient::affine) {
    add_blocks(n, std::vector<FieldDesc::Index>(n, 0));
  } else {
    // Last nonzero coordinate equal to 1.
    for (int t = 0; t < n; ++t) {
      std::vector<FieldDesc::Index> x(n, 0);
      x[t] = 1;
      add_blocks(t, std::move(x));
    }
  }

  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(blocks.size())));
  std::vector<std::uint64_t> partial(threads, 0);
  auto work = [&](unsigned w) {
    for (std::size_t b = w; b < blocks.size(); b += threads)
      partial[w] += count_block(ev, order, blocks[b].x, blocks[b].free_count, blocks[b].lead);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::uint64_t on = 0;
  for (auto v : partial) on += v;
  if (mode == CountMode::union_points) return on;
  return ambient_count(a.ambient(), n, qs).convert_to<std::uint64_t>() - on;
}

CountTable count_table(const Arrangement& a, PrimePower q, int s_max, const CountOptions& opts) {
  CountTable t;
  t.q = q.value();
  for (int s = 1; s <= s_max; ++s) {
    CountRow row;
    row.s = s;
    row.union_count = count_points(a, q, s, CountMode::union_points, opts);
    row.complement_count = count_points(a, q, s, CountMode::complement_points, opts);
    const BigInt qs = boost::multiprecision::pow(BigInt(t.q), static_cast<unsigned>(s));
    row.total = ambient_count(a.ambient(), a.n(), qs).convert_to<std::uint64_t>();
    if (row.union_count + row.complement_count != row.total)
      throw std::logic_error("count_table: union and complement do not partition the ambient space");
    t.rows.push_back(row);
  }
  return t;
}

ZetaCheck verify_zeta(const CountTable& table, CountMode mode, const ZetaFactorization& z, int s_max) {
  if (s_max < 1 || static_cast<std::size_t>(s_max) > table.rows.size())
    throw std::invalid_argument("verify_zeta: count table is too short");
  std::vector<BigInt> counts;
  for (int s = 1; s <= s_max; ++s) {
    const auto& row = table.rows[s - 1];
    counts.emplace_back(mode == CountMode::union_points ? row.union_count : row.complement_count);
  }
  ZetaCheck out;
  out.counted = series_exp_of_counts(counts, s_max);
  out.expected = series_expand_factorization(z, BigInt(table.q), s_max);
  for (int k = 0; k <= s_max; ++k)
    if (out.counted.coefficients[k] != out.expected.coefficients[k]) {
      out.ok = false;
      out.first_failing_order = k;
      break;
    }
  return out;
}

ZetaCheck verify_zeta(const Arrangement& a, PrimePower q, int s_max, const ZetaFactorization& z, CountMode mode,
                      const CountOptions& opts) {
  return verify_zeta(count_table(a, q, s_max, opts), mode, z, s_max);
}

BigInt lefschetz_target(ProfileKind kind, const CountRow& row) {
  switch (kind) {
    case ProfileKind::projective_union: return BigInt(row.union_count);
    case ProfileKind::affine_complement:
    case ProfileKind::projective_complement: return BigInt(row.complement_count);
    case ProfileKind::central_punctured: return -BigInt(row.union_count);
  }
  throw std::logic_error("lefschetz_target: unknown profile kind");
}

LefschetzCheck verify_lefschetz(const CountTable& table, const FrobeniusProfile& f, int s_max) {
  if (f.kind == ProfileKind::projective_complement && !f.compact_support)
    throw std::invalid_argument("verify_lefschetz: the ordinary projective complement profile has no point-count trace");
  if (s_max < 1 || static_cast<std::size_t>(s_max) > table.rows.size())
    throw std::invalid_argument("verify_lefschetz: count table is too short");
  LefschetzCheck out;
  for (int s = 1; s <= s_max; ++s) {
    out.traces.push_back(f.trace(BigInt(table.q), s));
    out.expected.push_back(lefschetz_target(f.kind, table.rows[s - 1]));
    if (out.ok && out.traces.back() != out.expected.back()) {
      out.ok = false;
      out.first_failing_s = s;
    }
  }
  return out;
}

LefschetzCheck verify_lefschetz(const Arrangement& a, PrimePower q, int s_max, const FrobeniusProfile& f,
                                const CountOptions& opts) {
  return verify_lefschetz(count_table(a, q, s_max, opts), f, s_max);
}

}  // namespace arr
