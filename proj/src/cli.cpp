#include "arrangements/cli.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "arrangements/enumerative.hpp"
#include "arrangements/io.hpp"
#include "arrangements/oracle.hpp"

namespace arr::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSubsetCap = std::uint64_t{1} << 20;

struct GlobalOptions {
  std::string format = "text";
  std::optional<std::uint64_t> cap;
  std::uint64_t seed = 0;
  unsigned threads = 1;

  CountOptions counting() const {
    CountOptions o;
    if (cap) o.cap = *cap;
    o.threads = threads;
    return o;
  }
};

// Failures that map to exit code 2 without a stack of context.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string rational_text(const Rational& r) {
  std::ostringstream s;
  s << r;
  return s.str();
}

ojson integer_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

ojson poly_json(const IntPolynomial& p) {
  ojson c = ojson::array();
  for (const auto& v : p.coefficients()) c.push_back(integer_json(v));
  return ojson{{"text", to_string(p)}, {"coefficients", c}, {"degree", p.degree()}};
}

ojson zeta_json(const ZetaFactorization& z) {
  ojson ex = ojson::array();
  for (const auto& [j, e] : z.exponents) ex.push_back({{"j", j}, {"e", e}});
  return ojson{{"text", to_string(z)}, {"exponents", ex}};
}

ojson betti_json(const BettiVector& b) {
  // Reduced Betti numbers from degree -1 up.
  ojson a = ojson::array();
  for (int i = -1; i <= std::max(b.top(), -1); ++i) a.push_back(b.reduced(i));
  return a;
}

ojson arrangement_summary(const Arrangement& a) {
  ojson s;
  s["name"] = a.name();
  s["ring"] = a.ring().is_integers() ? std::string("Z") : "F_" + std::to_string(a.ring().prime);
  s["space"] = to_string(a.ambient());
  s["n"] = a.n();
  s["subspaces"] = a.size();
  return s;
}

struct Context {
  Arrangement original;
  Arrangement working;
  std::optional<PrimePower> q;
  ojson reduction;  // null unless a Z-arrangement was reduced mod p
};

// The arrangement whose lattice matches counts over F_q: Z-arrangements are
// reduced mod p when q is given.
Context make_context(const std::string& file, std::optional<std::uint64_t> q_value) {
  Arrangement a = load_arrangement_file(file);
  Context ctx{a, a, std::nullopt, nullptr};
  if (!q_value) return ctx;
  ctx.q = PrimePower::parse(*q_value);
  if (a.ring().is_integers()) {
    auto red = reduce_mod_p(a, ctx.q->p);
    ctx.working = red.arrangement;
    ojson r;
    r["prime"] = ctx.q->p;
    r["inconsistent"] = red.inconsistent;
    r["whole_space"] = red.whole_space;
    ojson dups = ojson::array();
    for (const auto& [i, j] : red.duplicates) dups.push_back({i, j});
    r["duplicates"] = dups;
    ctx.reduction = r;
    if (!red.whole_space.empty())
      throw UsageError("subspace " + std::to_string(red.whole_space.front()) + " vanishes identically mod " +
                       std::to_string(ctx.q->p));
  } else if (a.ring().prime != ctx.q->p) {
    throw UsageError("q = " + std::to_string(*q_value) + " is not a power of the file's prime " +
                     std::to_string(a.ring().prime));
  }
  return ctx;
}

ojson base_report(const char* command, const Context& ctx) {
  ojson r;
  r["command"] = command;
  r["arrangement"] = arrangement_summary(ctx.original);
  if (ctx.q) r["q"] = ctx.q->value();
  if (!ctx.reduction.is_null()) r["reduction"] = ctx.reduction;
  return r;
}

// Polynomial that counts complement points: P for affine, P* for projective.
IntPolynomial complement_polynomial(const Semilattice& l) {
  return l.ambient == Ambient::affine ? char_poly(l) : reduced_char_poly(l);
}

IntPolynomial ambient_polynomial(const Semilattice& l) {
  if (l.ambient == Ambient::affine) return IntPolynomial::monomial(l.n);
  return IntPolynomial(std::vector<BigInt>(static_cast<std::size_t>(l.n), 1));
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

ojson cmd_lattice(const Context& ctx) {
  const auto l = build_lattice(ctx.working);
  const auto mu = mobius(l);
  ojson r = base_report("lattice", ctx);
  r["result"] = std::to_string(l.size()) + " elements, dimension " + std::to_string(l.dimension());
  r["size"] = l.size();
  r["dimension"] = l.dimension();
  ojson elements = ojson::array();
  for (int i = 0; i < l.size(); ++i) {
    ojson eq = ojson::array();
    const auto& m = l.elements[i].equations;
    for (Eigen::Index a = 0; a < m.rows(); ++a) {
      ojson row = ojson::array();
      for (Eigen::Index b = 0; b < m.cols(); ++b) row.push_back(rational_text(m(a, b)));
      eq.push_back(row);
    }
    elements.push_back({{"index", i}, {"dim", l.dims[i]}, {"equations", eq}});
  }
  r["elements"] = elements;
  ojson hasse = ojson::array();
  for (int i = 0; i < l.size(); ++i)
    for (int j : l.order.upper_covers(i)) hasse.push_back({i, j});
  r["hasse"] = hasse;
  ojson row = ojson::array();
  for (int x = 0; x < l.size(); ++x) row.push_back(mu(0, x));
  r["mobius_bottom"] = row;
  r["atoms"] = l.atoms;
  if (const auto t = l.top()) r["top"] = *t;
  else r["top"] = nullptr;
  return r;
}

std::vector<long long> parse_coefficients(const std::string& s) {
  std::vector<long long> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--expect: cannot parse coefficient \"" + item + "\"");
    }
  }
  return out;
}

ojson cmd_charpoly(const Context& ctx, const std::string& expect, bool& failed) {
  const auto l = build_lattice(ctx.working);
  const auto p = complement_polynomial(l);
  ojson r = base_report("charpoly", ctx);
  r["result"] = to_string(p);
  r["kind"] = l.ambient == Ambient::affine ? "P" : "P*";
  r["polynomial"] = poly_json(p);
  r["dimension"] = l.dimension();
  if (!expect.empty()) {
    std::vector<BigInt> c;
    for (auto v : parse_coefficients(expect)) c.emplace_back(v);
    const IntPolynomial e(std::move(c));
    r["expected"] = poly_json(e);
    r["matches_expected"] = e == p;
    failed = !(e == p);
  }
  return r;
}

ojson cmd_zeta(const Context& ctx, const std::string& mode_text) {
  const auto l = build_lattice(ctx.working);
  const bool projective = l.ambient == Ambient::projective;
  CountMode mode = projective ? CountMode::union_points : CountMode::complement_points;
  if (mode_text == "union") mode = CountMode::union_points;
  else if (mode_text == "complement") mode = CountMode::complement_points;
  else if (!mode_text.empty()) throw UsageError("--mode must be union or complement");

  const auto p = complement_polynomial(l);
  ZetaFactorization z;
  if (!projective && mode == CountMode::complement_points) z = zeta_affine_complement(p);
  else if (projective && mode == CountMode::union_points) z = zeta_projective_union(p, l.dimension());
  else if (mode == CountMode::complement_points) z = zeta_from_count_polynomial(p);
  else z = zeta_from_count_polynomial(ambient_polynomial(l) - p);

  ojson r = base_report("zeta", ctx);
  r["mode"] = to_string(mode);
  r["result"] = "Z = " + to_string(z);
  r["zeta"] = zeta_json(z);
  const BigInt q(ctx.q->value());
  constexpr int order = 3;
  ojson counts = ojson::array();
  for (int s = 1; s <= order; ++s) counts.push_back(integer_json(factorization_count(z, q, s)));
  r["counts"] = counts;
  ojson series = ojson::array();
  for (const auto& c : series_expand_factorization(z, q, order).coefficients) series.push_back(rational_text(c));
  r["series"] = series;
  return r;
}

ojson cmd_betti(const Context& ctx) {
  const auto l = build_lattice(ctx.working);
  ojson r = base_report("betti", ctx);
  r["dimension"] = l.dimension();
  if (l.ambient == Ambient::projective) {
    const auto b = beta_triangle(l);
    const auto bc = complex_betti(b);
    std::ostringstream res;
    for (std::size_t j = 0; j < b.rows.size(); ++j) {
      res << "j=" << j << ":";
      for (auto v : b.rows[j]) res << ' ' << v;
      res << '\n';
    }
    res << "complex:";
    for (auto v : bc) res << ' ' << v;
    r["result"] = res.str();
    r["beta_triangle"] = b.rows;
    ojson reduced = ojson::array();
    for (const auto& row : reduced_beta_triangle(l)) reduced.push_back(betti_json(row));
    r["reduced_triangle"] = reduced;
    r["complex_betti"] = bc;
  } else {
    const auto t = local_beta_table(l);
    ojson entries = ojson::array();
    std::ostringstream res;
    for (const auto& [ji, v] : t.entries) {
      entries.push_back({{"j", ji.first}, {"i", ji.second}, {"value", v}});
      res << "j=" << ji.first << " i=" << ji.second << ": " << v << '\n';
    }
    std::string text = res.str();
    if (!text.empty()) text.pop_back();
    r["result"] = text.empty() ? std::string("(empty table)") : text;
    r["local_table"] = entries;
  }
  return r;
}

// Degree -1 occurs for the reduced cohomology of an empty punctured cone.
int lowest_degree(const FrobeniusProfile& f) {
  return f.multiplicities.empty() ? 0 : std::min(0, f.multiplicities.begin()->first.first);
}

ojson profile_json(const FrobeniusProfile& f, const BigInt& q) {
  ojson polys = ojson::array();
  for (int i = lowest_degree(f); i <= f.max_degree(); ++i) polys.push_back({{"i", i}, {"P", f.polynomial(i)}});
  ojson mult = ojson::array();
  for (const auto& [ij, m] : f.multiplicities) mult.push_back({{"i", ij.first}, {"j", ij.second}, {"m", m}});
  ojson out{{"compact_support", f.compact_support}, {"polynomials", polys}, {"multiplicities", mult}};
  if (f.compact_support) {
    ojson traces = ojson::array();
    for (int s = 1; s <= 2; ++s) traces.push_back({{"s", s}, {"trace", integer_json(f.trace(q, s))}});
    out["traces"] = traces;
    out["zeta"] = zeta_json(f.to_zeta());
  }
  return out;
}

std::string profile_text(const FrobeniusProfile& f) {
  if (f.multiplicities.empty()) return "(no cohomology)";
  std::ostringstream s;
  for (int i = lowest_degree(f); i <= f.max_degree(); ++i)
    s << (i == lowest_degree(f) ? "" : "\n") << "P_" << i << "(t) = " << f.polynomial(i);
  return s.str();
}

ProfileKind parse_profile_kind(const std::string& mode, Ambient ambient) {
  if (mode.empty()) return ambient == Ambient::projective ? ProfileKind::projective_union : ProfileKind::affine_complement;
  if (mode == "proj-union") return ProfileKind::projective_union;
  if (mode == "aff-complement") return ProfileKind::affine_complement;
  if (mode == "central-punctured") return ProfileKind::central_punctured;
  if (mode == "proj-complement") return ProfileKind::projective_complement;
  throw UsageError("--mode must be proj-union, aff-complement, central-punctured or proj-complement");
}

// Profile of the requested kind, adapting the ambient where the kind needs it.
FrobeniusProfile compute_profile(const Arrangement& a, ProfileKind kind, FrobeniusProfile* ordinary = nullptr) {
  switch (kind) {
    case ProfileKind::projective_union:
      if (a.ambient() != Ambient::projective) throw UsageError("proj-union needs a projective arrangement");
      return frobenius_projective_union(beta_triangle(build_lattice(a)));
    case ProfileKind::affine_complement:
      if (a.ambient() != Ambient::affine) throw UsageError("aff-complement needs an affine arrangement");
      return frobenius_affine_complement(local_beta_table(build_lattice(a)), a.n());
    case ProfileKind::central_punctured: {
      const Arrangement cone = a.ambient() == Ambient::projective ? affine_cone(a) : a;
      if (!cone.is_central()) throw UsageError("central-punctured needs a central arrangement");
      if (cone.size() == 0) return frobenius_central_punctured(punctured_ambient_table(cone.n()));
      return frobenius_central_punctured(build_lattice(cone));
    }
    case ProfileKind::projective_complement: {
      if (a.ambient() != Ambient::projective) throw UsageError("proj-complement needs a projective arrangement");
      auto both = frobenius_projective_complement(build_lattice(a));
      if (ordinary) *ordinary = both.ordinary;
      return both.compact;
    }
  }
  throw std::logic_error("unknown profile kind");
}

ojson cmd_frobenius(const Context& ctx, const std::string& mode) {
  const auto kind = parse_profile_kind(mode, ctx.working.ambient());
  FrobeniusProfile ordinary;
  const auto f = compute_profile(ctx.working, kind, &ordinary);
  const BigInt q(ctx.q->value());
  ojson r = base_report("frobenius", ctx);
  r["mode"] = to_string(kind);
  r["result"] = profile_text(f);
  r["profile"] = profile_json(f, q);
  if (kind == ProfileKind::projective_complement) r["ordinary_profile"] = profile_json(ordinary, q);
  if (kind == ProfileKind::central_punctured) r["cohomology"] = "ordinary reduced";
  return r;
}

ojson cmd_count(const Context& ctx, int s, const std::string& mode_text, const GlobalOptions& g) {
  CountMode mode = CountMode::complement_points;
  if (mode_text == "union") mode = CountMode::union_points;
  else if (!mode_text.empty() && mode_text != "complement") throw UsageError("--mode must be union or complement");
  const auto count = count_points(ctx.original, *ctx.q, s, mode, g.counting());
  const BigInt qs = boost::multiprecision::pow(BigInt(ctx.q->value()), static_cast<unsigned>(s));
  ojson r = base_report("count", ctx);
  r["s"] = s;
  r["mode"] = to_string(mode);
  r["result"] = count;
  r["count"] = count;
  r["ambient_total"] = integer_json(ambient_count(ctx.original.ambient(), ctx.original.n(), qs));
  return r;
}

ojson check_entry(const std::string& name, bool ok, const std::string& detail) {
  return ojson{{"name", name}, {"ok", ok}, {"detail", detail}};
}

ojson cmd_verify(const Context& ctx, int s_max, const GlobalOptions& g, bool& failed) {
  const Arrangement& a = ctx.working;
  const auto l = build_lattice(a);
  const auto table = count_table(ctx.original, *ctx.q, s_max, g.counting());
  const BigInt q(ctx.q->value());
  ojson checks = ojson::array();
  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    checks.push_back(check_entry(name, ok, detail));
    failed = failed || !ok;
  };

  const auto p = complement_polynomial(l);
  const std::string pname = l.ambient == Ambient::affine ? "P" : "P*";
  for (const auto& row : table.rows) {
    const BigInt qs = boost::multiprecision::pow(q, static_cast<unsigned>(row.s));
    const BigInt value = poly_eval_int(p, qs);
    add(pname + "(q^" + std::to_string(row.s) + ") = complement count", value == row.complement_count,
        value.str() + " vs " + std::to_string(row.complement_count));
  }

  const int order = std::min(s_max, 3);
  if (l.ambient == Ambient::affine) {
    const auto zc = verify_zeta(table, CountMode::complement_points, zeta_affine_complement(p), order);
    add("zeta of complement", zc.ok, zc.ok ? "series agree" : "first difference at t^" + std::to_string(zc.first_failing_order));
  } else {
    const auto zu = verify_zeta(table, CountMode::union_points, zeta_projective_union(p, l.dimension()), order);
    add("zeta of union", zu.ok, zu.ok ? "series agree" : "first difference at t^" + std::to_string(zu.first_failing_order));
    add("c_j = -reduced Euler characteristic of truncations", truncation_euler_check(l), "");
    if (l.dimension() >= 0) {
      const auto cone = affine_cone(a);
      add("(t-1) P* = P of the cone", central_vs_projective_check(build_lattice(cone), l), "");
    }
  }

  auto lefschetz = [&](ProfileKind kind) {
    const auto f = compute_profile(a, kind);
    CountTable t = table;
    if (kind == ProfileKind::central_punctured) {
      // Punctured central profiles always concern the affine cone.
      if (a.ambient() == Ambient::projective) t = count_table(affine_cone(ctx.original), *ctx.q, s_max, g.counting());
      // Puncturing the ambient space itself: the union is everything.
      else if (a.size() == 0)
        for (auto& row : t.rows) row.union_count = row.total;
    }
    const auto res = verify_lefschetz(t, f, s_max);
    std::string detail;
    for (std::size_t i = 0; i < res.traces.size(); ++i)
      detail += (i ? "; " : "") + std::string("s=") + std::to_string(i + 1) + ": " + res.traces[i].str() + " vs " +
                res.expected[i].str();
    add(std::string("Lefschetz trace, ") + to_string(kind), res.ok, detail);
  };
  if (l.ambient == Ambient::affine) {
    lefschetz(ProfileKind::affine_complement);
    if (a.is_central()) lefschetz(ProfileKind::central_punctured);
  } else {
    lefschetz(ProfileKind::projective_union);
    lefschetz(ProfileKind::projective_complement);
    lefschetz(ProfileKind::central_punctured);
  }

  ojson r = base_report("verify", ctx);
  r["s_max"] = s_max;
  r["result"] = failed ? "FAILED" : "ok";
  r["checks"] = checks;
  ojson counts = ojson::array();
  for (const auto& row : table.rows)
    counts.push_back({{"s", row.s}, {"union", row.union_count}, {"complement", row.complement_count}, {"total", row.total}});
  r["counts"] = counts;
  return r;
}

struct CheckFlags {
  bool hereditary = false;
  std::optional<int> mod_pure;
  bool cm = false;
  std::optional<std::uint32_t> good_prime;
  bool sign_alternation = false;
  std::optional<int> mod_m_vanishing;
};

ojson cmd_check(const Context& ctx, const CheckFlags& f, const GlobalOptions& g, bool& failed) {
  const auto l = build_lattice(ctx.working);
  ojson checks = ojson::array();
  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    checks.push_back(check_entry(name, ok, detail));
    failed = failed || !ok;
  };
  if (f.hereditary) {
    const bool ok = is_hereditary(l);
    add("hereditary", ok, ok ? "hereditary" : "not hereditary");
  }
  if (f.mod_pure) {
    const bool ok = is_mod_m_pure(l, *f.mod_pure);
    const std::string tag = "mod-" + std::to_string(*f.mod_pure) + "-pure";
    add(tag, ok, ok ? tag : "not " + tag);
  }
  if (f.cm) {
    const auto res = is_rationally_cm(l);
    std::string detail = "rationally Cohen-Macaulay";
    if (!res.cohen_macaulay) {
      const auto [x, y] = *res.failing_interval;
      detail = "interval (" + std::to_string(x) + ", " + (y == l.size() ? std::string("top") : std::to_string(y)) +
               ") has reduced homology in degree " + std::to_string(res.failing_degree);
    }
    add("cohen-macaulay", res.cohen_macaulay, detail);
  }
  if (f.good_prime) {
    if (!ctx.original.ring().is_integers()) throw UsageError("--good-prime needs a Z-arrangement");
    const auto res = good_prime(ctx.original, *f.good_prime, g.cap.value_or(kDefaultSubsetCap));
    std::string detail = "good";
    if (!res.good) {
      detail = "bad; witness subspaces";
      for (auto i : res.witness) detail += " " + std::to_string(i);
      detail += ", rank " + std::to_string(res.rank_q) + " over Q vs " + std::to_string(res.rank_p) + " over F_" +
                std::to_string(*f.good_prime);
    }
    add("good prime " + std::to_string(*f.good_prime), res.good, detail);
  }
  if (f.sign_alternation) {
    const bool affine = l.ambient == Ambient::affine;
    const auto p = complement_polynomial(l);
    const bool ok = check_sign_alternation(p, l.dimension(), affine ? PolynomialKind::affine : PolynomialKind::projective);
    add("sign alternation", ok, (affine ? "P = " : "P* = ") + to_string(p));
  }
  if (f.mod_m_vanishing) {
    if (l.ambient != Ambient::projective) throw UsageError("--mod-m-vanishing needs a projective arrangement");
    const bool ok = check_mod_m_vanishing(reduced_beta_triangle(l), l.dimension(), *f.mod_m_vanishing);
    add("mod-" + std::to_string(*f.mod_m_vanishing) + " vanishing", ok, "");
  }
  if (checks.empty()) throw UsageError("check: no checks requested");
  ojson r = base_report("check", ctx);
  r["result"] = failed ? "FAILED" : "ok";
  r["checks"] = checks;
  return r;
}

// ---------------------------------------------------------------------------
// Text rendering
// ---------------------------------------------------------------------------

std::string scalar_text(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_null()) return "none";
  return v.dump();
}

bool all_scalars(const ojson& a) {
  for (const auto& v : a)
    if (v.is_structured()) return false;
  return true;
}

void render(const ojson& v, const std::string& indent, std::ostringstream& out) {
  for (const auto& [key, value] : v.items()) {
    if (key == "result" && indent.empty()) continue;
    out << indent << key << ':';
    if (!value.is_structured()) {
      out << ' ' << scalar_text(value) << '\n';
    } else if (value.is_object()) {
      out << '\n';
      render(value, indent + "  ", out);
    } else if (value.empty()) {
      out << " (none)\n";
    } else if (all_scalars(value)) {
      out << ' ';
      for (std::size_t i = 0; i < value.size(); ++i) out << (i ? ", " : "") << scalar_text(value[i]);
      out << '\n';
    } else {
      out << '\n';
      for (const auto& item : value) {
        out << indent << "  -";
        if (item.is_object()) {
          for (const auto& [k, x] : item.items()) out << ' ' << k << '=' << (x.is_structured() ? x.dump() : scalar_text(x));
        } else {
          out << ' ' << item.dump();
        }
        out << '\n';
      }
    }
  }
}

}  // namespace

std::string render_text(const ojson& report) {
  std::ostringstream out;
  if (const auto it = report.find("result"); it != report.end()) out << scalar_text(*it) << '\n';
  render(report, "", out);
  return out.str();
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of subspace arrangements over finite fields and the integers", "arr"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cap", g.cap, "Enumeration cap for point counts and subset cap for good-prime searches");
  app.add_option("--seed", g.seed, "Accepted and ignored; all computations are deterministic");
  app.add_option("--threads", g.threads, "Worker threads for point counting")->check(CLI::Range(1u, 256u));

  std::string file, mode, expect;
  std::uint64_t q = 0;
  int s = 1, s_max = 2;
  CheckFlags flags;

  auto with_file = [&](CLI::App* sub) { sub->add_option("file", file, "Arrangement file")->required(); };

  auto* lattice = app.add_subcommand("lattice", "Intersection semilattice, Hasse diagram and Möbius row of the bottom");
  with_file(lattice);
  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial (P*, for projective files)");
  with_file(charpoly);
  charpoly->add_option("--expect", expect, "Comma-separated coefficients, ascending, to compare against");
  auto* zeta = app.add_subcommand("zeta", "Zeta function factorization");
  with_file(zeta);
  zeta->add_option("--q", q, "Prime power")->required();
  zeta->add_option("--mode", mode, "union or complement");
  auto* betti = app.add_subcommand("betti", "Beta triangle, local Betti table and complex Betti numbers");
  with_file(betti);
  auto* frob = app.add_subcommand("frobenius", "Frobenius weight profile P_i(t)");
  with_file(frob);
  frob->add_option("--q", q, "Prime power")->required();
  frob->add_option("--mode", mode, "proj-union, aff-complement, central-punctured or proj-complement");
  auto* count = app.add_subcommand("count", "Brute-force point count");
  with_file(count);
  count->add_option("--q", q, "Prime power")->required();
  count->add_option("--s", s, "Extension degree")->check(CLI::PositiveNumber);
  count->add_option("--mode", mode, "union or complement");
  auto* verify = app.add_subcommand("verify", "Cross-check every formula against point counts");
  with_file(verify);
  verify->add_option("--q", q, "Prime power")->required();
  verify->add_option("--smax", s_max, "Largest extension degree")->check(CLI::PositiveNumber);
  auto* check = app.add_subcommand("check", "Structural predicates");
  with_file(check);
  check->add_flag("--hereditary", flags.hereditary);
  check->add_option("--mod-pure", flags.mod_pure)->check(CLI::PositiveNumber);
  check->add_flag("--cm", flags.cm);
  check->add_option("--good-prime", flags.good_prime);
  check->add_flag("--sign-alternation", flags.sign_alternation);
  check->add_option("--mod-m-vanishing", flags.mod_m_vanishing)->check(CLI::PositiveNumber);
  auto* generate = app.add_subcommand("generate", "Emit a k-equal arrangement file");
  std::string family, space = "affine";
  int gn = 0, gk = 0;
  generate->add_option("--family", family)->required()->check(CLI::IsMember({"A", "B", "D"}));
  generate->add_option("--n", gn)->required();
  generate->add_option("--k", gk)->required();
  generate->add_option("--space", space)->check(CLI::IsMember({"affine", "projective"}));

  std::vector<std::string> argv_store{"arr"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return usage_error;
  }

  try {
    if (generate->parsed()) {
      const auto fam = parse_family(family);
      Arrangement a = generate_k_equal(*fam, gn, gk);
      if (space == "projective") a = projectivize(a);
      out << serialize_arrangement(a);
      return ok;
    }
    bool failed = false;
    ojson report;
    std::optional<std::uint64_t> qv;
    if (zeta->parsed() || frob->parsed() || count->parsed() || verify->parsed()) qv = q;
    const Context ctx = make_context(file, qv);
    if (lattice->parsed()) report = cmd_lattice(ctx);
    else if (charpoly->parsed()) report = cmd_charpoly(ctx, expect, failed);
    else if (zeta->parsed()) report = cmd_zeta(ctx, mode);
    else if (betti->parsed()) report = cmd_betti(ctx);
    else if (frob->parsed()) report = cmd_frobenius(ctx, mode);
    else if (count->parsed()) report = cmd_count(ctx, s, mode, g);
    else if (verify->parsed()) report = cmd_verify(ctx, s_max, g, failed);
    else if (check->parsed()) report = cmd_check(ctx, flags, g, failed);

    if (g.format == "json") out << report.dump(2) << '\n';
    else out << render_text(report);
    return failed ? check_failed : ok;
  } catch (const std::exception& e) {
    err << "arr: " << e.what() << '\n';
    return usage_error;
  }
}

}  // namespace arr::cli
