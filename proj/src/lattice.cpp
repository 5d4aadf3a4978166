#include "arrangements/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace arr {

namespace {

struct CanonicalLess {
  bool operator()(const CanonicalSubspace& a, const CanonicalSubspace& b) const { return canonical_less(a, b); }
};

}  // namespace

std::optional<int> Semilattice::top() const {
  const auto maxima = order.maximal_elements();
  if (maxima.size() == 1) return maxima.front();
  return std::nullopt;
}

int Semilattice::dimension() const {
  int d = -1;
  for (int i = 1; i < size(); ++i) d = std::max(d, dims[i]);
  return d;
}

Semilattice build_lattice(const Arrangement& a) {
  Semilattice out;
  out.ring = a.ring();
  out.ambient = a.ambient();
  out.n = a.n();

  std::vector<CanonicalSubspace> gens;
  std::vector<CanonicalSubspace> per_input;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto c = a.canonical(i);
    if (!c.empty && c.is_whole_space())
      throw std::invalid_argument("build_lattice: subspace " + std::to_string(i) + " is the whole space");
    per_input.push_back(c);
    if (!c.empty && std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(std::move(c));
  }

  std::set<CanonicalSubspace, CanonicalLess> seen(gens.begin(), gens.end());
  std::deque<CanonicalSubspace> work(gens.begin(), gens.end());
  while (!work.empty()) {
    const CanonicalSubspace x = std::move(work.front());
    work.pop_front();
    for (const auto& g : gens) {
      auto y = intersect(x, g);
      if (y.empty || seen.count(y)) continue;
      seen.insert(y);
      work.push_back(std::move(y));
    }
  }

  out.elements.push_back(whole_space(a.ring(), a.ambient(), a.n()));
  out.elements.insert(out.elements.end(), seen.begin(), seen.end());
  // The set order is rows ascending then entries, i.e. dimension descending.
  const int size = out.size();
  for (const auto& e : out.elements) out.dims.push_back(e.dim);

  Poset::OrderMatrix less = Poset::OrderMatrix::Constant(size, size, false);
  for (int j = 1; j < size; ++j) less(0, j) = true;
  for (int i = 1; i < size; ++i)
    for (int j = i + 1; j < size; ++j)
      if (out.dims[j] < out.dims[i]) less(i, j) = contained_in(out.elements[j], out.elements[i]);
  out.order = Poset(std::move(less));
  if (size > 0) out.atoms = out.order.upper_covers(0);

  for (const auto& c : per_input) {
    if (c.empty) {
      out.generators.push_back(-1);
      continue;
    }
    const auto it = std::find(out.elements.begin(), out.elements.end(), c);
    out.generators.push_back(static_cast<int>(it - out.elements.begin()));
  }
  return out;
}

MobiusTable mobius(const Semilattice& lattice) {
  const int size = lattice.size();
  const auto& P = lattice.order;
  MobiusTable mu = MobiusTable::Zero(size, size);
  for (int x = 0; x < size; ++x) {
    mu(x, x) = 1;
    for (int y = x + 1; y < size; ++y) {
      if (!P.less(x, y)) continue;
      std::int64_t s = 0;
      for (int z = x; z < y; ++z)
        if (P.leq(x, z) && P.less(z, y)) s += mu(x, z);
      mu(x, y) = -s;
    }
  }
  return mu;
}

namespace {

SubPoset make_sub(const Semilattice& lattice, std::vector<int> members) {
  SubPoset out;
  out.poset = lattice.order.induced(members);
  out.members = std::move(members);
  return out;
}

}  // namespace

SubPoset truncation(const Semilattice& lattice, int j) {
  std::vector<int> members;
  for (int i = 1; i < lattice.size(); ++i)
    if (lattice.dims[i] >= j) members.push_back(i);
  return make_sub(lattice, std::move(members));
}

SubPoset open_interval_below(const Semilattice& lattice, int x) {
  if (x == 0) throw std::invalid_argument("open_interval_below: x is the bottom element");
  return open_interval(lattice, 0, x);
}

SubPoset open_interval(const Semilattice& lattice, int x, int y) {
  if (x < 0 || y < 0 || x >= lattice.size() || y >= lattice.size())
    throw std::out_of_range("open_interval: element index out of range");
  std::vector<int> members;
  for (int z = 0; z < lattice.size(); ++z)
    if (lattice.order.less(x, z) && lattice.order.less(z, y)) members.push_back(z);
  return make_sub(lattice, std::move(members));
}

bool is_hereditary(const Semilattice& lattice) {
  for (int x = 1; x < lattice.size(); ++x) {
    if (lattice.dims[x] <= 0) continue;
    bool found = false;
    for (int y = x + 1; y < lattice.size() && !found; ++y)
      found = lattice.order.less(x, y) && lattice.dims[y] == lattice.dims[x] - 1;
    if (!found) return false;
  }
  return true;
}

bool is_mod_m_pure(const Semilattice& lattice, int m) {
  if (m < 1) throw std::invalid_argument("is_mod_m_pure: m must be positive");
  const int size = lattice.size();
  if (size == 0) return true;
  // Residues mod m of the lengths of saturated chains from the bottom.
  std::vector<std::set<int>> lengths(size);
  lengths[0].insert(0);
  for (int x = 0; x < size; ++x)
    for (int y : lattice.order.upper_covers(x))
      for (int l : lengths[x]) lengths[y].insert((l + 1) % m);
  std::set<int> tops;
  for (int x : lattice.order.maximal_elements()) tops.insert(lengths[x].begin(), lengths[x].end());
  return tops.size() <= 1;
}

}  // namespace arr
