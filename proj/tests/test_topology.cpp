#include <catch2/catch_amalgamated.hpp>

#include "arrangements/lattice.hpp"
#include "arrangements/topology.hpp"
#include "support.hpp"

using namespace arr;

namespace {

Poset chain(int n) {
  Poset::OrderMatrix less = Poset::OrderMatrix::Constant(n, n, false);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) less(i, j) = true;
  return Poset(less);
}

Poset antichain(int n) { return Poset(Poset::OrderMatrix::Constant(n, n, false)); }

// Every complex the corpus produces: truncations and lower intervals.
std::vector<Poset> corpus_posets(const std::string& name) {
  const auto l = build_lattice(test::corpus(name));
  std::vector<Poset> out;
  if (l.ambient == Ambient::projective)
    for (int j = 0; j <= l.ambient_dim(); ++j) out.push_back(truncation(l, j).poset);
  for (int x = 1; x < l.size(); ++x) out.push_back(open_interval_below(l, x).poset);
  return out;
}

}  // namespace

TEST_CASE("posets reject invalid relations", "[topology]") {
  Poset::OrderMatrix reflexive = Poset::OrderMatrix::Constant(1, 1, true);
  CHECK_THROWS_AS(Poset(reflexive), std::invalid_argument);
  Poset::OrderMatrix gap = Poset::OrderMatrix::Constant(3, 3, false);
  gap(0, 1) = gap(1, 2) = true;
  CHECK_THROWS_AS(Poset(gap), std::invalid_argument);
}

TEST_CASE("order complex examples", "[topology]") {
  const OrderComplex edge(chain(2));
  CHECK(edge.dimension() == 1);
  CHECK(edge.faces(0).size() == 2);
  CHECK(edge.faces(1).size() == 1);
  const OrderComplex points(antichain(20));
  CHECK(points.dimension() == 0);
  CHECK(points.faces(0).size() == 20);
  CHECK(points.facets().size() == 20);
  CHECK(OrderComplex(Poset()).empty());
  CHECK(OrderComplex(chain(4)).facets().size() == 1);
}

TEST_CASE("reduced Betti numbers", "[topology]") {
  Poset::OrderMatrix cone = Poset::OrderMatrix::Constant(4, 4, false);
  cone(0, 3) = cone(1, 3) = cone(2, 3) = true;
  const auto bc = reduced_betti(Poset(cone));
  CHECK(bc.top() == -2);

  const auto b20 = reduced_betti(antichain(20));
  CHECK(b20.reduced(0) == 19);
  CHECK(b20.unreduced(0) == 20);

  const auto l = build_lattice(test::corpus("a63-proj"));
  const auto b = reduced_betti(truncation(l, 2).poset);
  CHECK(b.unreduced(0) == 1);
  CHECK(b.unreduced(1) == 26);
  CHECK(b.top() == 1);

  CHECK(reduced_betti(Poset()).reduced(-1) == 1);
}

TEST_CASE("reduced Euler characteristic", "[topology]") {
  CHECK(euler_char_reduced(OrderComplex(Poset())) == -1);
  CHECK(euler_char_reduced(OrderComplex(chain(2))) == 0);
  const auto planar = build_lattice(test::corpus("planar"));
  int crossing = -1;
  for (int x = 1; x < planar.size(); ++x)
    if (open_interval_below(planar, x).poset.size() == 2) crossing = x;
  REQUIRE(crossing > 0);
  CHECK(euler_char_reduced(OrderComplex(open_interval_below(planar, crossing).poset)) == 1);
  CHECK(mobius(planar)(0, crossing) == 1);
}

TEST_CASE("Cohen-Macaulay lattices", "[topology]") {
  for (const auto& name : {"boolean-2", "boolean-3", "boolean-4", "boolean-proj-3", "a42", "a42-proj"}) {
    INFO(name);
    CHECK(is_rationally_cm(build_lattice(test::corpus(name))).cohen_macaulay);
  }
  const auto res = is_rationally_cm(build_lattice(test::corpus("planar")));
  CHECK_FALSE(res.cohen_macaulay);
  CHECK(res.failing_interval.has_value());
}

TEST_CASE("Euler-Poincare on corpus complexes", "[topology][property]") {
  for (const auto& name : test::corpus_names()) {
    for (const auto& p : corpus_posets(name)) {
      const OrderComplex k(p);
      const auto b = reduced_betti(k);
      std::int64_t alternating = 0;
      for (int i = -1; i <= b.top(); ++i) alternating += (i % 2 == 0 ? 1 : -1) * b.reduced(i);
      REQUIRE(euler_char_reduced(k) == alternating);
      // Face-count form of the same identity, including the empty face.
      std::int64_t faces = -1;
      for (int i = 0; i <= k.dimension(); ++i) faces += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(k.faces(i).size());
      REQUIRE(faces == alternating);
      for (int i = 0; i <= b.top(); ++i) REQUIRE(b.reduced(i) <= static_cast<std::int64_t>(k.faces(i).size()));
    }
  }
}

TEST_CASE("Betti numbers of random posets match chain counts", "[topology][property]") {
  auto rng = test::seeded_rng(9);
  std::uniform_int_distribution<int> size(1, 7);
  std::bernoulli_distribution edge(0.35);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = size(rng);
    // A random DAG on 0..n-1 ordered by index, then transitively closed.
    Poset::OrderMatrix less = Poset::OrderMatrix::Constant(n, n, false);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) less(i, j) = edge(rng);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (less(i, k) && less(k, j)) less(i, j) = true;
    const Poset p(less);
    const OrderComplex k(p);
    const auto b = reduced_betti(k);
    std::int64_t alternating = 0;
    for (int i = -1; i <= b.top(); ++i) alternating += (i % 2 == 0 ? 1 : -1) * b.reduced(i);
    REQUIRE(euler_char_reduced(k) == alternating);
    for (int i = -1; i <= b.top(); ++i) REQUIRE(b.reduced(i) >= 0);
    // Adding a maximum makes the complex a cone.
    Poset::OrderMatrix coned = Poset::OrderMatrix::Constant(n + 1, n + 1, false);
    coned.topLeftCorner(n, n) = less;
    coned.col(n).head(n).setConstant(true);
    REQUIRE(reduced_betti(Poset(coned)).top() == -2);
  }
}
