#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "arrangements/io.hpp"
#include "support.hpp"

using namespace arr;
using Catch::Matchers::ContainsSubstring;

namespace {

std::string parse_error(const std::string& text) {
  try {
    parse_arrangement_file(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("parse two parallel lines", "[io]") {
  const auto a = parse_arrangement_file(R"({"ring":"Z","space":{"kind":"affine","n":2},"subspaces":[[[0,1,0]],[[-1,1,0]]]})");
  CHECK(a.ring().is_integers());
  CHECK(a.ambient() == Ambient::affine);
  CHECK(a.n() == 2);
  REQUIRE(a.size() == 2);
  CHECK(a.canonical(0).dim == 1);
  CHECK(a.canonical(1).dim == 1);
  CHECK(intersect(a.canonical(0), a.canonical(1)).empty);
}

TEST_CASE("parse errors are localized", "[io]") {
  CHECK_THAT(parse_error(R"({"ring":"Z","space":{"kind":"affine","n":2},"subspaces":[[[0,1,0]],[[0,1]]]})"),
             ContainsSubstring("subspace 1") && ContainsSubstring("/subspaces/1/0"));
  CHECK_THAT(parse_error(R"({"ring":"Z","space":{"kind":"affine","n":2},)"), ContainsSubstring("malformed JSON"));
  CHECK_THAT(parse_error(R"({"ring":{"prime":4},"space":{"kind":"affine","n":2},"subspaces":[]})"),
             ContainsSubstring("/ring/prime"));
  CHECK_THAT(parse_error(R"({"ring":"Z","space":{"kind":"projective","n":3},"subspaces":[[[1,1,0,0]]]})"),
             ContainsSubstring("c0 = 0"));
  CHECK_THAT(parse_error(R"({"ring":"Z","space":{"kind":"affine","n":0},"subspaces":[]})"), ContainsSubstring("/space/n"));
  CHECK_THAT(parse_error(R"({"ring":"Z","space":{"kind":"affine","n":2}})"), ContainsSubstring("subspaces"));
  CHECK_THAT(parse_error(R"({"ring":"Z","space":{"kind":"affine","n":1},"subspaces":[[[0,1]],[[0,2]]]})"),
             ContainsSubstring("subspace 1"));
  CHECK_THAT(parse_error(R"({"ring":"Z","space":{"kind":"affine","n":1},"subspaces":[[[0,"x"]]]})"),
             ContainsSubstring("/subspaces/0/0/1"));
}

TEST_CASE("F_p coefficients are reduced at load", "[io]") {
  const auto a = parse_arrangement_file(R"({"ring":{"prime":3},"space":{"kind":"affine","n":2},"subspaces":[[[-1,4,6]]]})");
  CHECK(a.subspaces()[0][0].coeffs == std::vector<std::int64_t>{2, 1, 0});
}

TEST_CASE("generated files round-trip", "[io]") {
  const auto a63 = generate_k_equal(KEqualFamily::A, 6, 3);
  CHECK(parse_arrangement_file(serialize_arrangement(a63)) == a63);
  for (const auto& name : test::corpus_names()) {
    const auto a = test::corpus(name);
    INFO(name);
    CHECK(parse_arrangement_file(serialize_arrangement(a)) == a);
  }
}

TEST_CASE("corpus k-equal files match the generator", "[io]") {
  CHECK(test::corpus("a63") == generate_k_equal(KEqualFamily::A, 6, 3));
  CHECK(test::corpus("a53") == generate_k_equal(KEqualFamily::A, 5, 3));
  CHECK(test::corpus("d43") == generate_k_equal(KEqualFamily::D, 4, 3));
  CHECK(test::corpus("b43") == generate_k_equal(KEqualFamily::B, 4, 3));
  CHECK(test::corpus("a63-proj") == projectivize(generate_k_equal(KEqualFamily::A, 6, 3)));
}

TEST_CASE("load errors carry the path", "[io]") {
  CHECK_THROWS_WITH(load_arrangement_file("/nonexistent/file.json"), ContainsSubstring("/nonexistent/file.json"));
}
