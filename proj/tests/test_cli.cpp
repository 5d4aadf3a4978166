#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <nlohmann/json.hpp>

#include "arrangements/cli.hpp"
#include "support.hpp"

using namespace arr;
using Catch::Matchers::ContainsSubstring;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  for (auto& a : args)
    if (a.size() > 5 && a.ends_with(".json") && a.find('/') == std::string::npos) a = (test::corpus_dir() / a).string();
  const int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("charpoly prints the characteristic polynomial first", "[cli]") {
  const auto r = run({"charpoly", "a63.json"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "-26*t^2 + 45*t^3 - 20*t^4 + t^6");
  CHECK(first_line(run({"charpoly", "a63-proj.json"}).out) == "26*t^2 - 19*t^3 + t^4 + t^5");
}

TEST_CASE("charpoly --expect reports both polynomials", "[cli]") {
  const auto r = run({"--format", "json", "charpoly", "planar-proj.json", "--expect", "-2,-1"});
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["polynomial"]["text"] == "-2 - t + t^2");
  CHECK(j["expected"]["text"] == "-2 - t");
  CHECK(j["matches_expected"] == false);
  CHECK(run({"charpoly", "planar-proj.json", "--expect", "-2,-1,1"}).code == 0);
  CHECK(run({"charpoly", "planar-proj.json", "--expect", "a,b"}).code == 2);
}

TEST_CASE("verify and check exit codes", "[cli]") {
  CHECK(run({"verify", "a63-proj.json", "--q", "2", "--smax", "2"}).code == 0);
  const auto c = run({"check", "planar.json", "--mod-pure", "2"});
  CHECK(c.code == 1);
  CHECK_THAT(c.out, ContainsSubstring("not mod-2-pure"));
  CHECK(run({"check", "boolean-3.json", "--mod-pure", "2", "--cm", "--hereditary"}).code == 0);
  CHECK(run({"check", "d43.json", "--good-prime", "2"}).code == 1);
  CHECK(run({"check", "a53.json", "--good-prime", "5"}).code == 0);
  CHECK(run({"check", "a63.json", "--sign-alternation"}).code == 0);
  CHECK(run({"check", "a64-proj.json", "--mod-m-vanishing", "2"}).code == 0);
}

TEST_CASE("usage errors exit with 2", "[cli]") {
  const auto unknown = run({"frobnicate", "a63.json"});
  CHECK(unknown.code == 2);
  CHECK_THAT(unknown.err, ContainsSubstring("Usage"));
  CHECK(run({}).code == 2);
  CHECK(run({"zeta", "a63.json"}).code == 2);
  CHECK(run({"charpoly", "/nonexistent.json"}).code == 2);
  CHECK(run({"count", "a63.json", "--q", "6"}).code == 2);
  CHECK(run({"count", "lines-f3.json", "--q", "2"}).code == 2);
  CHECK(run({"--cap", "10", "count", "a63.json", "--q", "3"}).code == 2);
  CHECK(run({"check", "a63.json"}).code == 2);
  CHECK(run({"frobenius", "a63.json", "--q", "2", "--mode", "proj-union"}).code == 2);
  CHECK(run({"--format", "xml", "charpoly", "a63.json"}).code == 2);
}

TEST_CASE("commands produce their headline values", "[cli]") {
  CHECK(first_line(run({"zeta", "a63-proj.json", "--q", "2"}).out) == "Z = (1-q^2 t)^25 / ((1-t)(1-q t)(1-q^3 t)^20)");
  CHECK(first_line(run({"count", "a63.json", "--q", "3"}).out) == "90");
  CHECK(first_line(run({"count", "a63.json", "--q", "3", "--mode", "union"}).out) == "639");
  const auto f = run({"frobenius", "a63-proj.json", "--q", "2"});
  CHECK_THAT(f.out, ContainsSubstring("P_4(t) = (1-q t)^10(1-q^2 t)"));
  const auto b = run({"betti", "a63-proj.json"});
  CHECK_THAT(b.out, ContainsSubstring("complex: 1 0 1 10 11 26 20"));
  const auto l = run({"--format", "json", "lattice", "planar.json"});
  CHECK(nlohmann::json::parse(l.out)["size"] == 6);
  CHECK(run({"frobenius", "empty-proj.json", "--q", "3", "--mode", "central-punctured"}).code == 0);
  CHECK(run({"frobenius", "a63-proj.json", "--q", "2", "--mode", "proj-complement"}).code == 0);
}

TEST_CASE("generate emits a loadable arrangement file", "[cli]") {
  const auto r = run({"generate", "--family", "A", "--n", "6", "--k", "3"});
  REQUIRE(r.code == 0);
  CHECK(parse_arrangement_file(r.out) == generate_k_equal(KEqualFamily::A, 6, 3));
  CHECK(run({"generate", "--family", "E", "--n", "6", "--k", "3"}).code == 2);
  CHECK(run({"generate", "--family", "A", "--n", "3", "--k", "5"}).code == 2);
}

TEST_CASE("JSON reports are deterministic across thread counts", "[cli]") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"verify", "a63-proj.json", "--q", "2"},
                                                                {"count", "b43.json", "--q", "3", "--s", "1"},
                                                                {"verify", "planar.json", "--q", "3"}}) {
    auto one = args, four = args;
    one.insert(one.begin(), {"--format", "json", "--threads", "1"});
    four.insert(four.begin(), {"--format", "json", "--threads", "4"});
    CHECK(run(one).out == run(four).out);
    CHECK(run(one).out == run(one).out);
  }
}
