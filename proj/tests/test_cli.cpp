#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "resichain/cli.hpp"
#include "resichain/constructors.hpp"
#include "resichain/json_io.hpp"

using namespace resichain;

namespace {

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int const code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("make piped into check") {
  auto const made = run({"make", "com:1,1"});
  REQUIRE(made.code == 0);
  auto const checked = run({"check"}, made.out);
  REQUIRE(checked.code == 0);
  CHECK(checked.json() ==
        Json{{"commutative", true}, {"idempotent", true}, {"star_involutive", false}, {"admissible", true}});
}

TEST_CASE("make piped into show round-trips every constructor") {
  for (std::string spec : {"go:0", "go:3", "com:0,0", "com:2,1", "com:1,1+go:2", "sum:com:0,0+com:1,0"}) {
    auto const made = run({"make", spec});
    auto const shown = run({"show", "--json"}, made.out);
    REQUIRE(shown.code == 0);
    CHECK(canonical_signature(chain_from_json(shown.json())) == canonical_signature(make_from_spec(spec)));
  }
  auto const table = run({"show", "go:2"});
  CHECK(table.code == 0);
  CHECK(table.out.find("unit e") != std::string::npos);
}

TEST_CASE("classify a generators file") {
  auto const path = std::filesystem::temp_directory_path() / "resichain_gens.json";
  std::ofstream(path) << R"({"generators": ["com:0,0"]})";
  auto const r = run({"classify", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.json() == Json{{"class", "fin:0,0,0"}, {"ap", true}});
  std::filesystem::remove(path);

  auto const no = run({"classify", "go:2"});
  REQUIRE(no.code == 0);
  CHECK(no.json()["ap"] == false);
  CHECK(no.json()["class"].is_null());
  CHECK(!no.json()["witness"].is_null());
}

TEST_CASE("enumerate") {
  auto const r = run({"enumerate", "3", "--commutative", "--idempotent"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["count"] == 2);
  CHECK(r.json()["chains"].size() == 2);
  CHECK(run({"enumerate", "4", "--jobs", "2", "--count"}).json()["count"] ==
        run({"enumerate", "4", "--count"}).json()["count"]);
}

TEST_CASE("module verbs") {
  CHECK(run({"residual", "go:2", "c1", "c2"}).json()["label"] == "c2");
  CHECK(run({"residual", "go:2", "0", "1", "--side", "right"}).code == 0);
  CHECK(run({"decompose", "com:1,1+go:2"}).json()["signature"] == "C(1,1) ⊞ Go_2");
  CHECK(run({"embed", "go:1", "go:3"}).json()["count"] == 3);
  // Onto Go_1 through [b0,a0], and onto the trivial chain.
  CHECK(run({"homs", "com:1,1", "go:1", "--count"}).json()["count"] == 2);
  CHECK(run({"congruences", "com:1,1"}).json()["count"] == 3);
  auto const q = run({"quotient", "com:1,1", "b0", "a0"}).json();
  CHECK(canonical_signature(chain_from_json(q["chain"])) == canonical_signature(go(1)));
  CHECK(run({"words", "subword", "010", "per:01"}).json()["subword"] == true);
  CHECK(run({"words", "leq", "per:001", "per:01"}).json()["leq"] == false);
  CHECK(run({"words", "minimal", "fin:{0}"}).json()["strictly_below"] == "per:0@0");
  CHECK(run({"as-op", "--set", "per:1", "mul", "a:0", "b:0"}).json()["value"] == "a:0");
  CHECK(run({"as-op", "per:0", "ell", "a:0"}).json()["value"] == "b:-1");
  CHECK(run({"as-op", "per:01", "reach", "a:0", "--depth", "1"}).json()["count"] == 3);
  CHECK(run({"pcondition", "com:0,0", "--f", "b0"}).json()["condition"] == "1b");
  CHECK(run({"pcondition"}, R"({"spec": "go:1", "f": "c1"})").json()["condition"] == "2a");
  auto const part = run({"ppartition", "--max-size", "5"}).json();
  CHECK(part["cross_condition_embeddings"] == 0);
  CHECK(part["counts"].size() == 6);
  CHECK(run({"ap", "--class", "fin:1,0,1+e:1"}).json()["ap"] == true);
  CHECK(run({"ap", "com:0,2"}).json()["ap"] == false);
}

TEST_CASE("amalgamate") {
  Json const span = {{"A", "go:1"}, {"B", "go:2"}, {"C", "go:2"}, {"iB", {0, 2}}, {"iC", {1, 2}}};
  auto const r = run({"amalgamate", "--class", "e:w", "--one-sided"}, span.dump());
  REQUIRE(r.code == 0);
  CHECK(r.json()["outcome"] == "Found");
  CHECK(r.json()["amalgam"]["D"]["size"] == 4);
  auto const refuted = run({"amalgamate", "--class", "e:w", "--bound", "3"}, span.dump());
  CHECK(refuted.json()["outcome"] == "BoundExhausted");
  Json const c = {{"A", "com:0,0"}, {"B", "com:1,0"}, {"C", "com:0,1"}, {"iB", {1, 2, 3}}, {"iC", {0, 1, 3}}};
  auto const built = run({"amalgamate", "--constructive"}, c.dump());
  REQUIRE(built.code == 0);
  CHECK(built.json()["verified"] == true);
}

TEST_CASE("verify suites") {
  auto const r = run({"verify", "lemma:embedding-criterion", "--max-size", "4"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["fail"] == 0);
  CHECK(r.json()["pass"].get<int>() > 0);
  CHECK(run({"verify", "--list"}).json().size() == 12);
  auto const seeded = run({"verify", "star-involution", "--seed", "42"});
  CHECK(seeded.out == run({"verify", "star-involution", "--seed", "42"}).out);
}

TEST_CASE("errors and exit codes") {
  auto const unknown = run({"frobnicate"});
  CHECK(unknown.code == 2);
  CHECK(!unknown.err.empty());
  CHECK(run({}).code == 2);
  CHECK(run({"enumerate"}).code == 2);
  CHECK(run({"words", "subword", "0"}).code == 2);

  auto const bad = run({"make", "go:x"});
  CHECK(bad.code == 1);
  CHECK(bad.json()["error"] == "ParseError");
  auto const table = run({"check"}, R"({"size":2,"unit":1,"mult":[[1,0],[0,1]]})");
  CHECK(table.code == 1);
  CHECK(table.json()["error"] == "NotMonotone");
  CHECK(table.json()["witness"].is_array());
  CHECK(run({"check"}, "{not json").json()["error"] == "ParseError");
  CHECK(run({"verify", "nonsense"}).json()["error"] == "UnknownSuite");
  CHECK(run({"decompose", "com:0,0+go:1+com:0,0"}).json()["error"] == "NotAdmissible");
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("table format") {
  auto const r = run({"check", "com:0,0", "--format", "table"});
  CHECK(r.code == 0);
  CHECK(r.out.find("commutative: true") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  for (std::vector<std::string> args : {std::vector<std::string>{"enumerate", "5", "--commutative"},
                                        std::vector<std::string>{"congruences", "com:2,1+go:1"},
                                        std::vector<std::string>{"ap", "go:2"}})
    CHECK(run(args).out == run(args).out);
}
