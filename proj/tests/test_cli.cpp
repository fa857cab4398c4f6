#include <doctest.h>

#include <sstream>

#include "figures.hpp"
#include "tsscpp/cli.hpp"
#include "tsscpp/json_io.hpp"

using namespace tsscpp;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Outcome o;
  o.code = cli::run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

}  // namespace

TEST_CASE("enumerate") {
  const auto count = run({"enumerate", "--family", "boolean", "--n", "3", "--count-only"});
  CHECK(count.code == cli::kExitOk);
  CHECK(count.out == "7\n");
  const auto list = run({"enumerate", "--family", "magog", "--n", "3"});
  REQUIRE(list.code == cli::kExitOk);
  const Json j = Json::parse(list.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 7);
  for (const auto& item : j) CHECK(std::holds_alternative<MagogTriangle>(parse_object(item)));
  const auto lines = run({"enumerate", "--family", "permutation", "--n", "3", "--jsonl"});
  std::istringstream in(lines.out);
  std::string line;
  int seen = 0;
  while (std::getline(in, line)) {
    CHECK(std::holds_alternative<Permutation>(parse_object(std::string_view(line))));
    ++seen;
  }
  CHECK(seen == 6);
}

TEST_CASE("enumerate rejects bad input") {
  CHECK(run({"enumerate", "--family", "nope", "--n", "3"}).code == cli::kExitUsage);
  CHECK(run({"enumerate", "--family", "asm", "--n", "0"}).code == cli::kExitUsage);
  CHECK(run({"enumerate", "--family", "asm", "--n", "9", "--count-only"}).code == cli::kExitUsage);
  CHECK(run({"enumerate", "--family", "asm"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
}

TEST_CASE("convert the worked example") {
  const auto r = run({"convert", "--from", "permutation", "--to", "boolean", "463512"});
  REQUIRE(r.code == cli::kExitOk);
  const auto b = std::get<BooleanTriangle>(parse_object(std::string_view(r.out)));
  CHECK(b.rows() == figures::kWorkedBoolean);
  const auto back = run({"convert", "--from", "boolean", "--to", "permutation", r.out});
  REQUIRE(back.code == cli::kExitOk);
  CHECK(format_permutation(std::get<Permutation>(parse_object(std::string_view(back.out)))) == "463512");
  const auto mono = run({"convert", "--from", "permutation", "--to", "monotone", "463512"});
  CHECK(std::get<MonotoneTriangle>(parse_object(std::string_view(mono.out))).rows() == figures::kWorkedMonotone);
}

TEST_CASE("convert across the TSSCPP side") {
  const std::string magog = to_json(validate_magog(figures::kMagog3[3])).dump();
  const auto r = run({"convert", "--from", "magog", "--to", "boolean", magog});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(std::get<BooleanTriangle>(parse_object(std::string_view(r.out))).rows() == figures::kBoolean3[3]);
  const auto t = run({"convert", "--from", "magog", "--to", "tsscpp", magog});
  REQUIRE(t.code == cli::kExitOk);
  CHECK(std::holds_alternative<PlanePartition>(parse_object(std::string_view(t.out))));
}

TEST_CASE("convert refuses non-permutations across sides and bad input") {
  const std::string bold = to_json(validate_boolean(figures::kBoolean3[3])).dump();
  CHECK(run({"convert", "--from", "boolean", "--to", "asm", bold}).code == cli::kExitUsage);
  CHECK(run({"convert", "--from", "boolean", "--to", "magog", "463512"}).code == cli::kExitUsage);
  CHECK(run({"convert", "--from", "permutation", "--to", "boolean", "4635"}).code == cli::kExitUsage);
  const auto bad = run({"convert", "--from", "boolean", "--to", "magog",
                        R"({"kind":"boolean_triangle","n":3,"rows":[[1],[0,1]]})"});
  CHECK(bad.code == cli::kExitUsage);
  CHECK(bad.err.find("error") != std::string::npos);
  CHECK(run({"convert", "--from", "boolean", "--to", "magog", "{not json"}).code == cli::kExitUsage);
}

TEST_CASE("stats of the worked example") {
  const auto r = run({"stats", "463512"});
  REQUIRE(r.code == cli::kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["stats"]["zeros"] == 11);
  CHECK(j["stats"]["inversion_number"] == 11);
  CHECK(j["stats"]["last_row_zeros"] == 4);
  CHECK(j["stats"]["lowest_one_last_diagonal"] == 1);
}

TEST_CASE("dist") {
  const auto r = run({"dist", "--family", "permutation-boolean", "--n", "3", "--statistic", "zeros"});
  REQUIRE(r.code == cli::kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["counts"] == Json{{"0", 1}, {"1", 2}, {"2", 2}, {"3", 1}});
  const auto a = run({"dist", "--family", "asm", "--n", "3", "--statistic", "negative-ones"});
  CHECK(Json::parse(a.out)["counts"] == Json{{"0", 6}, {"1", 1}});
  CHECK(run({"dist", "--family", "asm", "--n", "3", "--statistic", "zero-then-one"}).code == cli::kExitUsage);
  CHECK(run({"dist", "--family", "asm", "--n", "3", "--statistic", "bogus"}).code == cli::kExitUsage);
}

TEST_CASE("poset output") {
  const auto j = run({"poset", "--name", "Tn", "--n", "3"});
  REQUIRE(j.code == cli::kExitOk);
  const Json doc = Json::parse(j.out);
  CHECK(doc["elements"].size() == 7);
  CHECK(doc["covers"].size() == 8);
  const auto dot = run({"poset", "--name", "weak", "--n", "3", "--out", "dot"});
  REQUIRE(dot.code == cli::kExitOk);
  CHECK(dot.out.find("digraph") != std::string::npos);
  CHECK(run({"poset", "--name", "nope", "--n", "3"}).code == cli::kExitUsage);
}

TEST_CASE("poset-check") {
  const auto ok = run({"poset-check", "--claim", "thm4.2", "--n", "3"});
  CHECK(ok.code == cli::kExitOk);
  CHECK(Json::parse(ok.out)["passed"] == true);
  const auto witness = run({"poset-check", "--claim", "prop-nonlattice", "--n", "4"});
  CHECK(witness.code == cli::kExitOk);
  CHECK(witness.out.find("1324") != std::string::npos);
  CHECK(run({"poset-check", "--claim", "thm0.0", "--n", "3"}).code == cli::kExitUsage);
}

TEST_CASE("verify-all") {
  const auto r = run({"verify-all", "--n", "3"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("ALL PASS") != std::string::npos);
  CHECK(r.out.find("FAIL ") == std::string::npos);
  const auto j = run({"verify-all", "--n", "2", "--json"});
  CHECK(j.code == cli::kExitOk);
  CHECK(j.out.find('{') != std::string::npos);
  CHECK(run({"verify-all", "--n", "0"}).code == cli::kExitUsage);
}
