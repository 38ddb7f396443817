#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "equiarbor/catalog.hpp"
#include "equiarbor/cli.hpp"
#include "equiarbor/errors.hpp"
#include "equiarbor/generators.hpp"
#include "equiarbor/rational.hpp"
#include "equiarbor/survey.hpp"

using namespace equiarbor;
using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run_command(args, out, err);
  return {status, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("equiarbor_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("fxy prints the bare fraction") {
  const Run r = run({"fxy", "5", "1", "1"});
  CHECK(r.status == kExitOk);
  CHECK(r.out == "3/7\n");
  const Run j = run({"--format", "json", "fxy", "5", "1", "1"});
  CHECK(json::parse(j.out)["value"] == "3/7");
  CHECK(run({"fxy", "5", "9", "1"}).status == kExitUsage);
}

TEST_CASE("analyze reports Petersen") {
  const Run r = run({"analyze", "--family", "petersen"});
  REQUIRE(r.status == kExitOk);
  const json doc = json::parse(r.out);
  CHECK(doc["equiarboreal"] == true);
  CHECK(doc["omega"] == "3/5");
  CHECK(doc["lambda"] == 3);
  CHECK(doc["godsilBound"]["bound"] == "5/3");

  const std::string file = write_temp("k4.g6", "C~\n");
  const json k4 = json::parse(run({"analyze", file}).out);
  CHECK(k4["omega"] == "1/2");
  CHECK(run({"analyze", "--graph6", "C"}).status == kExitUsage);
  CHECK(run({"analyze", "/nonexistent/graph"}).status == kExitUsage);
}

TEST_CASE("verify subcommands") {
  CHECK(run({"verify", "claims", "--k-range", "7..40"}).status == kExitOk);
  CHECK(run({"verify", "kirchhoff", "--k-range", "3..8"}).status == kExitOk);
  const Run c = run({"verify", "constants"});
  CHECK(c.status == kExitOk);
  CHECK(json::parse(c.out)["passed"] == true);
  CHECK(run({"verify", "claims", "--k-range", "3..9"}).status == kExitUsage);
  CHECK(run({"verify", "nothing"}).status == kExitUsage);
}

TEST_CASE("resist and transform") {
  const std::string net = write_temp(
      "c4w.json", R"({"vertices":4,"edges":[{"u":0,"v":1,"r":"2/3"},{"u":2,"v":3,"r":"2/3"},)"
                  R"({"u":0,"v":2,"r":"1"},{"u":1,"v":3,"r":"1"}]})");
  const Run r = run({"resist", net, "0", "2"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("7/10") != std::string::npos);
  const Run t = run({"transform", net, "--eliminate", "1", "3"});
  CHECK(t.status == kExitOk);
  const json doc = json::parse(t.out);
  CHECK(doc["network"]["edges"][0]["r"] == "7/10");
  const Run b = run({"transform", "--bipartite", "2", "3"});
  CHECK(b.status == kExitOk);
  CHECK(b.out.find("-1/6") != std::string::npos);
  const std::string graph = write_temp("c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  const Run rg = run({"resist", graph, "0", "1", "--method", "tree-ratio"});
  CHECK(rg.out.find("4/5") != std::string::npos);
}

TEST_CASE("cut, matching and scheme commands") {
  const json cut = json::parse(run({"cut", "--family", "petersen", "--enumerate"}).out);
  CHECK(cut["lambda"] == 3);
  const json m = json::parse(run({"matching", "--family", "cycle", "--params", "5"}).out);
  CHECK(m["hasPerfectMatching"] == false);
  const Run s = run({"scheme", "--family", "petersen", "--verify-godsil"});
  CHECK(s.status == kExitOk);
  const Run prism = run({"scheme", "--family", "triangular_prism"});
  CHECK(prism.status == kExitOk);  // a negative answer, not a counterexample
  CHECK(json::parse(prism.out)["verification"]["violation"]["axiom"] == "iv");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).status == kExitUsage);
  CHECK(run({"bogus"}).status == kExitUsage);
  CHECK(run({"fxy", "5"}).status == kExitUsage);
  CHECK(run({"--format", "xml", "fxy", "5", "1", "1"}).status == kExitUsage);
  CHECK(run({"analyze", "--family", "johnson", "--params", "3,5"}).status == kExitUsage);
}

TEST_CASE("survey of manifests") {
  const std::string prism = write_temp(
      "prism.json", R"([{"name":"prism","format":"generator","payload":"triangular_prism","negativeControl":true}])");
  const Run r = run({"--deterministic", "survey", prism});
  CHECK(r.status == kExitOk);
  const json doc = json::parse(r.out);
  const json& e = doc["entries"][0];
  CHECK(e["equiarboreal"] == false);
  CHECK(e["mainTheoremPass"] == "skipped");
  CHECK(e["status"] == "pass");
  CHECK(!doc.contains("generatedAt"));

  const std::string empty = write_temp("empty.json", "[]");
  const Run er = run({"survey", empty});
  CHECK(er.status == kExitOk);
  CHECK(json::parse(er.out)["summary"]["total"] == 0);

  const std::string broken = write_temp(
      "broken.json", R"([{"name":"bad","format":"graph6","payload":"C"},{"name":"k4","format":"graph6","payload":"C~"}])");
  const Run br = run({"--deterministic", "survey", broken});
  CHECK(br.status == kExitCounterexample);
  const json bd = json::parse(br.out);
  CHECK(bd["entries"][0]["status"] == "fail");
  CHECK(bd["entries"][1]["status"] == "pass");
  CHECK(bd["summary"]["failed"] == 1);

  // a non-equiarboreal graph that is not a declared control is only skipped
  const std::string plain = write_temp(
      "plain.json", R"([{"name":"prism","format":"generator","payload":"triangular_prism"}])");
  CHECK(json::parse(run({"survey", plain}).out)["entries"][0]["status"] == "skipped");
  CHECK(run({"survey", write_temp("garbage.json", "{")}).status == kExitUsage);
}

TEST_CASE("default catalog survey is deterministic") {
  const auto catalog = default_catalog();
  CHECK(catalog.size() >= 12);
  const std::string one = run({"--deterministic", "--jobs", "1", "survey"}).out;
  const std::string four = run({"--deterministic", "--jobs", "4", "survey"}).out;
  CHECK(one == four);
  const json doc = json::parse(one);
  CHECK(doc["summary"]["failed"] == 0);
  CHECK(doc["summary"]["total"] == catalog.size());
  for (const json& e : doc["entries"]) {
    if (!e["omega"].is_string()) continue;
    const std::string omega = e["omega"];
    CHECK(parse_rational(omega) > 0);
    CHECK(to_string(parse_rational(omega)) == omega);
  }
}

TEST_CASE("catalog entries load") {
  for (const ManifestItem& item : default_catalog()) {
    const GraphCatalogEntry e = load_entry(item);
    CHECK(e.graph.vertex_count() > 0);
    if (item.expected_regularity) CHECK(e.graph.regularity() == item.expected_regularity);
  }
  ManifestItem wrong{"c5", Provenance::Generator, "cycle 5", 3, false, false};
  CHECK_THROWS(load_entry(wrong));
  CHECK(parse_manifest(json(std::vector<json>{to_json(wrong)}).dump()).at(0).payload == "cycle 5");
}

TEST_CASE("survey keeps manifest order with many workers") {
  std::vector<ManifestItem> items;
  for (int n = 3; n < 15; ++n) items.push_back({"C" + std::to_string(n), Provenance::Generator, "cycle " + std::to_string(n)});
  const SurveyReport r = survey(items, {8, kDefaultEnumerationLimit});
  REQUIRE(r.entries.size() == items.size());
  for (std::size_t i = 0; i < items.size(); ++i) CHECK(r.entries[i].graph_name == items[i].name);
  CHECK(r.summary.passed == items.size());
}
