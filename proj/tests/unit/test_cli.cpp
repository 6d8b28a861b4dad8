#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "hoffgraph/canonical.hpp"
#include "hoffgraph/graph_io.hpp"
#include "hoffgraph/spectra.hpp"

using namespace hoffgraph;

namespace {

struct Result {
  int code = 0;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "hoffgraph");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("hoffgraph_cli_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("lower-bound graph construction") {
    const auto r = run({"construct", "lower-bound-graph", "--lambda", "2", "--a", "3", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const auto g = graph_from_json(j["graph"]);
    CHECK(g.order() == 16);
    CHECK(g.degree(0) == 6);
    CHECK(second_largest(g) == doctest::Approx(2.0));
    CHECK(j["certificate"]["verified"] == true);

    const auto text = run({"construct", "lower-bound-graph", "--lambda", "2", "--a", "3"});
    CHECK(text.code == 0);
    CHECK(parse_graph(text.out).order() == 16);
  }

  TEST_CASE("known v") {
    const auto r = run({"bounds", "known-v", "--k", "11", "--lambda", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "24\n");
    const auto interval = nlohmann::json::parse(run({"bounds", "known-v", "--k", "5", "--lambda", "1"}).out);
    CHECK(interval["kind"] == "interval");
    CHECK(interval["lower"] == 12);
  }

  TEST_CASE("spectrum") {
    const auto r = run({"spectrum", "-"}, "4 0\n");
    CHECK(r.code == 0);
    CHECK(r.out == "0^4\n");
    const auto j = nlohmann::json::parse(run({"spectrum", "-", "--json"}, "4 0\n").out);
    CHECK(j["eigenvalues"].size() == 1);
    CHECK(j["eigenvalues"][0]["value"] == 0.0);
    CHECK(j["eigenvalues"][0]["multiplicity"] == 4);
    const auto pet = run({"spectrum", "-", "--json"}, to_graph6(petersen_graph()) + "\n");
    CHECK(nlohmann::json::parse(pet.out)["eigenvalues"].size() == 3);
  }

  TEST_CASE("Hoffman subcommands") {
    const auto file = temp_file("fsf.json", R"({"order":4,"edges":[[0,1],[1,2],[2,3]],"fat":[0,3]})");
    const auto lmin = run({"hoffman", "lambda-min", file});
    CHECK(lmin.code == 0);
    CHECK(std::stod(lmin.out) == doctest::Approx(-2.0));
    const auto fat = run({"hoffman", "fatten", file, "--p", "3", "--format", "graph6"});
    CHECK(fat.code == 0);
    CHECK(from_graph6(fat.out.substr(0, fat.out.size() - 1)).order() == 8);
    CHECK(run({"hoffman", "fatten", file}).code == 2);
    const auto bad = temp_file("bad.json", R"({"order":3,"edges":[[0,1]],"fat":[0,1]})");
    CHECK(run({"hoffman", "lambda-min", bad}).code == 2);
  }

  TEST_CASE("associate") {
    const auto r = run({"associate", "-", "--m", "2", "--n", "9", "--json"}, to_graph6(complete_graph(10)) + "\n");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["hoffman"]["fat"].size() == 1);
    CHECK(run({"associate", "-", "--m", "2", "--n", "8"}, to_graph6(complete_graph(10)) + "\n").code == 2);
  }

  TEST_CASE("bounds subcommands") {
    CHECK(run({"bounds", "mu-bound", "--lambda", "2"}).out == "8\n");
    const auto t = nlohmann::json::parse(run({"bounds", "thresholds", "--lambda", "3/2"}).out);
    CHECK(t["t_prime"] == 2);
    CHECK(t["m_prime"] == 2);
    const auto r = nlohmann::json::parse(run({"bounds", "ramsey", "--s", "3", "--t", "4", "--brute-force"}).out);
    CHECK(r["table"]["exact"] == 9);
    CHECK(run({"bounds", "thresholds", "--lambda", "x"}).code == 2);
  }

  TEST_CASE("search") {
    const auto r = run({"search", "--k", "3", "--lambda", "0", "--n-max", "10", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["exact_v"] == 6);
    CHECK(j["extremal_graphs"].size() == 1);
    CHECK(run({"search", "--k", "6", "--lambda", "1", "--n-max", "12"}).code == 3);
  }

  TEST_CASE("verify") {
    const auto r = run({"verify", "--suite", "spectra", "--json"});
    CHECK(r.code == 0);
    CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
  }

  TEST_CASE("usage errors and malformed input") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"spectrum", "-"}, "C~~\n").code == 2);
    CHECK(run({"spectrum", "/nonexistent/graph.txt"}).code != 0);
    CHECK(run({"spectrum", "-", "--json", "--format", "graph6"}, "C~\n").code == 2);
    const auto e = run({"spectrum", "-"}, "3 1\n0 7\n");
    CHECK(e.code == 2);
    CHECK_FALSE(e.err.empty());
  }

  TEST_CASE("emitted graphs re-ingest to the same isomorphism class") {
    for (const auto& fmt : {"edges", "json", "graph6"}) {
      const auto lb = run({"construct", "lower-bound-graph", "--lambda", "1", "--a", "4", "--format", fmt});
      REQUIRE(lb.code == 0);
      const auto g = parse_graph(lb.out);
      CHECK(canonical_certificate(g) == canonical_certificate(complement(line_graph(complete_bipartite(2, 5)))));

      const auto kt = run({"construct", "k-tilde", "--m", "3", "--format", fmt});
      CHECK(canonical_certificate(parse_graph(kt.out)) == canonical_certificate(k_tilde(3)));

      const auto co = run({"construct", "complement", "--input", "-", "--format", fmt}, to_graph6(petersen_graph()) + "\n");
      REQUIRE(co.code == 0);
      const auto again = run({"construct", "complement", "--input", "-", "--format", fmt}, co.out);
      REQUIRE(again.code == 0);
      CHECK(canonical_certificate(parse_graph(again.out)) == canonical_certificate(petersen_graph()));
    }
  }
}
