#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hoffgraph/hoffman.hpp"

namespace hoffgraph {

struct VerifyOptions {
  unsigned threads = 0;
  std::uint64_t seed = 20240607;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string suite;
  bool passed = false;
  double seconds = 0;
  /// Wall-clock budget for the check.
  double budget_seconds = 0;
  nlohmann::json evidence = nlohmann::json::object();
};

struct Criterion {
  int id;
  std::string name;
  std::string suite;
  double budget_seconds;
  std::function<nlohmann::json(const VerifyOptions&, bool&)> run;
};

/// The twelve acceptance checks, in order.
const std::vector<Criterion>& criteria();

/// Suites: all, spectra, hoffman, association, bounds, search.
bool is_known_suite(const std::string& suite);
std::vector<const Criterion*> criteria_in_suite(const std::string& suite);

/// Runs one check; exceptions are caught and reported as failures.
CriterionResult run_criterion(const Criterion& c, const VerifyOptions& opts = {});

nlohmann::json to_json(const CriterionResult& r);

/// Small Hoffman graphs (at most 3 fat and 4 slim vertices) used by the
/// fattening and round-trip checks.
std::vector<HoffmanGraph> hoffman_catalog();

/// All graphs on n vertices up to isomorphism (n <= 7), by brute force.
std::vector<Graph> all_graphs_up_to_isomorphism(std::size_t n);

}  // namespace hoffgraph
