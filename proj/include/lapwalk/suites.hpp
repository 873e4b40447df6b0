#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lapwalk/graph.hpp"

namespace lapwalk {

/// Tabular result of a named verification suite. `passed` is the conjunction
/// of the per-row checks; rows flagged informational never fail the suite.
struct SuiteReport {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
  bool passed = true;
};

struct SuiteOptions {
  int n_max = 10;
  double t_max = 0.0;  // 0 = suite default
  double tol = 1e-9;
  std::uint64_t seed = 20240601;
  int corpus_size = 20;
};

/// Named small graphs plus seeded random connected graphs of order 3..10.
std::vector<std::pair<std::string, Graph>> make_corpus(int count, std::uint64_t seed);

/// Small graphs H used for the K2 + H conical-pair scans.
std::vector<std::pair<std::string, Graph>> connected_cone_bases();

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace lapwalk
