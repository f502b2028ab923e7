#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "csf/io.hpp"

namespace csf {

/// The 6-vertex graph whose X_G is strongly nice but not Schur positive.
Graph strongly_nice_not_schur_positive_graph();

/// Two blocks of a 12-vertex graph (labels 1..12 stored as vertices 0..11)
/// with word 1211, and the expected image under phi (word 1212).
struct WordFixture {
  Graph graph;
  CoveringPair pair;  // (7,5) covers (6,6)
  SemiOrderedStablePartition source;
  SemiOrderedStablePartition image;
};
WordFixture word_fixture();

struct CheckResult {
  std::string name;
  bool passed = false;
  Json detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  Json to_json() const;
  std::string to_text() const;
};

struct VerifyOptions {
  unsigned max_n = 4;         // largest squid parameter for thm41 / thm42
  std::uint64_t seed = 2024;  // random graphs and expansions
  unsigned samples = 1000;    // lemma22 sample count
  bool allow_slow = false;    // squid n = 5, inc(B_4)
};

/// Suite names in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Runs one suite by name, or every suite for "all". Throws
/// std::invalid_argument for an unknown name. Reports contain no timings, so
/// they are byte-stable for fixed options.
std::vector<SuiteReport> run_suites(std::string_view name, const VerifyOptions& options);

}  // namespace csf
