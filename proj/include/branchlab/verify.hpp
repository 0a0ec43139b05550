#ifndef BRANCHLAB_VERIFY_HPP
#define BRANCHLAB_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "branchlab/trace_monoid.hpp"
#include "branchlab/tree_engine.hpp"
#include "branchlab/words.hpp"

namespace branchlab {

// Randomized and exhaustive property suites; the CLI `verify` subcommand
// and the acceptance binary are both built on these.
struct VerifyConfig {
  int d = 3;
  uint64_t seed = 1;
  size_t samples = 2000;      // per randomized property
  size_t max_word_length = 12;
  int max_level = 3;
  size_t search_states = 20000;
  size_t bfs_cap = 2000;
  bool parallel = true;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  size_t checks = 0;
  std::string detail; // first failure or summary
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
  size_t total_checks() const;
};

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const VerifyConfig& cfg);
std::vector<SuiteResult> run_all_suites(const VerifyConfig& cfg);

// Deterministic word generators shared by suites and tests.
class WordSampler {
public:
  WordSampler(int d, uint64_t seed) : d_(d), state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  uint64_t next_u64();
  uint64_t below(uint64_t n); // uniform-ish in [0, n)
  GroupWord random_word(size_t max_len);
  GroupWord random_positive_word(size_t max_len);
  TraceWord random_trace(size_t len);

  // A word verified (by direct permutation computation) to lie in
  // St(k-hat), built from structured blocks; k <= 3.
  GroupWord random_stabilizer_word(const WreathSystem& sys, int k, size_t max_blocks = 6);

private:
  int d_;
  uint64_t state_;
};

} // namespace branchlab

#endif
