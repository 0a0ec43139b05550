#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "branchlab/gd_presets.hpp"
#include "branchlab/parallel.hpp"
#include "branchlab/verify.hpp"

using namespace branchlab;

TEST_CASE("flat and recursive level permutations are identical") {
  for (int d : {3, 5}) {
    WreathSystem sys = gd_system(d);
    WordSampler rng(d, 77);
    int k = d == 3 ? 7 : 4;
    for (int it = 0; it < 8; ++it) {
      GroupWord w = rng.random_word(12);
      LevelPermutation rec = level_perm(sys, w, k);
      LevelPermutation flat = par::level_perm_flat_serial(sys, w, k);
      LevelPermutation par_ = par::level_perm_flat_parallel(sys, w, k);
      CHECK(rec.map == flat.map);
      CHECK(flat.map == par_.map);
    }
  }
}

TEST_CASE("batch identity kernels agree and respect the memo contract") {
  WreathSystem sys = gd_system(5);
  WordSampler rng(5, 78);
  std::vector<GroupWord> words;
  for (int it = 0; it < 600; ++it) words.push_back(rng.random_word(10));
  words.push_back(GroupWord{});
  words.push_back(xi(5, 1).word.pow(2));
  words.push_back(xi(5, 1).word);
  auto serial = par::batch_is_identity_serial(sys, words);
  auto parallel = par::batch_is_identity_parallel(sys, words);
  CHECK(serial == parallel);
  CHECK(serial[words.size() - 3] == 1);
  CHECK(serial[words.size() - 2] == 1);
  CHECK(serial[words.size() - 1] == 0);
  // running the parallel kernel twice over a warm memo is stable
  CHECK(par::batch_is_identity_parallel(sys, words) == serial);
}

TEST_CASE("trace/tree comparison kernels agree and find no discrepancies") {
  WreathSystem sys = gd_system(5);
  WordSampler rng(5, 79);
  std::vector<TraceWord> words;
  for (int it = 0; it < 80; ++it) words.push_back(rng.random_trace(1 + rng.below(4)));
  uint64_t serial = par::trace_tree_discrepancies_serial(sys, words);
  uint64_t parallel = par::trace_tree_discrepancies_parallel(sys, words);
  CHECK(serial == parallel);
  CHECK(serial == 0);
}

TEST_CASE("growth kernels agree") {
  for (int d : {3, 5, 7})
    for (int n = 0; n <= 8; ++n)
      CHECK(par::growth_count_serial(d, n) == par::growth_count_parallel(d, n));
}

TEST_CASE("thread count is reported") { CHECK(par::hardware_threads() >= 1); }

TEST_CASE("concurrent identity queries on one shared memo agree with serial") {
  WreathSystem shared = gd_system(3);
  WordSampler rng(3, 80);
  std::vector<GroupWord> words;
  for (int it = 0; it < 400; ++it) {
    GroupWord u = rng.random_word(6), v = rng.random_word(6);
    words.push_back(commutator(u, v)); // zero exponents: forces real closures
  }
  std::vector<uint8_t> expected(words.size());
  {
    WreathSystem fresh = gd_system(3);
    for (size_t i = 0; i < words.size(); ++i)
      expected[i] = is_identity(fresh, words[i]) ? 1 : 0;
  }
  // hammer the shared system from all threads, twice, including reversed
  // order so memo hits and misses interleave
  for (int round = 0; round < 2; ++round) {
    std::vector<uint8_t> got(words.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (int64_t i = 0; i < static_cast<int64_t>(words.size()); ++i) {
      size_t idx = round == 0 ? static_cast<size_t>(i) : words.size() - 1 - static_cast<size_t>(i);
      got[idx] = is_identity(shared, words[idx]) ? 1 : 0;
    }
    CHECK(got == expected);
  }
  CHECK(shared.memo_size() > 0);
}
