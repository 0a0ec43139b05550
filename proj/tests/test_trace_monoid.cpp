#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "branchlab/gd_presets.hpp"
#include "branchlab/parallel.hpp"
#include "branchlab/trace_monoid.hpp"
#include "branchlab/verify.hpp"

using namespace branchlab;

TEST_CASE("commutation relation") {
  // d=5: strictly between 1 and 4
  CHECK(commutes(1, 3, 5));
  CHECK(commutes(2, 4, 5));
  CHECK(commutes(1, 4, 5));
  CHECK(!commutes(1, 2, 5));
  CHECK(!commutes(1, 5, 5)); // plain distance 4 = d-1, not cyclic
  CHECK(!commutes(3, 3, 5));
  // d=3: free monoid
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) CHECK(!commutes(i, j, 3));
  CHECK_THROWS_AS(commutes(0, 1, 5), UsageError);
  CHECK_THROWS_AS(commutes(1, 6, 5), UsageError);
}

TEST_CASE("normal forms") {
  CHECK(normal_form({3, 1}, 5) == TraceWord{1, 3});
  CHECK(normal_form({2, 1}, 5) == TraceWord{2, 1}); // 1,2 dependent
  CHECK(normal_form({1, 2, 3}, 3) == TraceWord{1, 2, 3}); // free monoid
  CHECK(normal_form({}, 5).empty());
  // blocked letter must still reach the front through a commuting run:
  // 5 1 3 ~ 5 3 1 ~ 3 5 1, and 3 5 1 is least
  CHECK(normal_form({5, 1, 3}, 5) == TraceWord{3, 5, 1});
  CHECK(normal_form({3, 5, 1}, 5) == TraceWord{3, 5, 1});
  // idempotence on a batch of random words
  WordSampler rng(5, 11);
  for (int it = 0; it < 500; ++it) {
    TraceWord w = rng.random_trace(1 + rng.below(9));
    TraceWord nf = normal_form(w, 5);
    CHECK(normal_form(nf, 5) == nf);
    CHECK(projection_equal(w, nf, 5));
    TraceWord sw = w, sn = nf;
    std::sort(sw.begin(), sw.end());
    std::sort(sn.begin(), sn.end());
    CHECK(sw == sn);
  }
}

TEST_CASE("monoid equality") {
  CHECK(monoid_equal({1, 3, 2}, {3, 1, 2}, 5));
  CHECK(!monoid_equal({1, 2}, {2, 1}, 5)); // free pair
  CHECK(monoid_equal({1, 4, 2, 5}, {4, 1, 5, 2}, 7));
  CHECK(!monoid_equal({1}, {1, 1}, 5));
  CHECK(monoid_equal({}, {}, 5));
}

TEST_CASE("projection route agrees with the normal-form route") {
  for (int d : {3, 5, 7}) {
    WordSampler rng(d, 13);
    for (int it = 0; it < 800; ++it) {
      TraceWord u = rng.random_trace(1 + rng.below(7));
      TraceWord v = u;
      if (rng.below(2) == 0 && v.size() >= 2) {
        size_t p = rng.below(v.size() - 1);
        std::swap(v[p], v[p + 1]);
      } else {
        v = rng.random_trace(1 + rng.below(7));
      }
      CHECK(monoid_equal(u, v, d) == projection_equal(u, v, d));
    }
  }
}

TEST_CASE("the presentation matches the group: exhaustive short words") {
  // all pairs of positive words of length <= 3 (d = 5): trace equality
  // must coincide with equality of tree automorphisms
  WreathSystem g5 = gd_system(5);
  std::vector<TraceWord> words;
  std::function<void(TraceWord&)> gen = [&](TraceWord& w) {
    if (!w.empty()) words.push_back(w);
    if (w.size() == 3) return;
    for (int a = 1; a <= 5; ++a) {
      w.push_back(a);
      gen(w);
      w.pop_back();
    }
  };
  TraceWord w0;
  gen(w0);
  for (size_t i = 0; i < words.size(); ++i)
    for (size_t j = i; j < words.size(); ++j) {
      bool m = monoid_equal(words[i], words[j], 5);
      bool t = equal(g5, word_from_trace(words[i]), word_from_trace(words[j]));
      REQUIRE(m == t);
    }
}

TEST_CASE("the presentation matches the group: full-strength pair sweeps") {
  // every pair up to length 5 over d = 5 and length 6 over d = 3
  for (auto [d, maxlen] : std::vector<std::pair<int, int>>{{5, 5}, {3, 6}}) {
    WreathSystem sys = gd_system(d);
    std::vector<TraceWord> words;
    std::function<void(TraceWord&)> gen = [&](TraceWord& w) {
      if (!w.empty()) words.push_back(w);
      if (static_cast<int>(w.size()) == maxlen) return;
      for (int a = 1; a <= d; ++a) {
        w.push_back(a);
        gen(w);
        w.pop_back();
      }
    };
    TraceWord w0;
    gen(w0);
    CHECK(par::trace_tree_discrepancies_parallel(sys, words) == 0);
  }
}

TEST_CASE("growth counting") {
  // base cases
  for (int d : {3, 5, 7}) {
    CHECK(growth_count(d, 0) == 1);
    CHECK(growth_count(d, 1) == static_cast<uint64_t>(d));
  }
  // d=3 free monoid: 3^n
  uint64_t want = 1;
  for (int n = 1; n <= 8; ++n) {
    want *= 3;
    CHECK(growth_count(3, n) == want);
  }
  // d=5: 20 at n=2 (25 ordered pairs minus 5 commuting unordered pairs)
  CHECK(growth_count(5, 2) == 20);
  // exponential growth (free subsemigroup on a_1, a_2)
  for (int n = 1; n <= 10; ++n)
    CHECK(growth_count(5, n) >= (uint64_t{1} << n));

  // clique recurrence and brute-force enumeration agree with the DFS
  for (int d : {3, 5, 7}) {
    auto series = growth_series_mobius(d, 7);
    for (int n = 0; n <= 7; ++n)
      CHECK(growth_count(d, n) == series[static_cast<size_t>(n)]);
    for (int n = 0; n <= 4; ++n) {
      std::set<TraceWord> classes;
      std::function<void(TraceWord&)> gen = [&](TraceWord& w) {
        if (static_cast<int>(w.size()) == n) {
          classes.insert(normal_form(w, d));
          return;
        }
        for (int a = 1; a <= d; ++a) {
          w.push_back(a);
          gen(w);
          w.pop_back();
        }
      };
      TraceWord w0;
      gen(w0);
      CHECK(classes.size() == growth_count(d, n));
    }
  }
  // the mobius polynomial of d=5 has no triangles: f_n = 5 f_{n-1} - 5 f_{n-2}
  auto f = growth_series_mobius(5, 10);
  for (int n = 2; n <= 10; ++n)
    CHECK(f[static_cast<size_t>(n)] ==
          5 * f[static_cast<size_t>(n - 1)] - 5 * f[static_cast<size_t>(n - 2)]);

  // resource guard trips before the enumeration explodes
  CHECK_THROWS_AS(growth_count(7, 30, 1000), ResourceError);
}

TEST_CASE("conversions guard against inverse letters") {
  CHECK_THROWS_AS(trace_from_word(parse_word("a1 a2'", 5)), UsageError);
  CHECK(trace_from_word(parse_word("a1 a2", 5)) == TraceWord{1, 2});
  CHECK(format_word(word_from_trace({1, 2, 1})) == "a1 a2 a1");
}
