#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "branchlab/gd_presets.hpp"
#include "branchlab/stabilizers.hpp"

using namespace branchlab;

TEST_CASE("mod_index wraps into 1..d") {
  CHECK(mod_index(1, 5) == 1);
  CHECK(mod_index(5, 5) == 5);
  CHECK(mod_index(6, 5) == 1);
  CHECK(mod_index(8, 5) == 3);
  CHECK(mod_index(0, 5) == 5);
  CHECK(mod_index(-1, 5) == 4);
}

TEST_CASE("xi signatures: trivial sections, double transposition") {
  for (int d : {3, 5, 7}) {
    WreathSystem sys = gd_system(d);
    for (int i = 1; i <= d; ++i) {
      NamedElement el = xi(d, i);
      CHECK_NOTHROW(el.verify(sys)); // exact section + permutation match
      for (const auto& s : el.expected_sections) CHECK(s.empty());
    }
  }
  // concrete permutations
  CHECK(perm_cycles(xi(5, 1).expected_root) == "(1 3)(2 4)");
  CHECK(perm_cycles(xi(7, 4).expected_root) == "(4 6)(5 7)");
  CHECK(perm_cycles(xi(3, 1).expected_root) == "(1 3 2)"); // overlapping case
  CHECK_THROWS_AS(xi(5, 6), UsageError);
}

TEST_CASE("eta is the rooted 3-cycle (i i+1 i+2)") {
  for (int d : {3, 5, 7}) {
    WreathSystem sys = gd_system(d);
    for (int i = 1; i <= d; ++i) {
      NamedElement el = eta(d, i);
      CHECK_NOTHROW(el.verify(sys));
      // cycle through i -> i+1 -> i+2 -> i (0-based images)
      int p0 = i - 1, p1 = mod_index(i + 1, d) - 1, p2 = mod_index(i + 2, d) - 1;
      CHECK(el.expected_root[static_cast<size_t>(p0)] == static_cast<uint32_t>(p1));
      CHECK(el.expected_root[static_cast<size_t>(p1)] == static_cast<uint32_t>(p2));
      CHECK(el.expected_root[static_cast<size_t>(p2)] == static_cast<uint32_t>(p0));
    }
  }
  CHECK(perm_cycles(eta(5, 1).expected_root) == "(1 2 3)");
  CHECK(perm_cycles(eta(5, 4).expected_root) == "(1 4 5)"); // (4 5 1) as a cycle
  CHECK(perm_cycles(eta(3, 1).expected_root) == "(1 2 3)");
}

TEST_CASE("consecutive spread carries an inverse pair at slots i, i+1") {
  for (int d : {3, 5, 7}) {
    WreathSystem sys = gd_system(d);
    for (int i = 1; i <= d; ++i) CHECK_NOTHROW(consecutive_spread(d, i).verify(sys));
  }
  auto s51 = consecutive_spread(5, 1);
  CHECK(format_word(s51.expected_sections[0]) == "a2'");
  CHECK(format_word(s51.expected_sections[1]) == "a2");
  auto s55 = consecutive_spread(5, 5);
  CHECK(format_word(s55.expected_sections[0]) == "a1"); // wraps to slot 1
  CHECK(format_word(s55.expected_sections[4]) == "a1'");
  auto s32 = consecutive_spread(3, 2);
  CHECK(format_word(s32.expected_sections[1]) == "a3'");
  CHECK(format_word(s32.expected_sections[2]) == "a3");
}

TEST_CASE("explicit rigid-stabilizer witnesses") {
  for (int d : {5, 7}) {
    WreathSystem sys = gd_system(d);
    auto wits = rist1_generators(d);
    REQUIRE(wits.size() == static_cast<size_t>(2 * d));
    for (const auto& el : wits) CHECK_NOTHROW(el.verify(sys));
    // slot-1 pair: (a_2^-1 a_4, e, ..) and ((a_1 a_2)^2, e, ..)
    CHECK(format_word(wits[0].expected_sections[0]) == "a2' a4");
    CHECK(format_word(wits[1].expected_sections[0]) == "a1 a2 a1 a2");
    for (int x = 2; x <= d; ++x) {
      CHECK(wits[0].expected_sections[static_cast<size_t>(x - 1)].empty());
      CHECK(wits[1].expected_sections[static_cast<size_t>(x - 1)].empty());
    }
    // shifted witnesses live at shifted slots: pair for slot 2
    CHECK(format_word(wits[2].expected_sections[1]) == "a3' a5");
    // first coordinates lie in H_1
    CHECK(in_H(wits[0].expected_sections[0], 1, d));
    CHECK(in_H(wits[1].expected_sections[0], 1, d));
  }
  CHECK_THROWS_AS(rist1_generators(3), NotApplicableError);
}

TEST_CASE("root permutation realization") {
  WreathSystem g5 = gd_system(5);
  Perm lambda = {2, 0, 1, 4, 3}; // (1 3 2)(4 5)
  GroupWord w = word_with_root_perm(lambda);
  CHECK(level_perm(g5, w, 1).map == lambda);
  CHECK(level_perm(g5, word_with_root_perm(perm_identity(5)), 1).trivial());
}

TEST_CASE("witness search") {
  WreathSystem g5 = gd_system(5);
  SearchBudget budget{20000, 128};

  SUBCASE("identity target returns e") {
    auto res = witness_search(g5, std::vector<GroupWord>(5), perm_identity(5), budget);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->empty());
  }

  SUBCASE("spread signature is found and equals the defining word") {
    NamedElement sp = consecutive_spread(5, 1);
    auto res = witness_search(g5, sp.expected_sections, sp.expected_root, budget);
    REQUIRE(res.witness.has_value());
    CHECK(equal(g5, *res.witness, sp.word));
  }

  SUBCASE("generator signature found at depth one") {
    NamedElement target = xi(5, 2);
    auto res = witness_search(g5, target.expected_sections, target.expected_root, budget);
    REQUIRE(res.witness.has_value());
    CHECK(equal(g5, *res.witness, target.word));
  }

  SUBCASE("budget exhaustion is reported, not nonexistence") {
    std::vector<GroupWord> target(5);
    target[0] = GroupWord::generator(1).pow(4);
    SearchBudget tiny{10, 6};
    auto res = witness_search(g5, target, perm_identity(5), tiny);
    CHECK(!res.witness.has_value());
    CHECK(res.budget_exhausted);
  }

  SUBCASE("malformed targets are rejected") {
    CHECK_THROWS_AS(witness_search(g5, std::vector<GroupWord>(4), perm_identity(5), budget),
                    UsageError);
    CHECK_THROWS_AS(witness_search(g5, std::vector<GroupWord>(5), perm_identity(4), budget),
                    UsageError);
  }
}

TEST_CASE("larger arities verify end to end") {
  // d = 9: recursion table, named elements, and a sample of group facts
  WreathSystem g9 = gd_system(9);
  CHECK(g9.num_generators() == 9);
  for (int i : {1, 4, 9}) {
    CHECK_NOTHROW(xi(9, i).verify(g9));
    CHECK_NOTHROW(eta(9, i).verify(g9));
    CHECK_NOTHROW(consecutive_spread(9, i).verify(g9));
  }
  for (const auto& el : rist1_generators(9)) CHECK_NOTHROW(el.verify(g9));
  CHECK(equal(g9, parse_word("a1 a4", 9), parse_word("a4 a1", 9)));  // distance 3
  CHECK(!equal(g9, parse_word("a1 a9", 9), parse_word("a9 a1", 9))); // distance 8 = d-1
  CHECK(is_identity(g9, xi(9, 2).word.pow(2)));
}

TEST_CASE("default search basis covers the named families") {
  auto basis5 = default_search_basis(5);
  CHECK(basis5.size() == 5 + 5 + 5 + 5 + 10); // gens, xi, eta, spread, rist pairs
  auto basis3 = default_search_basis(3);
  CHECK(basis3.size() == 3 + 3 + 3 + 3); // no explicit rist witnesses at d = 3
}
