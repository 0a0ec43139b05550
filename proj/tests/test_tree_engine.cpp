#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "branchlab/gd_presets.hpp"
#include "branchlab/tree_engine.hpp"
#include "branchlab/verify.hpp"

using namespace branchlab;

namespace {

GroupWord W(const std::string& text, int d) { return parse_word(text, d); }

} // namespace

TEST_CASE("generator recursion table") {
  WreathSystem g3 = gd_system(3);
  // a_3 = (a_1, e, a_3)(3 1)
  const auto& a3 = g3.generator(3);
  CHECK(format_word(a3.sections[0]) == "a1");
  CHECK(format_word(a3.sections[1]) == "e");
  CHECK(format_word(a3.sections[2]) == "a3");
  CHECK(perm_cycles(a3.root) == "(1 3)");

  WreathSystem g5 = gd_system(5);
  // a_2 = (e, a_2, a_3, e, e)(2 3)
  const auto& a2 = g5.generator(2);
  CHECK(format_word(a2.sections[1]) == "a2");
  CHECK(format_word(a2.sections[2]) == "a3");
  CHECK(perm_cycles(a2.root) == "(2 3)");

  CHECK_THROWS_AS(gd_system(4), UsageError);
  CHECK_THROWS_AS(gd_system(1), UsageError);
}

TEST_CASE("vertex actions") {
  WreathSystem g3 = gd_system(3);
  CHECK(act(g3, W("a1", 3), {1}) == Vertex{2});
  CHECK(act(g3, W("a1", 3), {1, 1}) == Vertex{2, 2});
  CHECK(act(g3, GroupWord{}, {1, 2, 3}) == Vertex{1, 2, 3});
  CHECK_THROWS_AS(act(g3, W("a1", 3), Vertex{4}), UsageError);
  // composition is left-to-right: (a1 a2)(1) = a2(a1(1)) = a2(2) = 3
  CHECK(act(g3, W("a1 a2", 3), {1}) == Vertex{3});
}

TEST_CASE("sections") {
  WreathSystem g3 = gd_system(3);
  WreathSystem g5 = gd_system(5);
  CHECK(format_word(section(g3, W("a1 a2", 3), {2})) == "a2");
  CHECK(format_word(section(g5, W("a1", 5), {1})) == "a1");
  CHECK(section(g5, GroupWord{}, {3, 1}).empty());
  // inverse letter recursion: a_1^-1 = (a_2^-1, a_1^-1, e, ...)
  CHECK(format_word(section(g5, W("a1'", 5), {1})) == "a2'");
  CHECK(format_word(section(g5, W("a1'", 5), {2})) == "a1'");
  // deep sections factor through prefixes
  GroupWord w = W("a1 a2' a3 a1", 5);
  CHECK(section(g5, w, {2, 4, 1}) == section(g5, section(g5, w, {2}), {4, 1}));
}

TEST_CASE("level permutations") {
  WreathSystem g3 = gd_system(3);
  LevelPermutation p1 = level_perm(g3, W("a1", 3), 1);
  CHECK(perm_cycles(p1.map) == "(1 2)");
  CHECK(!p1.trivial());
  CHECK(level_perm(g3, W("a1 a1'", 3), 4).trivial());

  // xi_i at level 1: the mod-d double transposition (disjoint for d=5)
  WreathSystem g5 = gd_system(5);
  CHECK(perm_cycles(level_perm(g5, xi(5, 1).word, 1).map) == "(1 3)(2 4)");
  // d=3 overlap case evaluates to the 3-cycle (1 3 2)
  CHECK(perm_cycles(level_perm(g3, xi(3, 1).word, 1).map) == "(1 3 2)");

  // prefix consistency
  GroupWord w = W("a1 a2 a3' a1", 3);
  CHECK(truncate_level(level_perm(g3, w, 3)) == level_perm(g3, w, 2));

  // resource guard
  WreathSystem tiny = gd_system(3);
  tiny.set_max_level_vertices(8);
  CHECK_THROWS_AS(level_perm(tiny, w, 3), ResourceError);
  CHECK_NOTHROW(level_perm(tiny, w, 1));
}

TEST_CASE("identity decision") {
  WreathSystem g3 = gd_system(3);
  WreathSystem g5 = gd_system(5);
  CHECK(is_identity(g3, GroupWord{}));
  CHECK(!is_identity(g3, W("a1", 3)));
  CHECK(is_identity(g3, W("a1 a1'", 3)));
  // xi_1^2 = e for d = 5 (disjoint transpositions, trivial sections)
  CHECK(is_identity(g5, xi(5, 1).word.pow(2)));
  // the two decision paths agree: level_perm of xi_1^2 is trivial as well
  CHECK(level_perm(g5, xi(5, 1).word.pow(2), 2).trivial());
  // closure stats: identity run reports the visited set
  WreathSystem fresh = gd_system(5);
  IdentityCheck c = is_identity_stats(fresh, xi(5, 1).word.pow(2));
  CHECK(c.isIdentity);
  CHECK(c.closureSize >= 1);
  CHECK(c.witnessDepth == -1);
  // repeated queries hit the memo
  CHECK(fresh.memo_size() >= 1);
  CHECK(is_identity(fresh, xi(5, 1).word.pow(2)));
}

TEST_CASE("equality") {
  WreathSystem g3 = gd_system(3);
  WreathSystem g5 = gd_system(5);
  CHECK(equal(g3, W("a1", 3), W("a1", 3)));
  CHECK(equal(g5, W("a1 a3", 5), W("a3 a1", 5))); // 1 < |3-1| < 4
  CHECK(!equal(g3, W("a1 a2", 3), W("a2 a1", 3)));
}

TEST_CASE("section tuples") {
  WreathSystem g3 = gd_system(3);
  auto t = section_tuple(g3, W("a1^2", 3), 1);
  REQUIRE(t.size() == 3);
  CHECK(format_word(t[0]) == "a1 a2");
  CHECK(format_word(t[1]) == "a2 a1");
  CHECK(format_word(t[2]) == "e");

  auto te = section_tuple(g3, GroupWord{}, 2);
  CHECK(te.size() == 9);
  for (const auto& s : te) CHECK(s.empty());

  CHECK_THROWS_WITH_AS(section_tuple(g3, W("a1", 3), 1), "not in level stabilizer",
                       UsageError);

  // psi_1 of the consecutive-spread shape: (e, .., a_{i+1}^-1, a_{i+1}, .., e)
  WreathSystem g5 = gd_system(5);
  GroupWord spread = commutator(W("a1", 5), W("a2", 5)) * eta(5, 1).word.inverse();
  auto ts = section_tuple(g5, spread, 1);
  CHECK(equal(g5, ts[0], W("a2'", 5)));
  CHECK(equal(g5, ts[1], W("a2", 5)));
  for (int x = 3; x <= 5; ++x) CHECK(is_identity(g5, ts[static_cast<size_t>(x - 1)]));
}

TEST_CASE("general systems: identity decision gated on short sections") {
  // a system with a two-letter section is accepted but refuses is_identity
  GroupConfig cfg(3);
  std::vector<WreathSystem::GenRecursion> gens(1);
  gens[0].sections.assign(3, GroupWord{});
  gens[0].sections[0] = GroupWord({Letter{1, 1}, Letter{1, 1}});
  gens[0].root = perm_identity(3);
  WreathSystem sys(cfg, std::move(gens), "long");
  CHECK(!sys.has_short_sections());
  CHECK_THROWS_AS(is_identity(sys, GroupWord::generator(1)), UsageError);
  // act/section still fine
  CHECK(act(sys, GroupWord::generator(1), {1, 1}) == Vertex{1, 1});
}

TEST_CASE("aut oracle system basics") {
  WreathSystem aut = aut_system(3, 3);
  CHECK(aut.num_generators() == 3 - 1 + 1 + 2); // r_1, r_2, m, c_2, c_3
  CHECK(aut.has_short_sections());
  CHECK(!aut.zero_exponent_law());
  // r_1^2 = e even though its exponent vector is nonzero
  CHECK(is_identity(aut, GroupWord::generator(1).pow(2)));
}
