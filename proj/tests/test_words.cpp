#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "branchlab/words.hpp"

using namespace branchlab;

TEST_CASE("free reduction") {
  // [a1, a1^-1] -> e
  CHECK(GroupWord({Letter{1, 1}, Letter{1, -1}}).empty());
  // [a1, a2, a2^-1, a3] -> a1 a3
  GroupWord w({Letter{1, 1}, Letter{2, 1}, Letter{2, -1}, Letter{3, 1}});
  CHECK(format_word(w) == "a1 a3");
  // nested cancellation [a1, a2^-1, a2, a1^-1] -> e
  CHECK(GroupWord({Letter{1, 1}, Letter{2, -1}, Letter{2, 1}, Letter{1, -1}}).empty());
  // idempotence: re-reducing a reduced word changes nothing
  CHECK(GroupWord(std::span<const Letter>(w.letters())) == w);
}

TEST_CASE("group config guards") {
  CHECK_THROWS_AS(GroupConfig(4), UsageError);
  CHECK_THROWS_AS(GroupConfig(1), UsageError);
  CHECK_NOTHROW(GroupConfig(3));
  CHECK_NOTHROW(GroupConfig(9));
}

TEST_CASE("exponent vectors") {
  GroupConfig g3(3), g5(5);
  CHECK(exponent_vector(GroupWord{}, 3).total == 0);
  CHECK(exponent_vector(GroupWord{}, 3).is_zero());

  // a1 a2 a1 a2^-1 (d=3) -> (2,0,0), total 2
  GroupWord w = parse_word("a1 a2 a1 a2'", g3);
  auto ev = exponent_vector(w, 3);
  CHECK(ev.by_gen == std::vector<long long>{2, 0, 0});
  CHECK(ev.total == 2);

  // a1 a2 a3 a4 (d=5) -> (1,1,1,1,0), total 4
  auto ev5 = exponent_vector(parse_word("a1 a2 a3 a4", g5), 5);
  CHECK(ev5.by_gen == std::vector<long long>{1, 1, 1, 1, 0});
  CHECK(ev5.total == 4);
}

TEST_CASE("word algebra") {
  GroupConfig g5(5);
  GroupWord u = parse_word("a1 a2'", g5);
  CHECK(u.inverse() == parse_word("a2 a1'", g5));
  CHECK((u * u.inverse()).empty());
  CHECK(u.pow(0).empty());
  CHECK(u.pow(-2) == u.inverse() * u.inverse());
  CHECK(commutator(u, u).empty());
  GroupWord h = parse_word("a3", g5);
  CHECK(u.conjugate_by(h) == h.inverse() * u * h);
}

TEST_CASE("parsing and formatting") {
  GroupConfig g5(5);
  CHECK(parse_word("a1 a2'", g5) == GroupWord({Letter{1, 1}, Letter{2, -1}}));
  CHECK(parse_word("", g5).empty());
  CHECK(parse_word("  e  e ", g5).empty());
  CHECK(parse_word("a2^-1", g5) == GroupWord::generator(2, -1));
  CHECK(parse_word("a2^3", g5) == GroupWord::generator(2).pow(3));
  CHECK(parse_word("a2^0", g5).empty());
  CHECK(format_word(GroupWord{}) == "e");
  CHECK(format_word(parse_word("a1 a2' a1", g5)) == "a1 a2' a1");

  CHECK_THROWS_AS(parse_word("a7", g5), UsageError);
  CHECK_THROWS_AS(parse_word("a0", g5), UsageError);
  CHECK_THROWS_AS(parse_word("z1", g5), UsageError);
  CHECK_THROWS_AS(parse_word("a1^x", g5), UsageError);
  CHECK_THROWS_AS(parse_word("a1'x", g5), UsageError);

  // error messages carry a position
  try {
    parse_word("a1 b2", g5);
    CHECK(false);
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("position 3") != std::string::npos);
  }
}

TEST_CASE("vertices") {
  CHECK(parse_vertex("", 3).empty());
  CHECK(parse_vertex("112", 3) == Vertex{1, 1, 2});
  CHECK(format_vertex({1, 1, 2}, 3) == "112");
  CHECK_THROWS_AS(parse_vertex("140", 3), UsageError);
  CHECK_THROWS_AS(parse_vertex("4", 3), UsageError);
  // d > 9 uses comma separation
  CHECK(parse_vertex("1,11,2", 11) == Vertex{1, 11, 2});
  CHECK(format_vertex({1, 11, 2}, 11) == "1,11,2");
  CHECK_THROWS_AS(parse_vertex("1,12", 11), UsageError);
}
