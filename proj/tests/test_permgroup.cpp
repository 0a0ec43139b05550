#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "branchlab/gd_presets.hpp"
#include "branchlab/permgroup.hpp"

using namespace branchlab;

namespace {

std::vector<Perm> gd_level_gens(int d, int k) {
  WreathSystem sys = gd_system(d);
  std::vector<Perm> gens;
  for (int i = 1; i <= d; ++i)
    gens.push_back(level_perm(sys, GroupWord::generator(i), k).map);
  return gens;
}

} // namespace

TEST_CASE("symmetric group on 3 points") {
  std::vector<Perm> gens = {{1, 0, 2}, {0, 2, 1}};
  CHECK(group_order(gens) == 6);
  auto e = bfs_enumerate(gens, 10);
  CHECK(!e.overflow);
  CHECK(e.elements.size() == 6);
}

TEST_CASE("adjacent transpositions generate S_n") {
  for (size_t n : {4, 5, 7}) {
    std::vector<Perm> gens;
    for (size_t i = 0; i + 1 < n; ++i) {
      Perm p = perm_identity(n);
      std::swap(p[i], p[i + 1]);
      gens.push_back(p);
    }
    BigInt want = 1;
    for (size_t i = 2; i <= n; ++i) want *= static_cast<unsigned>(i);
    CHECK(group_order(gens) == want);
  }
}

TEST_CASE("level generators of G_d") {
  CHECK(group_order(gd_level_gens(3, 1)) == 6);
  CHECK(group_order(gd_level_gens(3, 2)) == 648);
  CHECK(group_order(gd_level_gens(3, 3)) == 816293376);
  CHECK(group_order(gd_level_gens(5, 1)) == 120);
}

TEST_CASE("bfs enumeration matches the chain and signals overflow") {
  auto gens2 = gd_level_gens(3, 2);
  auto e = bfs_enumerate(gens2, 1000);
  CHECK(!e.overflow);
  CHECK(BigInt(e.elements.size()) == group_order(gens2));

  auto gens3 = gd_level_gens(3, 3);
  auto big = bfs_enumerate(gens3, 1000);
  CHECK(big.overflow);
  CHECK(big.elements.empty());
}

TEST_CASE("membership and invariances") {
  auto gens = gd_level_gens(3, 2);
  PermGroupHandle h(gens, 7);
  CHECK(h.degree() == 9);
  CHECK(h.order() == 648);
  CHECK(h.contains(perm_identity(9)));
  CHECK(h.contains(perm_then(gens[0], gens[1])));
  // an odd single transposition of two leaves is not level-structured
  Perm stray = perm_identity(9);
  std::swap(stray[0], stray[4]);
  CHECK(!h.contains(stray));

  // order is invariant under augmenting with products and under reseeding
  auto aug = gens;
  aug.push_back(perm_then(gens[2], gens[0]));
  aug.push_back(perm_inverse(gens[1]));
  CHECK(group_order(aug, 3) == 648);
  CHECK(group_order(gens, 1) == group_order(gens, 123456));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(group_order(std::vector<Perm>{}), UsageError);
  CHECK_THROWS_AS(group_order(std::vector<Perm>{{0, 1}, {0, 1, 2}}), UsageError);
  CHECK_THROWS_AS(group_order(std::vector<Perm>{{1, 1, 0}}), UsageError);
  CHECK(group_order(std::vector<Perm>{perm_identity(4)}) == 1);
}

TEST_CASE("perm utilities") {
  Perm p = {1, 2, 0, 4, 3}; // (1 2 3)(4 5)
  CHECK(perm_cycles(p) == "(1 2 3)(4 5)");
  CHECK(perm_parity(p) == -1);
  CHECK(perm_is_identity(perm_then(p, perm_inverse(p))));
  CHECK(perm_cycles(perm_identity(3)) == "()");
  CHECK(perm_parity(perm_identity(3)) == 1);
}
