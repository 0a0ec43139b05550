#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "branchlab/quotient_kernel.hpp"
#include "branchlab/verify.hpp"

using namespace branchlab;

namespace {
GroupWord W(const std::string& text, int d) { return parse_word(text, d); }
} // namespace

TEST_CASE("coset construction validates the congruences") {
  CHECK_NOTHROW(QuotientCoset(3, 1, {2, 2, 0}));
  CHECK_NOTHROW(QuotientCoset(3, 1, {1, 1, 2})); // odd entries are fine
  CHECK_THROWS_AS(QuotientCoset(3, 1, {1, 0, 0}), UsageError); // sum 1 mod 4
  CHECK_THROWS_AS(QuotientCoset(3, 1, {4, 0, 0}), UsageError); // out of range
  CHECK_THROWS_AS(QuotientCoset(3, 1, {0, 0}), UsageError);    // wrong arity
  CHECK_THROWS_AS(QuotientCoset(4, 1, {0, 0, 0, 0}), UsageError);
}

TEST_CASE("coset of a stabilizer word") {
  WreathSystem g3 = gd_system(3);
  CHECK(coset_of(g3, GroupWord{}, 1).is_zero());
  CHECK(coset_of(g3, GroupWord{}, 2).is_zero());
  CHECK(coset_of(g3, W("a1^2", 3), 1).n == std::vector<uint64_t>{2, 2, 0});
  CHECK_THROWS_AS(coset_of(g3, W("a1", 3), 1), UsageError);

  // rigid words map to the zero coset
  WreathSystem g5 = gd_system(5);
  auto wits = rist1_generators(5);
  CHECK(coset_of(g5, wits[1].word, 1).is_zero());
}

TEST_CASE("coset arithmetic") {
  QuotientCoset a(3, 1, {2, 2, 0});
  CHECK(coset_mul(a, QuotientCoset(3, 1, {0, 0, 0})) == a);
  CHECK(coset_mul(a, a).is_zero());
  QuotientCoset b(3, 1, {2, 0, 2}), c(3, 1, {0, 2, 2});
  CHECK(coset_mul(b, c).n == std::vector<uint64_t>{2, 2, 0});
  CHECK(coset_mul(a, coset_inverse(a)).is_zero());
  CHECK_THROWS_AS(coset_mul(a, QuotientCoset(3, 2, std::vector<uint64_t>(9, 0))), UsageError);
}

TEST_CASE("theta at (3,1): full enumeration is a bijection onto C_4 x C_4") {
  std::vector<QuotientCoset> all;
  for (uint64_t n1 = 0; n1 < 4; ++n1)
    for (uint64_t n2 = 0; n2 < 4; ++n2)
      all.emplace_back(3, 1, std::vector<uint64_t>{n1, n2, (8 - n1 - n2) % 4});
  CHECK(all.size() == 16);
  std::set<std::vector<uint64_t>> images;
  for (const auto& c : all) {
    ThetaImage t = theta(c);
    CHECK(t.l.size() == 2);
    CHECK(t.l[0] < 4);
    CHECK(t.l[1] < 4);
    images.insert(t.l);
    CHECK(theta_inv(t) == c);
  }
  CHECK(images.size() == 16);
  CHECK(theta(QuotientCoset(3, 1, {2, 2, 0})).l == std::vector<uint64_t>{2, 2});
}

TEST_CASE("theta alphas") {
  CHECK(theta_alpha(3, 2, 1) == 8);
  CHECK(theta_alpha(3, 2, 2) == 8);
  CHECK(theta_alpha(3, 2, 3) == 2); // 3 = d^1 * 1
  CHECK(theta_alpha(3, 2, 6) == 2); // 6 = d^1 * 2
  CHECK(theta_alpha(3, 2, 8) == 8);
  CHECK(theta_alpha(5, 3, 25) == 2);  // 25 = 5^2, alpha = 2^(3-2)
  CHECK(theta_alpha(5, 3, 5) == 4);   // 5^1, alpha = 2^(3-1)
  CHECK_THROWS_AS(theta_alpha(3, 2, 9), UsageError); // j = d^k has no component
}

TEST_CASE("theta round-trips at (3,2)") {
  WordSampler rng(3, 99);
  for (int it = 0; it < 1000; ++it) {
    ThetaImage img;
    img.d = 3;
    img.k = 2;
    for (uint64_t j = 1; j < 9; ++j) img.l.push_back(rng.below(theta_alpha(3, 2, j)));
    QuotientCoset c = theta_inv(img);
    CHECK(theta(c) == img);
    CHECK(theta_inv(theta(c)) == c);
  }
}

TEST_CASE("rho") {
  CHECK(rho(QuotientCoset(3, 2, std::vector<uint64_t>(9, 0))).is_zero());
  QuotientCoset up(3, 2, {2, 2, 0, 0, 0, 0, 2, 2, 0});
  CHECK(rho(up).n == std::vector<uint64_t>{2, 0, 2});
  // rho is a homomorphism
  QuotientCoset v(3, 2, {2, 2, 0, 0, 2, 2, 0, 0, 0});
  CHECK(rho(coset_mul(up, v)) == coset_mul(rho(up), rho(v)));
  // and matches re-evaluation of stabilizer words one level down
  WreathSystem g3 = gd_system(3);
  WordSampler rng(3, 7);
  for (int it = 0; it < 40; ++it) {
    GroupWord w = rng.random_stabilizer_word(g3, 2);
    CHECK(rho(coset_of(g3, w, 2)) == coset_of(g3, w, 1));
  }
  CHECK_THROWS_AS(rho(QuotientCoset(3, 1, {0, 0, 0})), UsageError);
}

TEST_CASE("kernel_from_free worked example") {
  auto el = kernel_from_free(3, 2, {{2, 0}, {0, 0, 0, 0, 0, 0}});
  CHECK(el.levels[0].n == std::vector<uint64_t>{2, 0, 2});
  CHECK(el.levels[1].n == std::vector<uint64_t>{0, 0, 4, 0, 0, 0, 0, 0, 4});
  CHECK(rho(el.levels[1]) == el.levels[0]);

  // identity tower
  auto id = kernel_from_free(3, 2, {{0, 0}, {0, 0, 0, 0, 0, 0}});
  CHECK(id.levels[0].is_zero());
  CHECK(id.levels[1].is_zero());

  CHECK_THROWS_AS(kernel_from_free(3, 2, {{1, 0}, {0, 0, 0, 0, 0, 0}}), UsageError); // odd
  CHECK_THROWS_AS(kernel_from_free(3, 2, {{4, 0}, {0, 0, 0, 0, 0, 0}}), UsageError); // range
  CHECK_THROWS_AS(kernel_from_free(3, 2, {{0, 0}}), UsageError); // missing level
}

TEST_CASE("kernel element validation") {
  QuotientCoset l1(3, 1, {2, 0, 2});
  QuotientCoset l2(3, 2, {0, 0, 4, 0, 0, 0, 0, 0, 4});
  CHECK_NOTHROW(KernelElement(3, 2, {l1, l2}));
  // incompatible tower
  QuotientCoset wrong(3, 1, {0, 2, 2});
  CHECK_THROWS_AS(KernelElement(3, 2, {wrong, l2}), UsageError);
  // odd residues rejected
  QuotientCoset odd(3, 1, {1, 1, 2});
  CHECK_THROWS_AS(KernelElement(3, 1, {odd}), UsageError);
}

TEST_CASE("phi and phi_inv are mutually inverse") {
  auto el = kernel_from_free(3, 2, {{2, 0}, {0, 0, 0, 0, 0, 0}});
  PhiImage img = phi(el);
  CHECK(img.eta[0] == std::vector<uint64_t>{1, 0});
  CHECK(img.eta[1] == std::vector<uint64_t>(6, 0));
  CHECK(phi_inv(img) == el);

  WordSampler rng(5, 4242);
  for (int d : {3, 5}) {
    const int K = 6;
    for (int it = 0; it < 50; ++it) {
      PhiImage rnd;
      rnd.d = d;
      rnd.K = K;
      rnd.eta.resize(K);
      for (int k = 1; k <= K; ++k) {
        uint64_t dk = 1;
        for (int i = 0; i < k; ++i) dk *= static_cast<uint64_t>(d);
        for (uint64_t j = 0; j < dk - dk / static_cast<uint64_t>(d); ++j)
          rnd.eta[static_cast<size_t>(k - 1)].push_back(rng.below(uint64_t{1} << k));
      }
      KernelElement e2 = phi_inv(rnd);
      CHECK(phi(e2) == rnd);
      for (const auto& lvl : e2.levels)
        for (uint64_t v : lvl.n) CHECK(v % 2 == 0);
      // phi halves kernel_from_free's input
      PhiImage halved = phi(e2);
      for (int k = 1; k <= K; ++k)
        for (size_t j = 0; j < halved.eta[static_cast<size_t>(k - 1)].size(); ++j)
          CHECK(2 * halved.eta[static_cast<size_t>(k - 1)][j] ==
                2 * rnd.eta[static_cast<size_t>(k - 1)][j]);
    }
  }
}

TEST_CASE("phi is a homomorphism") {
  WordSampler rng(3, 31337);
  const int K = 4;
  auto random_img = [&]() {
    PhiImage img;
    img.d = 3;
    img.K = K;
    img.eta.resize(K);
    for (int k = 1; k <= K; ++k) {
      uint64_t dk = 1;
      for (int i = 0; i < k; ++i) dk *= 3;
      for (uint64_t j = 0; j < dk - dk / 3; ++j)
        img.eta[static_cast<size_t>(k - 1)].push_back(rng.below(uint64_t{1} << k));
    }
    return img;
  };
  for (int it = 0; it < 30; ++it) {
    PhiImage a = random_img(), b = random_img();
    PhiImage sum = phi(kernel_mul(phi_inv(a), phi_inv(b)));
    for (int k = 1; k <= K; ++k)
      for (size_t j = 0; j < sum.eta[static_cast<size_t>(k - 1)].size(); ++j)
        CHECK(sum.eta[static_cast<size_t>(k - 1)][j] ==
              (a.eta[static_cast<size_t>(k - 1)][j] + b.eta[static_cast<size_t>(k - 1)][j]) %
                  (uint64_t{1} << k));
  }
}

TEST_CASE("torsion profiles") {
  const int d = 3, K = 6;
  FreeResidues zero(K), lvl1(K), maximal(K);
  for (int k = 1; k <= K; ++k) {
    uint64_t dk = 1;
    for (int i = 0; i < k; ++i) dk *= static_cast<uint64_t>(d);
    uint64_t cnt = dk - dk / static_cast<uint64_t>(d);
    zero[static_cast<size_t>(k - 1)].assign(cnt, 0);
    lvl1[static_cast<size_t>(k - 1)].assign(cnt, 0);
    maximal[static_cast<size_t>(k - 1)].assign(cnt, (uint64_t{1} << k) - 2);
  }
  lvl1[0] = {2, 2};

  auto t0 = torsion_profile(kernel_from_free(d, K, zero));
  CHECK(t0.order_at_depth == std::vector<uint64_t>(K, 1));
  CHECK(t0.stabilized);

  auto t1 = torsion_profile(kernel_from_free(d, K, lvl1));
  CHECK(t1.order_at_depth.back() <= 4);
  CHECK(t1.stabilized);

  auto tm = torsion_profile(kernel_from_free(d, K, maximal));
  CHECK(tm.order_at_depth.back() == 64);
  CHECK(!tm.stabilized);
}

TEST_CASE("branch kernel arithmetic chain") {
  for (int d : {3, 5, 7})
    for (int k = 1; k <= 3; ++k) {
      auto rep = branch_kernel_check(d, k);
      CHECK(rep.tuple_first_in_Hk);
      CHECK(rep.forced_total == 2);
      CHECK(rep.outside_H);
      CHECK(rep.holds);
      CHECK(!rep.search_attempted);
    }
  // optional search is attempted only at k = 1 and never lies about totals
  SearchBudget tiny{500, 32};
  auto rep = branch_kernel_check(3, 1, &tiny);
  CHECK(rep.search_attempted);
  if (rep.witness_word) CHECK(*rep.witness_total == 2);
}
