#ifndef BRANCHLAB_PERM_HPP
#define BRANCHLAB_PERM_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace branchlab {

// Permutation of {0, ..., n-1} as an image array: p[i] is the image of i.
// All products in this project are left-to-right: (p then q)(i) = q(p(i)),
// matching the action composition gh(u) = h(g(u)).
using Perm = std::vector<uint32_t>;

Perm perm_identity(size_t n);
bool perm_is_identity(const Perm& p);
Perm perm_then(const Perm& p, const Perm& q);
Perm perm_inverse(const Perm& p);
bool perm_is_valid(const Perm& p);

// +1 for even permutations, -1 for odd.
int perm_parity(const Perm& p);

// Cycle notation over 1-based points, e.g. "(1 2)(3 4)"; "()" for identity.
std::string perm_cycles(const Perm& p);

// A permutation of the k-th level X^k of the d-regular tree. Vertices
// x_1...x_k (letters 1..d) are indexed by sum (x_j - 1) * d^(k-j).
struct LevelPermutation {
  int d = 0;
  int level = 0;
  Perm map;

  bool trivial() const { return perm_is_identity(map); }
  bool operator==(const LevelPermutation&) const = default;
};

// The induced permutation of X^(k-1) obtained by truncating images.
LevelPermutation truncate_level(const LevelPermutation& p);

} // namespace branchlab

#endif
