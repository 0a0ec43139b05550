#ifndef BRANCHLAB_STABILIZERS_HPP
#define BRANCHLAB_STABILIZERS_HPP

#include <cstdint>
#include <vector>

#include "branchlab/tree_engine.hpp"
#include "branchlab/words.hpp"

namespace branchlab {

// H_k = { w : |w|_A = 0 mod 2^(k+1) }.
bool in_H(const GroupWord& w, int k, int num_generators);

bool in_level_stabilizer(const WreathSystem& sys, const GroupWord& w, int k);

// Residues of the level-stabilizer congruence system for a d^k-tuple:
// for 1 <= r <= k and 0 <= t < d^(k-r), the sum of |h_j|_A over the t-th
// block of d^r entries, mod 2^(r+1). All-zero iff the tuple is the
// section tuple of a level-k stabilizer element.
struct BlockCongruenceProfile {
  int d = 0;
  int k = 0;
  // residues[r-1][t], for r = 1..k
  std::vector<std::vector<uint64_t>> residues;

  bool all_zero() const;
};

BlockCongruenceProfile tuple_criterion(const std::vector<GroupWord>& tuple, int d, int k);

// Residue profile over plain integer totals (used for residue vectors).
BlockCongruenceProfile tuple_criterion_totals(const std::vector<long long>& totals, int d, int k);

// w in Rist(k-hat) iff w stabilizes level k and every level-k section
// lies in H_k.
bool in_rigid_stabilizer(const WreathSystem& sys, const GroupWord& w, int k);

// w in Rist(u): fixes every vertex outside the subtree at u; concretely,
// trivial level-|u| permutation and identity sections at all level-|u|
// vertices other than u. For the root vertex this is trivially true.
bool in_rist_of_vertex(const WreathSystem& sys, const GroupWord& w, const Vertex& u);

// Admissible level-1 tuple carrying w at slot x, per the very-strongly-
// fractal lift: (e,..,w,..,e) when |w|_A = 0 mod 4, else (e,..,w,w,..,e)
// with the second copy at the next slot mod d. Requires w in St(k-hat),
// k >= 1. The returned tuple passes tuple_criterion at level 1.
std::vector<GroupWord> fractal_lift_exists(const WreathSystem& sys, const GroupWord& w,
                                           int k, int x);

} // namespace branchlab

#endif
