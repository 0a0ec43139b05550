#ifndef BRANCHLAB_GD_PRESETS_HPP
#define BRANCHLAB_GD_PRESETS_HPP

#include <optional>
#include <string>
#include <vector>

#include "branchlab/tree_engine.hpp"
#include "branchlab/words.hpp"

namespace branchlab {

// The G_d recursion table: a_i = (e,..,a_i at i, a_{i+1} at i+1,..,e)(i i+1),
// indices mod d. Rejects even or too-small d.
WreathSystem gd_system(int d);

// A self-replicating system whose level-k quotients are the full iterated
// wreath products S_d wr ... wr S_d for k <= depth; the Aut(T) truncation
// oracle. Generators: rooted adjacent transpositions r_1..r_{d-1},
// m = (m, r_1, ..., r_{d-1}), and a chain of sign-breakers
// c_2 = (c_2, r_1, e, ..), c_{t+1} = (c_{t+1}, c_t, e, ..) up to depth.
// Finitely many generators cannot be full at every level (the iterated
// wreath abelianization is C_2^k), hence the depth parameter.
WreathSystem aut_system(int d, int depth = 3);

// i reduced into {1..d} mod d.
int mod_index(long long i, int d);

// A word together with its expected level-1 signature; construction
// verifies the signature against the tree engine and throws on mismatch.
struct NamedElement {
  std::string name;
  GroupWord word;
  std::vector<GroupWord> expected_sections; // d entries
  Perm expected_root;

  void verify(const WreathSystem& sys) const;
};

// xi_i = [a_i, a_{i+1}] [a_{i+1}, a_{i+2}] [a_{i+1}^2, a_{i+2}]^-1:
// all-trivial sections, root permutation (i i+2)(i+1 i+3) composed
// left-to-right after mod-d reduction.
NamedElement xi(int d, int i);

// eta_i: the xi-product with 3-cycle (i i+1 i+2) and trivial sections;
// built for i = 1 as xi_{d-2} xi_{d-4} .. xi_3 xi_2 xi_4 .. xi_{d-1} xi_d
// and index-shifted for i >= 2.
NamedElement eta(int d, int i);

// [a_i, a_{i+1}] eta_i^-1 = (e, .., a_{i+1}^-1 at i, a_{i+1} at i+1, .., e).
NamedElement consecutive_spread(int d, int i);

// The two explicit first-level rigid-stabilizer witness words and their
// index-shifted analogues; pair 2j-2, 2j-1 is supported at slot j.
// For d = 3 throws NotApplicableError (no closed-form words are known here).
std::vector<NamedElement> rist1_generators(int d);

// Word whose root permutation is the given lambda (over 0..d-1) obtained by
// decomposing lambda into the adjacent transpositions lambda_{a_1..a_{d-1}};
// the word length is congruent to the permutation parity mod 2.
GroupWord word_with_root_perm(const Perm& lambda);

// Bounded search for a word with prescribed level-1 sections (up to group
// equality) and root permutation. States are deduplicated by their
// (root permutation, reduced section words) signature.
struct SearchBudget {
  size_t max_states = 100000;
  size_t max_length = 128; // letters in the reduced word
};
struct SearchResult {
  std::optional<GroupWord> witness; // verified before being returned
  size_t states_explored = 0;
  bool budget_exhausted = false;
};
SearchResult witness_search(const WreathSystem& sys,
                            const std::vector<GroupWord>& target_sections,
                            const Perm& target_root,
                            const SearchBudget& budget,
                            const std::vector<GroupWord>& basis = {});

// Default search basis: generators plus every named element for this d.
std::vector<GroupWord> default_search_basis(int d);

} // namespace branchlab

#endif
