#ifndef BRANCHLAB_TRACE_MONOID_HPP
#define BRANCHLAB_TRACE_MONOID_HPP

#include <cstdint>
#include <vector>

#include "branchlab/words.hpp"

namespace branchlab {

// Positive words are plain generator-index sequences (1-based).
using TraceWord = std::vector<int>;

// a_i and a_j commute iff 1 < |j - i| < d - 1 (plain difference, not
// cyclic; in particular a_1 and a_d never commute).
bool commutes(int i, int j, int d);

// Lexicographically least representative of the commutation class,
// computed by greedy extraction of the smallest letter that is minimal in
// the dependence order on positions.
TraceWord normal_form(const TraceWord& w, int d);

bool monoid_equal(const TraceWord& u, const TraceWord& v, int d);

TraceWord trace_from_word(const GroupWord& w);
GroupWord word_from_trace(const TraceWord& t);

// Number of distinct trace classes of positive words of length n, counted
// by DFS over lex-normal words. Guarded by a work bound (checked against
// the recurrence estimate before enumerating).
uint64_t growth_count(int d, int n, uint64_t work_bound = 500'000'000);

// Independent route: coefficients of 1/mu(t) where mu is the clique
// polynomial of the commutation graph. Returns f_0..f_n.
std::vector<uint64_t> growth_series_mobius(int d, int n);

// Independent equality route (test oracle): positive words are trace
// equivalent iff their projections onto every dependent letter pair agree.
bool projection_equal(const TraceWord& u, const TraceWord& v, int d);

} // namespace branchlab

#endif
