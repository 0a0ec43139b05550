#ifndef BRANCHLAB_PARALLEL_HPP
#define BRANCHLAB_PARALLEL_HPP

#include <cstdint>
#include <vector>

#include "branchlab/tree_engine.hpp"
#include "branchlab/trace_monoid.hpp"
#include "branchlab/words.hpp"

// Data-parallel kernels. Each has a serial reference implementation; the
// OpenMP variants must return bit-identical results, which the test suite
// and the benchmark target both rely on.
namespace branchlab::par {

int hardware_threads();

// Level permutation computed flat: one independent act() walk per vertex.
// Reference for, and parallel alternative to, the recursive assembly in
// tree_engine.
LevelPermutation level_perm_flat_serial(const WreathSystem& sys, const GroupWord& w, int k);
LevelPermutation level_perm_flat_parallel(const WreathSystem& sys, const GroupWord& w, int k);

// Identity decisions over a batch of words.
std::vector<uint8_t> batch_is_identity_serial(const WreathSystem& sys,
                                              const std::vector<GroupWord>& words);
std::vector<uint8_t> batch_is_identity_parallel(const WreathSystem& sys,
                                                const std::vector<GroupWord>& words);

// Trace-monoid equality versus the tree-engine word problem over all pairs
// of the given positive words; returns the number of disagreeing pairs.
uint64_t trace_tree_discrepancies_serial(const WreathSystem& sys,
                                         const std::vector<TraceWord>& words);
uint64_t trace_tree_discrepancies_parallel(const WreathSystem& sys,
                                           const std::vector<TraceWord>& words);

// Trace-class counting split by first letter across threads.
uint64_t growth_count_serial(int d, int n);
uint64_t growth_count_parallel(int d, int n);

} // namespace branchlab::par

#endif
