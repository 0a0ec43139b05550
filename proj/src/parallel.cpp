#include "branchlab/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace branchlab::par {

int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

// Image index of the level-k vertex with the given index: one walk down
// the tree, independent of every other vertex.
uint64_t act_index(const WreathSystem& sys, const GroupWord& w, uint64_t idx, int k) {
  Vertex v = vertex_at(idx, sys.d(), k);
  return vertex_index(act(sys, w, v), sys.d());
}

LevelPermutation level_perm_flat(const WreathSystem& sys, const GroupWord& w, int k,
                                 bool parallel) {
  uint64_t n = level_size_checked(sys, k);
  LevelPermutation out;
  out.d = sys.d();
  out.level = k;
  out.map.resize(n);
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < static_cast<int64_t>(n); ++i)
      out.map[static_cast<size_t>(i)] =
          static_cast<uint32_t>(act_index(sys, w, static_cast<uint64_t>(i), k));
  } else {
    for (uint64_t i = 0; i < n; ++i)
      out.map[static_cast<size_t>(i)] = static_cast<uint32_t>(act_index(sys, w, i, k));
  }
  return out;
}

} // namespace

LevelPermutation level_perm_flat_serial(const WreathSystem& sys, const GroupWord& w, int k) {
  return level_perm_flat(sys, w, k, false);
}

LevelPermutation level_perm_flat_parallel(const WreathSystem& sys, const GroupWord& w, int k) {
  return level_perm_flat(sys, w, k, true);
}

std::vector<uint8_t> batch_is_identity_serial(const WreathSystem& sys,
                                              const std::vector<GroupWord>& words) {
  std::vector<uint8_t> out(words.size());
  for (size_t i = 0; i < words.size(); ++i)
    out[i] = is_identity(sys, words[i]) ? 1 : 0;
  return out;
}

std::vector<uint8_t> batch_is_identity_parallel(const WreathSystem& sys,
                                                const std::vector<GroupWord>& words) {
  std::vector<uint8_t> out(words.size());
#pragma omp parallel
  {
    WreathSystem local = sys.clone(); // per-thread memo
#pragma omp for schedule(dynamic, 16)
    for (int64_t i = 0; i < static_cast<int64_t>(words.size()); ++i)
      out[static_cast<size_t>(i)] = is_identity(local, words[static_cast<size_t>(i)]) ? 1 : 0;
  }
  return out;
}

namespace {

uint64_t trace_tree_discrepancies(const WreathSystem& sys,
                                  const std::vector<TraceWord>& words, bool parallel) {
  const int d = sys.d();
  const size_t n = words.size();
  std::vector<TraceWord> nf(n);
  std::vector<GroupWord> gw(n);
  for (size_t i = 0; i < n; ++i) {
    nf[i] = normal_form(words[i], d);
    gw[i] = word_from_trace(words[i]);
  }
  uint64_t mismatches = 0;
  const int64_t total = static_cast<int64_t>(n);

  if (parallel) {
#pragma omp parallel reduction(+ : mismatches)
    {
      WreathSystem local = sys.clone(); // per-thread memo
#pragma omp for schedule(dynamic, 4)
      for (int64_t i = 0; i < total; ++i)
        for (int64_t j = i; j < total; ++j) {
          bool monoid = nf[static_cast<size_t>(i)] == nf[static_cast<size_t>(j)];
          bool tree = equal(local, gw[static_cast<size_t>(i)], gw[static_cast<size_t>(j)]);
          if (monoid != tree) ++mismatches;
        }
    }
    return mismatches;
  }
  for (int64_t i = 0; i < total; ++i)
    for (int64_t j = i; j < total; ++j) {
      bool monoid = nf[static_cast<size_t>(i)] == nf[static_cast<size_t>(j)];
      bool tree = equal(sys, gw[static_cast<size_t>(i)], gw[static_cast<size_t>(j)]);
      if (monoid != tree) ++mismatches;
    }
  return mismatches;
}

} // namespace

uint64_t trace_tree_discrepancies_serial(const WreathSystem& sys,
                                         const std::vector<TraceWord>& words) {
  return trace_tree_discrepancies(sys, words, false);
}

uint64_t trace_tree_discrepancies_parallel(const WreathSystem& sys,
                                           const std::vector<TraceWord>& words) {
  return trace_tree_discrepancies(sys, words, true);
}

namespace {

bool extension_normal(const TraceWord& w, int a, int d) {
  for (size_t i = w.size(); i-- > 0;) {
    int z = w[i];
    if (!commutes(z, a, d)) return true;
    if (z > a) return false;
  }
  return true;
}

uint64_t dfs_normal(TraceWord& w, int target_len, int d) {
  if (static_cast<int>(w.size()) == target_len) return 1;
  uint64_t total = 0;
  for (int a = 1; a <= d; ++a) {
    if (!extension_normal(w, a, d)) continue;
    w.push_back(a);
    total += dfs_normal(w, target_len, d);
    w.pop_back();
  }
  return total;
}

} // namespace

uint64_t growth_count_serial(int d, int n) { return growth_count(d, n); }

uint64_t growth_count_parallel(int d, int n) {
  if (n <= 0) return growth_count(d, n);
  growth_count(d, 0); // validates d
  // Same work guard as the serial path.
  auto series = growth_series_mobius(d, n);
  uint64_t work = 0;
  for (uint64_t f : series) work += f * static_cast<uint64_t>(d);
  if (work > 500'000'000)
    throw ResourceError("growth enumeration too large");
  uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (int a = 1; a <= d; ++a) {
    TraceWord w{a};
    total += dfs_normal(w, n, d);
  }
  return total;
}

} // namespace branchlab::par
