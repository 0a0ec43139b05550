#include "branchlab/trace_monoid.hpp"

#include <algorithm>

#include "branchlab/errors.hpp"

namespace branchlab {

bool commutes(int i, int j, int d) {
  if (i < 1 || i > d || j < 1 || j > d)
    throw UsageError("generator index out of range 1.." + std::to_string(d));
  int diff = i > j ? i - j : j - i;
  return 1 < diff && diff < d - 1;
}

namespace {

void check_trace(const TraceWord& w, int d) {
  for (int x : w)
    if (x < 1 || x > d)
      throw UsageError("trace letter " + std::to_string(x) + " out of range 1.." +
                       std::to_string(d));
}

} // namespace

TraceWord normal_form(const TraceWord& w, int d) {
  check_trace(w, d);
  const size_t n = w.size();
  std::vector<bool> used(n, false);
  TraceWord out;
  out.reserve(n);
  for (size_t step = 0; step < n; ++step) {
    size_t best = n;
    for (size_t pos = 0; pos < n; ++pos) {
      if (used[pos]) continue;
      bool available = true;
      for (size_t q = 0; q < pos && available; ++q)
        if (!used[q] && !commutes(w[q], w[pos], d)) available = false;
      if (available && (best == n || w[pos] < w[best])) best = pos;
    }
    used[best] = true;
    out.push_back(w[best]);
  }
  return out;
}

bool monoid_equal(const TraceWord& u, const TraceWord& v, int d) {
  if (u.size() != v.size()) return false;
  return normal_form(u, d) == normal_form(v, d);
}

TraceWord trace_from_word(const GroupWord& w) {
  TraceWord t;
  t.reserve(w.size());
  for (const Letter& l : w.letters()) {
    if (l.sign < 0)
      throw UsageError("positive word expected, found inverse letter a" +
                       std::to_string(l.gen) + "'");
    t.push_back(l.gen);
  }
  return t;
}

GroupWord word_from_trace(const TraceWord& t) {
  std::vector<Letter> letters;
  letters.reserve(t.size());
  for (int x : t) letters.push_back(Letter{x, 1});
  return GroupWord(std::span<const Letter>(letters));
}

bool projection_equal(const TraceWord& u, const TraceWord& v, int d) {
  check_trace(u, d);
  check_trace(v, d);
  auto project = [](const TraceWord& w, int a, int b) {
    TraceWord p;
    for (int x : w)
      if (x == a || x == b) p.push_back(x);
    return p;
  };
  for (int a = 1; a <= d; ++a)
    for (int b = a; b <= d; ++b) {
      if (a != b && commutes(a, b, d)) continue;
      if (project(u, a, b) != project(v, a, b)) return false;
    }
  return true;
}

namespace {

// Appending `a` to a lex-normal word keeps it normal iff no larger letter
// commuting with `a` can see it across a commuting gap.
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

std::vector<uint64_t> growth_series_mobius(int d, int n) {
  if (d > 20) throw ResourceError("clique enumeration supports d <= 20");
  // Clique polynomial of the commutation graph: mu[c] = sum over cliques
  // of size c of (-1)^c.
  std::vector<long long> mu(static_cast<size_t>(d + 1), 0);
  for (uint32_t mask = 0; mask < (uint32_t{1} << d); ++mask) {
    int bits = __builtin_popcount(mask);
    bool clique = true;
    for (int a = 1; a <= d && clique; ++a) {
      if (!(mask & (uint32_t{1} << (a - 1)))) continue;
      for (int b = a + 1; b <= d && clique; ++b) {
        if (!(mask & (uint32_t{1} << (b - 1)))) continue;
        if (!commutes(a, b, d)) clique = false;
      }
    }
    if (clique) mu[static_cast<size_t>(bits)] += (bits % 2 == 0) ? 1 : -1;
  }
  // 1/mu(t): convolution with delta.
  std::vector<uint64_t> f(static_cast<size_t>(n + 1), 0);
  f[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long long acc = 0;
    for (int c = 1; c <= std::min(m, d); ++c)
      acc -= mu[static_cast<size_t>(c)] * static_cast<long long>(f[static_cast<size_t>(m - c)]);
    if (acc < 0) throw InternalError("growth series went negative");
    f[static_cast<size_t>(m)] = static_cast<uint64_t>(acc);
  }
  return f;
}

uint64_t growth_count(int d, int n, uint64_t work_bound) {
  if (n < 0) throw UsageError("length must be non-negative");
  if (n == 0) return 1;
  // Estimate the enumeration work from the recurrence before committing.
  auto series = growth_series_mobius(d, n);
  uint64_t work = 0;
  for (int m = 0; m <= n; ++m) {
    uint64_t step = series[static_cast<size_t>(m)] * static_cast<uint64_t>(d);
    if (step / static_cast<uint64_t>(d) != series[static_cast<size_t>(m)] ||
        work + step < work)
      throw ResourceError("growth enumeration too large");
    work += step;
  }
  if (work > work_bound)
    throw ResourceError("growth enumeration work " + std::to_string(work) +
                        " exceeds bound " + std::to_string(work_bound));
  TraceWord w;
  w.reserve(static_cast<size_t>(n));
  return dfs_normal(w, n, d);
}

} // namespace branchlab
