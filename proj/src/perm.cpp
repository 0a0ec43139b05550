#include "branchlab/perm.hpp"

#include <algorithm>

#include "branchlab/errors.hpp"

namespace branchlab {

Perm perm_identity(size_t n) {
  Perm p(n);
  for (size_t i = 0; i < n; ++i) p[i] = static_cast<uint32_t>(i);
  return p;
}

bool perm_is_identity(const Perm& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

Perm perm_then(const Perm& p, const Perm& q) {
  if (p.size() != q.size())
    throw UsageError("permutation degree mismatch");
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<uint32_t>(i);
  return r;
}

bool perm_is_valid(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (uint32_t v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

int perm_parity(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  int parity = 1;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    size_t len = 0;
    for (size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) parity = -parity;
  }
  return parity;
}

std::string perm_cycles(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) {
      seen[i] = true;
      continue;
    }
    out += '(';
    bool first = true;
    for (size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

LevelPermutation truncate_level(const LevelPermutation& p) {
  if (p.level <= 0)
    throw UsageError("cannot truncate a level-0 permutation");
  size_t child = p.map.size() / static_cast<size_t>(p.d);
  LevelPermutation out;
  out.d = p.d;
  out.level = p.level - 1;
  out.map.resize(child);
  for (size_t i = 0; i < child; ++i)
    out.map[i] = p.map[i * p.d] / p.d;
  return out;
}

} // namespace branchlab
