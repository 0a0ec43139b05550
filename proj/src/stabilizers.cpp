#include "branchlab/stabilizers.hpp"

namespace branchlab {

namespace {

uint64_t mod_pow2(long long value, int exp) {
  uint64_t m = uint64_t{1} << exp;
  long long r = value % static_cast<long long>(m);
  if (r < 0) r += static_cast<long long>(m);
  return static_cast<uint64_t>(r);
}

uint64_t pow_u64(uint64_t base, int exp) {
  uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

} // namespace

bool in_H(const GroupWord& w, int k, int num_generators) {
  if (k < 1) throw UsageError("H_k requires k >= 1");
  if (k > 61) throw ResourceError("H_k modulus exceeds 2^62");
  return mod_pow2(exponent_vector(w, num_generators).total, k + 1) == 0;
}

bool in_level_stabilizer(const WreathSystem& sys, const GroupWord& w, int k) {
  if (k < 0) throw UsageError("level must be non-negative");
  return level_perm(sys, w, k).trivial();
}

bool BlockCongruenceProfile::all_zero() const {
  for (const auto& row : residues)
    for (uint64_t v : row)
      if (v != 0) return false;
  return true;
}

BlockCongruenceProfile tuple_criterion_totals(const std::vector<long long>& totals, int d,
                                              int k) {
  if (k < 1) throw UsageError("tuple criterion requires k >= 1");
  uint64_t expected = pow_u64(static_cast<uint64_t>(d), k);
  if (totals.size() != expected)
    throw UsageError("tuple length " + std::to_string(totals.size()) + " != d^k = " +
                     std::to_string(expected));
  BlockCongruenceProfile profile;
  profile.d = d;
  profile.k = k;
  profile.residues.resize(static_cast<size_t>(k));
  for (int r = 1; r <= k; ++r) {
    uint64_t block = pow_u64(static_cast<uint64_t>(d), r);
    uint64_t blocks = expected / block;
    auto& row = profile.residues[static_cast<size_t>(r - 1)];
    row.resize(blocks);
    for (uint64_t t = 0; t < blocks; ++t) {
      long long sum = 0;
      for (uint64_t i = 0; i < block; ++i)
        sum += totals[static_cast<size_t>(block * t + i)];
      row[t] = mod_pow2(sum, r + 1);
    }
  }
  return profile;
}

BlockCongruenceProfile tuple_criterion(const std::vector<GroupWord>& tuple, int d, int k) {
  std::vector<long long> totals;
  totals.reserve(tuple.size());
  for (const auto& w : tuple) totals.push_back(exponent_vector(w, d).total);
  return tuple_criterion_totals(totals, d, k);
}

bool in_rigid_stabilizer(const WreathSystem& sys, const GroupWord& w, int k) {
  if (k < 1) throw UsageError("rigid stabilizer check requires k >= 1");
  if (!in_level_stabilizer(sys, w, k)) return false;
  for (const GroupWord& s : section_tuple(sys, w, k))
    if (!in_H(s, k, sys.num_generators())) return false;
  return true;
}

bool in_rist_of_vertex(const WreathSystem& sys, const GroupWord& w, const Vertex& u) {
  int k = static_cast<int>(u.size());
  if (k == 0) return true; // every element is supported below the root
  if (!in_level_stabilizer(sys, w, k)) return false;
  uint64_t u_idx = vertex_index(u, sys.d());
  auto tuple = section_tuple(sys, w, k);
  for (uint64_t i = 0; i < tuple.size(); ++i) {
    if (i == u_idx) continue;
    if (!is_identity(sys, tuple[static_cast<size_t>(i)])) return false;
  }
  return true;
}

std::vector<GroupWord> fractal_lift_exists(const WreathSystem& sys, const GroupWord& w, int k,
                                           int x) {
  if (k < 1) throw UsageError("fractal lift requires k >= 1");
  if (x < 1 || x > sys.d()) throw UsageError("slot out of range");
  if (!in_level_stabilizer(sys, w, k))
    throw UsageError("not in level stabilizer");
  std::vector<GroupWord> tuple(static_cast<size_t>(sys.d()));
  tuple[static_cast<size_t>(x - 1)] = w;
  long long total = exponent_vector(w, sys.num_generators()).total;
  if (mod_pow2(total, 2) != 0) {
    // stabilizer membership makes the total even; place a second copy
    int x2 = x % sys.d() + 1;
    tuple[static_cast<size_t>(x2 - 1)] = w;
  }
  return tuple;
}

} // namespace branchlab
