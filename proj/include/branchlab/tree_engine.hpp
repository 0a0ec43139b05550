#ifndef BRANCHLAB_TREE_ENGINE_HPP
#define BRANCHLAB_TREE_ENGINE_HPP

#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "branchlab/perm.hpp"
#include "branchlab/words.hpp"

namespace branchlab {

// A self-similar action given by wreath recursions of its generators:
// generator g has d section words and a root permutation lambda_g. The
// number of generators is independent of the tree arity d.
class WreathSystem {
public:
  struct GenRecursion {
    std::vector<GroupWord> sections; // d entries, slot x-1 holds g|_x
    Perm root;                       // lambda_g over {0..d-1}
  };

  WreathSystem(GroupConfig cfg, std::vector<GenRecursion> gens, std::string name);

  int d() const { return cfg_.d; }
  const GroupConfig& config() const { return cfg_; }
  int num_generators() const { return static_cast<int>(gens_.size()); }
  const GenRecursion& generator(int i) const; // 1-based
  const std::string& name() const { return name_; }

  // True when every generator section is a single letter or empty; the
  // identity decision procedure requires it (section closure stays finite).
  bool has_short_sections() const { return short_sections_; }

  // Enables the exponent-vector fast rejection in is_identity. Only valid
  // for systems where the identity forces all exponent sums to vanish.
  bool zero_exponent_law() const { return zero_exponent_law_; }
  void set_zero_exponent_law(bool v) { zero_exponent_law_ = v; }

  uint64_t max_level_vertices() const { return max_level_vertices_; }
  void set_max_level_vertices(uint64_t v) { max_level_vertices_ = v; }

  // Shared memo for is_identity: concurrent reads, serialized inserts.
  bool memo_lookup(const std::string& key, bool& out) const;
  void memo_store(const std::string& key, bool value) const;
  size_t memo_size() const;

  // Same system with an empty memo; parallel batch kernels give each
  // thread its own clone to avoid lock contention.
  WreathSystem clone() const { return WreathSystem(cfg_, gens_, name_, zero_exponent_law_,
                                                   max_level_vertices_); }

private:
  WreathSystem(GroupConfig cfg, std::vector<GenRecursion> gens, std::string name,
               bool zero_exponent_law, uint64_t max_level_vertices)
      : WreathSystem(cfg, std::move(gens), std::move(name)) {
    zero_exponent_law_ = zero_exponent_law;
    max_level_vertices_ = max_level_vertices;
  }

  struct IdentityMemo {
    mutable std::shared_mutex mutex;
    std::unordered_map<std::string, bool> map;
  };

  GroupConfig cfg_;
  std::vector<GenRecursion> gens_;
  std::string name_;
  bool short_sections_ = true;
  bool zero_exponent_law_ = false;
  uint64_t max_level_vertices_ = 10'000'000;
  std::unique_ptr<IdentityMemo> memo_ = std::make_unique<IdentityMemo>();
};

// Number of level-k vertices, with the system's resource guard applied.
uint64_t level_size_checked(const WreathSystem& sys, int k);

uint64_t vertex_index(const Vertex& v, int d);
Vertex vertex_at(uint64_t index, int d, int k);

// Image of vertex v under the automorphism represented by w.
Vertex act(const WreathSystem& sys, const GroupWord& w, const Vertex& v);

// The section w|_u, freely reduced.
GroupWord section(const WreathSystem& sys, const GroupWord& w, const Vertex& u);

// All level-1 sections (w|_1, ..., w|_d) plus the root permutation,
// computed in one pass over the word.
struct WreathDecomposition {
  std::vector<GroupWord> sections;
  Perm root;
};
WreathDecomposition decompose(const WreathSystem& sys, const GroupWord& w);

// Induced permutation of X^k, assembled recursively with section sharing.
LevelPermutation level_perm(const WreathSystem& sys, const GroupWord& w, int k);

// Exact word-problem decision by memoized closure under sections.
struct IdentityCheck {
  bool isIdentity;
  size_t closureSize;   // distinct reduced words visited
  int witnessDepth;     // section depth of the first non-fixing member, -1 if identity
};
IdentityCheck is_identity_stats(const WreathSystem& sys, const GroupWord& w);
bool is_identity(const WreathSystem& sys, const GroupWord& w);
bool equal(const WreathSystem& sys, const GroupWord& u, const GroupWord& v);

// psi_k: the d^k-tuple of level-k sections in vertex-index order.
// Requires w in St(k-hat); throws UsageError("not in level stabilizer").
std::vector<GroupWord> section_tuple(const WreathSystem& sys, const GroupWord& w, int k);

} // namespace branchlab

#endif
