#include "branchlab/tree_engine.hpp"

#include <deque>
#include <mutex>
#include <unordered_set>

namespace branchlab {

WreathSystem::WreathSystem(GroupConfig cfg, std::vector<GenRecursion> gens, std::string name)
    : cfg_(cfg), gens_(std::move(gens)), name_(std::move(name)) {
  if (gens_.empty())
    throw UsageError("wreath system needs at least one generator");
  const int d = cfg_.d;
  const int ng = static_cast<int>(gens_.size());
  for (const auto& g : gens_) {
    if (static_cast<int>(g.sections.size()) != d)
      throw UsageError("each generator needs exactly d section words");
    if (static_cast<int>(g.root.size()) != d || !perm_is_valid(g.root))
      throw UsageError("root permutation must be a bijection of {1..d}");
    for (const auto& s : g.sections) {
      if (s.size() > 1) short_sections_ = false;
      for (const Letter& l : s.letters())
        if (l.gen > ng)
          throw UsageError("section references generator a" + std::to_string(l.gen) +
                           " beyond the alphabet");
    }
  }
}

const WreathSystem::GenRecursion& WreathSystem::generator(int i) const {
  if (i < 1 || i > num_generators())
    throw UsageError("generator index " + std::to_string(i) + " out of range");
  return gens_[static_cast<size_t>(i - 1)];
}

bool WreathSystem::memo_lookup(const std::string& key, bool& out) const {
  std::shared_lock lock(memo_->mutex);
  auto it = memo_->map.find(key);
  if (it == memo_->map.end()) return false;
  out = it->second;
  return true;
}

void WreathSystem::memo_store(const std::string& key, bool value) const {
  std::unique_lock lock(memo_->mutex);
  memo_->map.emplace(key, value);
}

size_t WreathSystem::memo_size() const {
  std::shared_lock lock(memo_->mutex);
  return memo_->map.size();
}

uint64_t level_size_checked(const WreathSystem& sys, int k) {
  if (k < 0) throw UsageError("level must be non-negative");
  uint64_t n = 1;
  for (int i = 0; i < k; ++i) {
    n *= static_cast<uint64_t>(sys.d());
    if (n > sys.max_level_vertices())
      throw ResourceError("level " + std::to_string(k) + " exceeds the vertex bound " +
                          std::to_string(sys.max_level_vertices()));
  }
  return n;
}

uint64_t vertex_index(const Vertex& v, int d) {
  uint64_t idx = 0;
  for (int x : v) idx = idx * static_cast<uint64_t>(d) + static_cast<uint64_t>(x - 1);
  return idx;
}

Vertex vertex_at(uint64_t index, int d, int k) {
  Vertex v(static_cast<size_t>(k));
  for (int j = k - 1; j >= 0; --j) {
    v[static_cast<size_t>(j)] = static_cast<int>(index % static_cast<uint64_t>(d)) + 1;
    index /= static_cast<uint64_t>(d);
  }
  return v;
}

namespace {

// Section of a single signed letter at 0-based slot pos.
GroupWord letter_section(const WreathSystem& sys, const Letter& l, uint32_t pos) {
  const auto& rec = sys.generator(l.gen);
  if (l.sign > 0) return rec.sections[pos];
  // a^-1|_u = (a|_{a^-1(u)})^-1
  uint32_t pre = perm_inverse(rec.root)[pos];
  return rec.sections[pre].inverse();
}

uint32_t letter_image(const WreathSystem& sys, const Letter& l, uint32_t pos) {
  const auto& rec = sys.generator(l.gen);
  return l.sign > 0 ? rec.root[pos] : perm_inverse(rec.root)[pos];
}

// One level of the walk: image of slot x and the section word there.
std::pair<uint32_t, GroupWord> step(const WreathSystem& sys, const GroupWord& w, uint32_t x) {
  uint32_t pos = x;
  GroupWord sec;
  for (const Letter& l : w.letters()) {
    sec = sec * letter_section(sys, l, pos);
    pos = letter_image(sys, l, pos);
  }
  return {pos, sec};
}

} // namespace

Vertex act(const WreathSystem& sys, const GroupWord& w, const Vertex& v) {
  Vertex out;
  out.reserve(v.size());
  GroupWord cur = w;
  for (int x : v) {
    if (x < 1 || x > sys.d())
      throw UsageError("vertex letter " + std::to_string(x) + " out of range");
    auto [img, sec] = step(sys, cur, static_cast<uint32_t>(x - 1));
    out.push_back(static_cast<int>(img) + 1);
    cur = std::move(sec);
  }
  return out;
}

GroupWord section(const WreathSystem& sys, const GroupWord& w, const Vertex& u) {
  GroupWord cur = w;
  for (int x : u) {
    if (x < 1 || x > sys.d())
      throw UsageError("vertex letter " + std::to_string(x) + " out of range");
    cur = step(sys, cur, static_cast<uint32_t>(x - 1)).second;
  }
  return cur;
}

WreathDecomposition decompose(const WreathSystem& sys, const GroupWord& w) {
  const int d = sys.d();
  WreathDecomposition dec;
  dec.sections.resize(static_cast<size_t>(d));
  dec.root.resize(static_cast<size_t>(d));
  std::vector<uint32_t> pos(static_cast<size_t>(d));
  for (int x = 0; x < d; ++x) pos[static_cast<size_t>(x)] = static_cast<uint32_t>(x);
  for (const Letter& l : w.letters()) {
    const auto& rec = sys.generator(l.gen);
    Perm root = l.sign > 0 ? rec.root : perm_inverse(rec.root);
    for (int x = 0; x < d; ++x) {
      auto& p = pos[static_cast<size_t>(x)];
      GroupWord ls = l.sign > 0 ? rec.sections[p] : rec.sections[root[p]].inverse();
      dec.sections[static_cast<size_t>(x)] = dec.sections[static_cast<size_t>(x)] * ls;
      p = root[p];
    }
  }
  for (int x = 0; x < d; ++x) dec.root[static_cast<size_t>(x)] = pos[static_cast<size_t>(x)];
  return dec;
}

namespace {

struct LevelPermBuilder {
  const WreathSystem& sys;
  // memo per level: word key -> index into perms[level]
  std::vector<std::unordered_map<std::string, size_t>> memo;
  // deque keeps references stable across pushes
  std::vector<std::deque<Perm>> perms;

  explicit LevelPermBuilder(const WreathSystem& s, int k) : sys(s), memo(k + 1), perms(k + 1) {}

  const Perm& build(const GroupWord& w, int k) {
    auto& level_memo = memo[static_cast<size_t>(k)];
    std::string key = w.key();
    if (auto it = level_memo.find(key); it != level_memo.end())
      return perms[static_cast<size_t>(k)][it->second];
    Perm result;
    if (k == 0) {
      result = perm_identity(1);
    } else {
      WreathDecomposition dec = decompose(sys, w);
      const int d = sys.d();
      uint64_t child_size = 1;
      for (int i = 1; i < k; ++i) child_size *= static_cast<uint64_t>(d);
      result.resize(static_cast<size_t>(child_size) * static_cast<size_t>(d));
      for (int x = 0; x < d; ++x) {
        const Perm& child = build(dec.sections[static_cast<size_t>(x)], k - 1);
        uint64_t src = static_cast<uint64_t>(x) * child_size;
        uint64_t dst = static_cast<uint64_t>(dec.root[static_cast<size_t>(x)]) * child_size;
        for (uint64_t i = 0; i < child_size; ++i)
          result[src + i] = static_cast<uint32_t>(dst) + child[i];
      }
    }
    auto& bucket = perms[static_cast<size_t>(k)];
    bucket.push_back(std::move(result));
    level_memo.emplace(std::move(key), bucket.size() - 1);
    return bucket.back();
  }
};

} // namespace

LevelPermutation level_perm(const WreathSystem& sys, const GroupWord& w, int k) {
  level_size_checked(sys, k);
  LevelPermBuilder builder(sys, k);
  LevelPermutation out;
  out.d = sys.d();
  out.level = k;
  out.map = builder.build(w, k);
  return out;
}

IdentityCheck is_identity_stats(const WreathSystem& sys, const GroupWord& w) {
  if (!sys.has_short_sections())
    throw UsageError("identity decision requires single-letter generator sections");
  if (sys.zero_exponent_law()) {
    if (!exponent_vector(w, sys.num_generators()).is_zero())
      return {false, 0, -2};
  }
  const std::string top_key = w.key();
  if (bool cached = false; sys.memo_lookup(top_key, cached))
    return {cached, 0, cached ? -1 : -2};

  struct Member {
    GroupWord word;
    int depth;
  };
  std::deque<Member> queue;
  std::unordered_set<std::string> visited;
  std::vector<std::string> member_keys;
  queue.push_back({w, 0});
  visited.insert(top_key);
  member_keys.push_back(top_key);

  while (!queue.empty()) {
    Member m = std::move(queue.front());
    queue.pop_front();
    std::string key = m.word.key();
    // Known identities contribute no witness and only identity sections.
    if (bool cached = false; sys.memo_lookup(key, cached) && cached) continue;
    WreathDecomposition dec = decompose(sys, m.word);
    if (!perm_is_identity(dec.root)) {
      sys.memo_store(top_key, false);
      sys.memo_store(key, false);
      return {false, visited.size(), m.depth};
    }
    for (auto& s : dec.sections) {
      std::string skey = s.key();
      if (visited.insert(skey).second) {
        member_keys.push_back(std::move(skey));
        queue.push_back({std::move(s), m.depth + 1});
      }
    }
  }
  for (const auto& key : member_keys) sys.memo_store(key, true);
  return {true, visited.size(), -1};
}

bool is_identity(const WreathSystem& sys, const GroupWord& w) {
  return is_identity_stats(sys, w).isIdentity;
}

bool equal(const WreathSystem& sys, const GroupWord& u, const GroupWord& v) {
  return is_identity(sys, u * v.inverse());
}

std::vector<GroupWord> section_tuple(const WreathSystem& sys, const GroupWord& w, int k) {
  level_size_checked(sys, k);
  if (!level_perm(sys, w, k).trivial())
    throw UsageError("not in level stabilizer");
  std::vector<GroupWord> cur{w};
  for (int level = 0; level < k; ++level) {
    std::vector<GroupWord> next;
    next.reserve(cur.size() * static_cast<size_t>(sys.d()));
    for (const GroupWord& u : cur) {
      WreathDecomposition dec = decompose(sys, u);
      for (auto& s : dec.sections) next.push_back(std::move(s));
    }
    cur = std::move(next);
  }
  return cur;
}

} // namespace branchlab
