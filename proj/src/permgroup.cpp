#include "branchlab/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <unordered_set>

#include "branchlab/errors.hpp"

namespace branchlab {

namespace {

struct PermHash {
  size_t operator()(const Perm& p) const {
    size_t h = 1469598103934665603ULL;
    for (uint32_t v : p) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

} // namespace

PermGroupHandle::PermGroupHandle(std::vector<Perm> generators, uint64_t seed)
    : gens_(std::move(generators)) {
  if (gens_.empty())
    throw UsageError("permutation group needs at least one generator");
  degree_ = gens_.front().size();
  for (const Perm& g : gens_) {
    if (g.size() != degree_)
      throw UsageError("generators must share one degree");
    if (!perm_is_valid(g))
      throw UsageError("generator is not a permutation");
  }
  build(seed);
}

// The strong generating set at level l is cumulative: every generator
// inserted at level j >= l fixes the bases of levels < l.
bool PermGroupHandle::extend_orbit(size_t lvl) {
  ChainLevel& L = chain_[lvl];
  bool grew = false;
  if (L.orbit_pos.empty()) {
    L.orbit_pos.assign(degree_, -1);
    L.orbit_pos[L.base] = 0;
    L.orbit.push_back(L.base);
    L.transversal.push_back(perm_identity(degree_));
    grew = true;
  }
  for (size_t i = 0; i < L.orbit.size(); ++i) {
    for (size_t j = lvl; j < chain_.size(); ++j) {
      for (const Perm& s : chain_[j].strong_gens) {
        uint32_t q = s[L.orbit[i]];
        if (L.orbit_pos[q] < 0) {
          L.orbit_pos[q] = static_cast<int64_t>(L.orbit.size());
          L.orbit.push_back(q);
          L.transversal.push_back(perm_then(L.transversal[i], s));
          grew = true;
        }
      }
    }
  }
  return grew;
}

std::optional<Perm> PermGroupHandle::sift(const Perm& p, size_t from_level) const {
  Perm residue = p;
  for (size_t l = from_level; l < chain_.size(); ++l) {
    const ChainLevel& L = chain_[l];
    uint32_t img = residue[L.base];
    if (img == L.base) continue;
    int64_t pos = L.orbit_pos.empty() ? -1 : L.orbit_pos[img];
    if (pos < 0) return residue; // stuck: image outside the current orbit
    residue = perm_then(residue, perm_inverse(L.transversal[static_cast<size_t>(pos)]));
  }
  if (perm_is_identity(residue)) return std::nullopt;
  return residue;
}

void PermGroupHandle::add_strong_generator(size_t lvl, const Perm& g) {
  if (lvl == chain_.size()) {
    ChainLevel L;
    L.base = 0;
    for (size_t i = 0; i < degree_; ++i)
      if (g[i] != i) {
        L.base = static_cast<uint32_t>(i);
        break;
      }
    chain_.push_back(std::move(L));
  }
  chain_[lvl].strong_gens.push_back(g);
  // The new generator fixes every base above lvl, but can still extend
  // those orbits from non-base points.
  for (size_t l = 0; l <= lvl && l < chain_.size(); ++l) extend_orbit(l);
}

namespace {

size_t insertion_level(const std::vector<uint32_t>& bases, const Perm& r) {
  for (size_t l = 0; l < bases.size(); ++l)
    if (r[bases[l]] != bases[l]) return l;
  return bases.size();
}

} // namespace

void PermGroupHandle::build(uint64_t seed) {
  auto bases = [&]() {
    std::vector<uint32_t> b;
    b.reserve(chain_.size());
    for (const auto& L : chain_) b.push_back(L.base);
    return b;
  };

  auto insert_residue = [&](const Perm& p, size_t from) -> bool {
    auto res = sift(p, from);
    if (!res) return false;
    size_t lvl = std::max(from, insertion_level(bases(), *res));
    add_strong_generator(lvl, *res);
    return true;
  };

  for (const Perm& g : gens_)
    insert_residue(g, 0);

  // Randomized boost: sift seeded random subproducts to grow the chain
  // cheaply before the deterministic completion pass.
  std::mt19937_64 rng(seed ? seed : 1);
  for (int round = 0; round < 24 && !chain_.empty(); ++round) {
    Perm p = perm_identity(degree_);
    size_t len = 1 + static_cast<size_t>(rng() % 6);
    for (size_t i = 0; i < len; ++i)
      p = perm_then(p, gens_[static_cast<size_t>(rng() % gens_.size())]);
    insert_residue(p, 0);
  }

  // Deterministic completion (Schreier's lemma): at each level, every
  // Schreier generator of the cumulative strong set must sift to the
  // identity through the deeper chain. Additions restart the level scan
  // since they may have grown its orbit.
  std::function<void(size_t)> complete = [&](size_t lvl) {
    bool dirty = true;
    while (dirty) {
      dirty = false;
      extend_orbit(lvl);
      for (size_t i = 0; i < chain_[lvl].orbit.size() && !dirty; ++i) {
        for (size_t j = lvl; j < chain_.size() && !dirty; ++j) {
          for (size_t sj = 0; sj < chain_[j].strong_gens.size() && !dirty; ++sj) {
            const Perm s = chain_[j].strong_gens[sj];
            uint32_t p = chain_[lvl].orbit[i];
            uint32_t q = s[p];
            Perm sg = perm_then(
                perm_then(chain_[lvl].transversal[i], s),
                perm_inverse(
                    chain_[lvl]
                        .transversal[static_cast<size_t>(chain_[lvl].orbit_pos[q])]));
            auto res = sift(sg, lvl + 1);
            if (!res) continue;
            size_t at = std::max(lvl + 1, insertion_level(bases(), *res));
            add_strong_generator(at, *res);
            complete(at);
            dirty = true;
          }
        }
      }
    }
  };
  for (size_t l = chain_.size(); l-- > 0;) complete(l);

  order_ = 1;
  for (const auto& L : chain_) order_ *= static_cast<unsigned>(L.orbit.size());
  verify();
}

void PermGroupHandle::verify() {
  for (size_t l = 0; l < chain_.size(); ++l) {
    const ChainLevel& L = chain_[l];
    for (size_t i = 0; i < L.orbit.size(); ++i)
      for (size_t j = l; j < chain_.size(); ++j)
        for (const Perm& s : chain_[j].strong_gens) {
          uint32_t q = s[L.orbit[i]];
          Perm sg = perm_then(perm_then(L.transversal[i], s),
                              perm_inverse(L.transversal[static_cast<size_t>(L.orbit_pos[q])]));
          if (sift(sg, l + 1))
            throw InternalError("stabilizer chain failed verification");
        }
  }
  // Every original generator must be a member.
  for (const Perm& g : gens_)
    if (sift(g, 0))
      throw InternalError("stabilizer chain does not contain a generator");
}

bool PermGroupHandle::contains(const Perm& p) const {
  if (p.size() != degree_) return false;
  return !sift(p, 0).has_value();
}

BigInt group_order(const std::vector<Perm>& generators, uint64_t seed) {
  return PermGroupHandle(generators, seed).order();
}

BigInt group_order(const std::vector<LevelPermutation>& generators, uint64_t seed) {
  std::vector<Perm> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(g.map);
  return group_order(gens, seed);
}

Enumeration bfs_enumerate(const std::vector<Perm>& generators, size_t cap) {
  if (generators.empty())
    throw UsageError("permutation group needs at least one generator");
  size_t degree = generators.front().size();
  for (const Perm& g : generators)
    if (g.size() != degree || !perm_is_valid(g))
      throw UsageError("generators must be permutations of one degree");

  Enumeration out;
  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> queue;
  Perm id = perm_identity(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Perm cur = std::move(queue.front());
    queue.pop_front();
    for (const Perm& g : generators) {
      Perm next = perm_then(cur, g);
      if (seen.contains(next)) continue;
      if (seen.size() >= cap) {
        out.overflow = true;
        return out;
      }
      queue.push_back(next);
      seen.insert(std::move(next));
    }
  }
  out.elements.assign(seen.begin(), seen.end());
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

} // namespace branchlab
