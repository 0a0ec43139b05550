#ifndef BRANCHLAB_PERMGROUP_HPP
#define BRANCHLAB_PERMGROUP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "branchlab/perm.hpp"

namespace branchlab {

using BigInt = boost::multiprecision::cpp_int;

// Finite permutation group given by generators; the order comes from a
// stabilizer chain (randomized Schreier-Sims build followed by a full
// deterministic verification of all Schreier generators).
class PermGroupHandle {
public:
  explicit PermGroupHandle(std::vector<Perm> generators, uint64_t seed = 1);

  size_t degree() const { return degree_; }
  const BigInt& order() const { return order_; }
  bool contains(const Perm& p) const;

private:
  struct ChainLevel {
    uint32_t base;
    std::vector<Perm> strong_gens;
    // orbit of base under strong_gens; transversal[pt] maps base -> pt
    std::vector<int64_t> orbit_pos; // -1 if outside orbit
    std::vector<uint32_t> orbit;
    std::vector<Perm> transversal;
  };

  void build(uint64_t seed);
  bool extend_orbit(size_t lvl);
  // Returns the residue of p after sifting; identity residue means member.
  std::optional<Perm> sift(const Perm& p, size_t from_level) const;
  void add_strong_generator(size_t lvl, const Perm& g);
  void verify();

  size_t degree_;
  std::vector<Perm> gens_;
  std::vector<ChainLevel> chain_;
  BigInt order_;
};

BigInt group_order(const std::vector<Perm>& generators, uint64_t seed = 1);
BigInt group_order(const std::vector<LevelPermutation>& generators, uint64_t seed = 1);

// Breadth-first enumeration of the generated group. If more than cap
// elements are reached the overflow flag is set and elements is partial.
struct Enumeration {
  bool overflow = false;
  std::vector<Perm> elements;
};
Enumeration bfs_enumerate(const std::vector<Perm>& generators, size_t cap);

} // namespace branchlab

#endif
