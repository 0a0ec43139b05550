#ifndef BRANCHLAB_QUOTIENT_KERNEL_HPP
#define BRANCHLAB_QUOTIENT_KERNEL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "branchlab/gd_presets.hpp"
#include "branchlab/tree_engine.hpp"

namespace branchlab {

// Element of St(k-hat)/Rist(k-hat): d^k residues mod 2^(k+1) subject to
// the block congruences (sum over each d^r-block = 0 mod 2^(r+1)).
struct QuotientCoset {
  int d = 0;
  int k = 0;
  std::vector<uint64_t> n;

  // Validates ranges and block congruences.
  QuotientCoset(int d_, int k_, std::vector<uint64_t> n_);
  QuotientCoset() = default;

  uint64_t modulus() const { return uint64_t{1} << (k + 1); }
  bool is_zero() const;
  bool operator==(const QuotientCoset&) const = default;
};

QuotientCoset coset_of(const WreathSystem& sys, const GroupWord& w, int k);
QuotientCoset coset_mul(const QuotientCoset& a, const QuotientCoset& b);
QuotientCoset coset_inverse(const QuotientCoset& a);

// Image of theta: d^k - 1 residues l_j with l_j in [0, alpha_j),
// alpha_j = 2^(k+1) when d does not divide j, else 2^(k-s) for j = d^s r.
struct ThetaImage {
  int d = 0;
  int k = 0;
  std::vector<uint64_t> l;

  bool operator==(const ThetaImage&) const = default;
};

// alpha_j for 1 <= j <= d^k - 1.
uint64_t theta_alpha(int d, int k, uint64_t j);

ThetaImage theta(const QuotientCoset& c);
QuotientCoset theta_inv(const ThetaImage& t);

// Connecting map of the inverse system: block sums halved, mod 2^(k+1).
QuotientCoset rho(const QuotientCoset& c);

// Depth-K truncation of a rigid-kernel element: rho-compatible tower of
// cosets with all residues even.
struct KernelElement {
  int d = 0;
  int K = 0;
  std::vector<QuotientCoset> levels; // levels[k-1] has level k

  // Validates rho-compatibility and evenness.
  KernelElement(int d_, int K_, std::vector<QuotientCoset> levels_);
  KernelElement() = default;

  bool operator==(const KernelElement&) const = default;
};

KernelElement kernel_mul(const KernelElement& a, const KernelElement& b);

// Free coordinates: for each level k, the residues n_{k,j} with d not
// dividing j, in increasing j order; each even, in [0, 2^(k+1)).
using FreeResidues = std::vector<std::vector<uint64_t>>;

// Unique kernel element extending the given free coordinates (the
// dependent coordinates follow the tower recursion).
KernelElement kernel_from_free(int d, int K, const FreeResidues& free_values);

// phi: per level, the halved free coordinates (n_{k,j}/2 mod 2^k, d∤j).
struct PhiImage {
  int d = 0;
  int K = 0;
  std::vector<std::vector<uint64_t>> eta; // eta[k-1][..] in C_{2^k}

  bool operator==(const PhiImage&) const = default;
};

PhiImage phi(const KernelElement& el);
// Two-sided inverse of phi (doubles the values and rebuilds the tower).
KernelElement phi_inv(const PhiImage& img);

// Element order within each depth truncation, plus whether the sequence
// has stabilized by depth K (evidence of finite order in the full kernel;
// a growing sequence is evidence of infinite order). Exact only about
// the truncations.
struct TorsionProfile {
  std::vector<uint64_t> order_at_depth; // index k-1: order of the depth-k truncation
  bool stabilized = false;
};
TorsionProfile torsion_profile(const KernelElement& el);

// The arithmetic chain showing Rist(k-hat) is not contained in
// H = { w : |w|_A = 0 mod 4 }: the tuple (a_1^(2^(k+1)), e, ..., e) is a
// valid psi_k-image of a rigid element, and iterated halving forces any
// preimage to have total exponent sum exactly 2.
struct BranchKernelReport {
  int d = 0;
  int k = 0;
  bool tuple_first_in_Hk = false;
  long long forced_total = 0;
  bool outside_H = false; // forced_total != 0 mod 4
  bool holds = false;     // all of the above
  // Optional search outcome (level 1 only): found word and its total.
  std::optional<std::string> witness_word;
  std::optional<long long> witness_total;
  bool search_attempted = false;
};
BranchKernelReport branch_kernel_check(int d, int k,
                                       const SearchBudget* search = nullptr);

} // namespace branchlab

#endif
