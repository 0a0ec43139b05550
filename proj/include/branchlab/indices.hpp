#ifndef BRANCHLAB_INDICES_HPP
#define BRANCHLAB_INDICES_HPP

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "branchlab/permgroup.hpp"

namespace branchlab {

using HighFloat = boost::multiprecision::cpp_bin_float_50;

// An index value d!^e_factorial / 2^e_two kept in factored form; the
// division is exact (checked via the 2-adic valuation of d!).
struct FactoredIndex {
  int d = 0;
  BigInt e_factorial;
  BigInt e_two;

  BigInt value() const;              // expands; throws ResourceError if huge
  std::optional<BigInt> value_if_at_most_digits(size_t max_digits) const;
  BigInt decimal_digits() const;     // digit count of the expanded value
  bool division_exact() const;       // 2^e_two divides d!^e_factorial
  bool operator==(const FactoredIndex&) const = default;
};

BigInt factorial(int n);
// Exponent of 2 in n! (Legendre).
BigInt two_adic_valuation_factorial(int n);

// Closed forms. geometric_sum(d, k) = (d^k - 1)/(d - 1).
BigInt geometric_sum(int d, int k);
FactoredIndex index_g_st(int d, int k);        // [G_d : St(k-hat)]
FactoredIndex index_st_st(int d, int k);       // [St(k-hat) : St(k+1-hat)]
FactoredIndex index_aut_st(int d, int k);      // [Aut(T) : St_Aut(k-hat)]
BigInt rist_exponent_t(int d, int k);          // [St(k-hat):Rist(k-hat)] = 2^t
FactoredIndex index_st_rist(int d, int k);

struct IndexRow {
  int k;
  FactoredIndex st_next;   // [St(k) : St(k+1)]
  FactoredIndex g_next;    // [G_d : St(k+1)]
  FactoredIndex aut_next;  // [Aut(T) : St_Aut(k+1)]
  FactoredIndex st_rist;   // [St(k) : Rist(k)]
};

struct IndexTable {
  int d;
  std::vector<IndexRow> rows; // k = 1..k_max
};

IndexTable index_table(int d, int k_max);

// dim_H = 1 - log 2 / (d log d!), plus the finite level ratios
// r_k = (A_k log d! - B_k log 2) / (C_k log d!) with A_k = C_k = (d^k-1)/(d-1)
// and B_k = (d^(k-1)-1)/(d-1).
struct HausdorffResult {
  int d;
  HighFloat closed_form;
  std::vector<HighFloat> ratios; // r_1..r_kmax
};

HausdorffResult hausdorff_dimension(int d, int k_max = 25);

} // namespace branchlab

#endif
