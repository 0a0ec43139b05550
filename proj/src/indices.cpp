#include "branchlab/indices.hpp"

#include "branchlab/errors.hpp"

namespace branchlab {

namespace {

void check_d(int d) {
  if (d < 3 || d % 2 == 0) throw UsageError("d must be odd and >= 3");
}

} // namespace

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt two_adic_valuation_factorial(int n) {
  BigInt v = 0;
  for (int p = 2; p <= n; p *= 2) v += n / p;
  return v;
}

BigInt geometric_sum(int d, int k) {
  BigInt num = boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(k)) - 1;
  BigInt q, r;
  boost::multiprecision::divide_qr(num, BigInt(d - 1), q, r);
  if (r != 0) throw InternalError("geometric sum not integral");
  return q;
}

bool FactoredIndex::division_exact() const {
  return two_adic_valuation_factorial(d) * e_factorial >= e_two;
}

BigInt FactoredIndex::decimal_digits() const {
  // Digits of d!^e1 / 2^e2, within one digit via bit-length arithmetic;
  // exact enough for the expansion cap.
  if (!value_if_at_most_digits(64)) {
    // large: estimate via logarithms in high precision
    HighFloat lg = HighFloat(e_factorial) * boost::multiprecision::log10(HighFloat(factorial(d))) -
                   HighFloat(e_two) * boost::multiprecision::log10(HighFloat(2));
    return BigInt(boost::multiprecision::floor(lg)) + 1;
  }
  return BigInt(value().str().size());
}

std::optional<BigInt> FactoredIndex::value_if_at_most_digits(size_t max_digits) const {
  if (!division_exact()) throw InternalError("inexact factored index");
  HighFloat lg = HighFloat(e_factorial) * boost::multiprecision::log10(HighFloat(factorial(d))) -
                 HighFloat(e_two) * boost::multiprecision::log10(HighFloat(2));
  if (lg > HighFloat(static_cast<double>(max_digits)))
    return std::nullopt;
  BigInt num = boost::multiprecision::pow(factorial(d), static_cast<unsigned>(e_factorial));
  BigInt den = 1;
  if (e_two >= 0)
    den = boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(e_two));
  else
    num *= boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(-e_two));
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw InternalError("factored index division left a remainder");
  return q;
}

BigInt FactoredIndex::value() const {
  auto v = value_if_at_most_digits(10000);
  if (!v)
    throw ResourceError("expanded index exceeds 10^4 digits; use the factored form");
  return *v;
}

FactoredIndex index_g_st(int d, int k) {
  check_d(d);
  if (k < 0) throw UsageError("level must be non-negative");
  FactoredIndex fi;
  fi.d = d;
  if (k == 0) {
    fi.e_factorial = 0;
    fi.e_two = 0;
    return fi;
  }
  fi.e_factorial = geometric_sum(d, k);
  fi.e_two = geometric_sum(d, k - 1);
  return fi;
}

FactoredIndex index_st_st(int d, int k) {
  check_d(d);
  if (k < 1) throw UsageError("index [St(k):St(k+1)] needs k >= 1");
  FactoredIndex fi;
  fi.d = d;
  fi.e_factorial = boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(k));
  fi.e_two = boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(k - 1));
  return fi;
}

FactoredIndex index_aut_st(int d, int k) {
  check_d(d);
  if (k < 0) throw UsageError("level must be non-negative");
  FactoredIndex fi;
  fi.d = d;
  fi.e_factorial = k == 0 ? BigInt(0) : geometric_sum(d, k);
  fi.e_two = 0;
  return fi;
}

BigInt rist_exponent_t(int d, int k) {
  check_d(d);
  if (k < 1) throw UsageError("rigid-stabilizer index needs k >= 1");
  BigInt dk1 = boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(k + 1));
  BigInt dk = boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(k));
  BigInt dkm1 = boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(k - 1));
  BigInt num = BigInt(k + 1) * dk1 - BigInt(k + 3) * dk + dkm1 + 1;
  BigInt q, r;
  boost::multiprecision::divide_qr(num, BigInt(d - 1), q, r);
  if (r != 0) throw InternalError("rigid-stabilizer exponent not integral");
  return q;
}

FactoredIndex index_st_rist(int d, int k) {
  FactoredIndex fi;
  fi.d = d;
  fi.e_factorial = 0;
  fi.e_two = -rist_exponent_t(d, k); // value = 2^t, stored as 1/2^(-t)
  return fi;
}

IndexTable index_table(int d, int k_max) {
  check_d(d);
  if (k_max < 1) throw UsageError("k_max must be >= 1");
  if (k_max > 64) throw ResourceError("k_max beyond supported range");
  IndexTable table;
  table.d = d;
  for (int k = 1; k <= k_max; ++k) {
    IndexRow row;
    row.k = k;
    row.st_next = index_st_st(d, k);
    row.g_next = index_g_st(d, k + 1);
    row.aut_next = index_aut_st(d, k + 1);
    row.st_rist = index_st_rist(d, k);
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

HausdorffResult hausdorff_impl(int d, int k_max) {
  HausdorffResult res;
  res.d = d;
  HighFloat log2 = boost::multiprecision::log(HighFloat(2));
  HighFloat logfact = boost::multiprecision::log(HighFloat(factorial(d)));
  res.closed_form = HighFloat(1) - log2 / (HighFloat(d) * logfact);
  for (int k = 1; k <= k_max; ++k) {
    BigInt a = geometric_sum(d, k);      // exponent of d! in [G : St(k)]
    BigInt b = geometric_sum(d, k - 1);  // exponent of 2
    BigInt c = geometric_sum(d, k);      // exponent of d! in [Aut : St(k)]
    HighFloat r = (HighFloat(a) * logfact - HighFloat(b) * log2) / (HighFloat(c) * logfact);
    res.ratios.push_back(r);
  }
  return res;
}

} // namespace

HausdorffResult hausdorff_dimension(int d, int k_max) {
  check_d(d);
  if (k_max < 1 || k_max > 10000) throw UsageError("k_max out of range");
  return hausdorff_impl(d, k_max);
}

} // namespace branchlab
