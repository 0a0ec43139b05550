#include "branchlab/quotient_kernel.hpp"

#include <algorithm>

#include "branchlab/stabilizers.hpp"

namespace branchlab {

namespace {

uint64_t pow_u64(uint64_t base, int exp) {
  uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void check_level(int d, int k) {
  if (d < 3 || d % 2 == 0) throw UsageError("d must be odd and >= 3");
  if (k < 1) throw UsageError("level must be >= 1");
  if (k > 40) throw ResourceError("level " + std::to_string(k) + " beyond supported range");
  uint64_t size = 1;
  for (int i = 0; i < k; ++i) {
    size *= static_cast<uint64_t>(d);
    if (size > 100'000'000)
      throw ResourceError("d^k residue vector too large at level " + std::to_string(k));
  }
}

// d-adic valuation and cofactor of j >= 1.
std::pair<int, uint64_t> split_d(uint64_t j, int d) {
  int s = 0;
  while (j % static_cast<uint64_t>(d) == 0) {
    j /= static_cast<uint64_t>(d);
    ++s;
  }
  return {s, j};
}

} // namespace

QuotientCoset::QuotientCoset(int d_, int k_, std::vector<uint64_t> n_)
    : d(d_), k(k_), n(std::move(n_)) {
  check_level(d, k);
  uint64_t size = pow_u64(static_cast<uint64_t>(d), k);
  if (n.size() != size)
    throw UsageError("coset needs d^k = " + std::to_string(size) + " residues");
  uint64_t m = modulus();
  for (uint64_t v : n)
    if (v >= m) throw UsageError("coset residue " + std::to_string(v) + " out of range");
  std::vector<long long> totals(n.begin(), n.end());
  if (!tuple_criterion_totals(totals, d, k).all_zero())
    throw UsageError("residue vector violates the level-stabilizer block congruences");
}

bool QuotientCoset::is_zero() const {
  for (uint64_t v : n)
    if (v != 0) return false;
  return true;
}

QuotientCoset coset_of(const WreathSystem& sys, const GroupWord& w, int k) {
  check_level(sys.d(), k);
  auto tuple = section_tuple(sys, w, k); // throws if w not in St(k-hat)
  uint64_t m = uint64_t{1} << (k + 1);
  std::vector<uint64_t> n;
  n.reserve(tuple.size());
  for (const auto& s : tuple) {
    long long total = exponent_vector(s, sys.num_generators()).total;
    long long r = total % static_cast<long long>(m);
    if (r < 0) r += static_cast<long long>(m);
    n.push_back(static_cast<uint64_t>(r));
  }
  return QuotientCoset(sys.d(), k, std::move(n));
}

QuotientCoset coset_mul(const QuotientCoset& a, const QuotientCoset& b) {
  if (a.d != b.d || a.k != b.k)
    throw UsageError("coset level mismatch");
  std::vector<uint64_t> n(a.n.size());
  uint64_t m = a.modulus();
  for (size_t i = 0; i < n.size(); ++i) n[i] = (a.n[i] + b.n[i]) % m;
  return QuotientCoset(a.d, a.k, std::move(n));
}

QuotientCoset coset_inverse(const QuotientCoset& a) {
  std::vector<uint64_t> n(a.n.size());
  uint64_t m = a.modulus();
  for (size_t i = 0; i < n.size(); ++i) n[i] = (m - a.n[i]) % m;
  return QuotientCoset(a.d, a.k, std::move(n));
}

uint64_t theta_alpha(int d, int k, uint64_t j) {
  if (j < 1 || j >= pow_u64(static_cast<uint64_t>(d), k))
    throw UsageError("theta component index out of range");
  auto [s, r] = split_d(j, d);
  (void)r;
  return s == 0 ? (uint64_t{1} << (k + 1)) : (uint64_t{1} << (k - s));
}

ThetaImage theta(const QuotientCoset& c) {
  ThetaImage img;
  img.d = c.d;
  img.k = c.k;
  uint64_t size = c.n.size();
  img.l.resize(static_cast<size_t>(size - 1));
  for (uint64_t j = 1; j < size; ++j) {
    auto [s, r] = split_d(j, c.d);
    if (s == 0) {
      img.l[static_cast<size_t>(j - 1)] = c.n[static_cast<size_t>(j - 1)];
    } else {
      uint64_t block = pow_u64(static_cast<uint64_t>(c.d), s);
      uint64_t sum = 0;
      for (uint64_t i = 1; i <= block; ++i)
        sum += c.n[static_cast<size_t>((r - 1) * block + i - 1)];
      uint64_t div = uint64_t{1} << (s + 1);
      if (sum % div != 0)
        throw InternalError("theta: block sum not divisible by 2^(s+1)");
      img.l[static_cast<size_t>(j - 1)] = (sum / div) % (uint64_t{1} << (c.k - s));
    }
  }
  return img;
}

QuotientCoset theta_inv(const ThetaImage& t) {
  check_level(t.d, t.k);
  uint64_t size = pow_u64(static_cast<uint64_t>(t.d), t.k);
  if (t.l.size() != static_cast<size_t>(size - 1))
    throw UsageError("theta image needs d^k - 1 components");
  for (uint64_t j = 1; j < size; ++j)
    if (t.l[static_cast<size_t>(j - 1)] >= theta_alpha(t.d, t.k, j))
      throw UsageError("theta component " + std::to_string(j) + " out of range");

  uint64_t m = uint64_t{1} << (t.k + 1);
  std::vector<uint64_t> n(static_cast<size_t>(size), 0);
  for (uint64_t j = 1; j < size; ++j) {
    auto [s, r] = split_d(j, t.d);
    (void)r;
    if (s == 0) n[static_cast<size_t>(j - 1)] = t.l[static_cast<size_t>(j - 1)];
  }
  // Dependent coordinates in increasing valuation order; the block prefix
  // below valuation s is already fixed when d^s r is computed.
  for (int s = 1; s <= t.k - 1; ++s) {
    uint64_t block = pow_u64(static_cast<uint64_t>(t.d), s);
    for (uint64_t r = 1; r * block < size; ++r) {
      if (r % static_cast<uint64_t>(t.d) == 0) continue;
      uint64_t j = r * block;
      uint64_t prefix = 0;
      for (uint64_t i = 1; i <= block - 1; ++i)
        prefix += n[static_cast<size_t>((r - 1) * block + i - 1)];
      uint64_t lead = (uint64_t{1} << (s + 1)) * t.l[static_cast<size_t>(j - 1)] % m;
      n[static_cast<size_t>(j - 1)] = (lead + m - prefix % m) % m;
    }
  }
  uint64_t tail = 0;
  for (uint64_t i = 1; i < size; ++i) tail += n[static_cast<size_t>(i - 1)];
  n[static_cast<size_t>(size - 1)] = (m - tail % m) % m;
  return QuotientCoset(t.d, t.k, std::move(n));
}

QuotientCoset rho(const QuotientCoset& c) {
  if (c.k < 2)
    throw UsageError("rho maps level k+1 >= 2 down to level k >= 1");
  uint64_t size = c.n.size();
  uint64_t down = size / static_cast<uint64_t>(c.d);
  uint64_t m = uint64_t{1} << c.k; // 2^(k+1) for the lower level k
  std::vector<uint64_t> out(static_cast<size_t>(down));
  for (uint64_t j = 0; j < down; ++j) {
    uint64_t sum = 0;
    for (int i = 0; i < c.d; ++i)
      sum += c.n[static_cast<size_t>(j * static_cast<uint64_t>(c.d) + i)];
    if (sum % 2 != 0)
      throw InternalError("rho: block sum is odd");
    out[static_cast<size_t>(j)] = (sum / 2) % m;
  }
  return QuotientCoset(c.d, c.k - 1, std::move(out));
}

KernelElement::KernelElement(int d_, int K_, std::vector<QuotientCoset> levels_)
    : d(d_), K(K_), levels(std::move(levels_)) {
  check_level(d, K);
  if (static_cast<int>(levels.size()) != K)
    throw UsageError("kernel element needs one coset per level 1..K");
  for (int k = 1; k <= K; ++k) {
    const auto& c = levels[static_cast<size_t>(k - 1)];
    if (c.d != d || c.k != k)
      throw UsageError("kernel tower level " + std::to_string(k) + " malformed");
    for (uint64_t v : c.n)
      if (v % 2 != 0)
        throw UsageError("kernel tower carries an odd residue at level " + std::to_string(k));
  }
  for (int k = 1; k < K; ++k)
    if (!(rho(levels[static_cast<size_t>(k)]) == levels[static_cast<size_t>(k - 1)]))
      throw UsageError("kernel tower not rho-compatible at level " + std::to_string(k));
}

KernelElement kernel_mul(const KernelElement& a, const KernelElement& b) {
  if (a.d != b.d || a.K != b.K)
    throw UsageError("kernel element depth mismatch");
  std::vector<QuotientCoset> levels;
  levels.reserve(a.levels.size());
  for (size_t i = 0; i < a.levels.size(); ++i)
    levels.push_back(coset_mul(a.levels[i], b.levels[i]));
  return KernelElement(a.d, a.K, std::move(levels));
}

namespace {

// Count of free coordinates (d does not divide j) at level k.
uint64_t free_count(int d, int k) {
  return pow_u64(static_cast<uint64_t>(d), k) - pow_u64(static_cast<uint64_t>(d), k - 1);
}

} // namespace

KernelElement kernel_from_free(int d, int K, const FreeResidues& free_values) {
  check_level(d, K);
  if (static_cast<int>(free_values.size()) != K)
    throw UsageError("need free coordinates for each level 1..K");
  for (int k = 1; k <= K; ++k) {
    const auto& fv = free_values[static_cast<size_t>(k - 1)];
    if (fv.size() != free_count(d, k))
      throw UsageError("level " + std::to_string(k) + " needs " +
                       std::to_string(free_count(d, k)) + " free coordinates");
    uint64_t m = uint64_t{1} << (k + 1);
    for (uint64_t v : fv) {
      if (v % 2 != 0)
        throw UsageError("free coordinate " + std::to_string(v) + " is odd");
      if (v >= m)
        throw UsageError("free coordinate " + std::to_string(v) + " out of range");
    }
  }

  std::vector<QuotientCoset> levels;
  std::vector<uint64_t> prev; // residues of level k-1
  for (int k = 1; k <= K; ++k) {
    uint64_t size = pow_u64(static_cast<uint64_t>(d), k);
    uint64_t m = uint64_t{1} << (k + 1);
    std::vector<uint64_t> n(static_cast<size_t>(size));
    const auto& fv = free_values[static_cast<size_t>(k - 1)];
    size_t fi = 0;
    for (uint64_t j = 1; j <= size; ++j)
      if (j % static_cast<uint64_t>(d) != 0) n[static_cast<size_t>(j - 1)] = fv[fi++];
    if (k == 1) {
      uint64_t sum = 0;
      for (uint64_t j = 1; j < size; ++j) sum += n[static_cast<size_t>(j - 1)];
      n[static_cast<size_t>(size - 1)] = (m - sum % m) % m;
    } else {
      for (uint64_t j = static_cast<uint64_t>(d); j <= size; j += static_cast<uint64_t>(d)) {
        uint64_t block_prefix = 0;
        for (int i = 1; i <= d - 1; ++i)
          block_prefix += n[static_cast<size_t>(j - static_cast<uint64_t>(d) + i - 1)];
        uint64_t lead = (2 * prev[static_cast<size_t>(j / static_cast<uint64_t>(d) - 1)]) % m;
        n[static_cast<size_t>(j - 1)] = (lead + m - block_prefix % m) % m;
      }
    }
    prev = n;
    levels.emplace_back(d, k, std::move(n));
  }
  return KernelElement(d, K, std::move(levels));
}

PhiImage phi(const KernelElement& el) {
  PhiImage img;
  img.d = el.d;
  img.K = el.K;
  img.eta.resize(static_cast<size_t>(el.K));
  for (int k = 1; k <= el.K; ++k) {
    const auto& c = el.levels[static_cast<size_t>(k - 1)];
    uint64_t m = uint64_t{1} << k;
    auto& row = img.eta[static_cast<size_t>(k - 1)];
    row.reserve(free_count(el.d, k));
    for (uint64_t j = 1; j <= c.n.size(); ++j)
      if (j % static_cast<uint64_t>(el.d) != 0)
        row.push_back((c.n[static_cast<size_t>(j - 1)] / 2) % m);
  }
  return img;
}

KernelElement phi_inv(const PhiImage& img) {
  check_level(img.d, img.K);
  if (static_cast<int>(img.eta.size()) != img.K)
    throw UsageError("phi image needs one row per level");
  FreeResidues free_values(img.eta.size());
  for (int k = 1; k <= img.K; ++k) {
    const auto& row = img.eta[static_cast<size_t>(k - 1)];
    if (row.size() != free_count(img.d, k))
      throw UsageError("phi image row " + std::to_string(k) + " has wrong arity");
    uint64_t m = uint64_t{1} << k;
    auto& fv = free_values[static_cast<size_t>(k - 1)];
    fv.reserve(row.size());
    for (uint64_t v : row) {
      if (v >= m) throw UsageError("phi image value out of range");
      fv.push_back(2 * v);
    }
  }
  return kernel_from_free(img.d, img.K, free_values);
}

namespace {

uint64_t order_mod_pow2(uint64_t n, int exp) {
  // order of n in C_{2^exp}
  uint64_t m = uint64_t{1} << exp;
  n %= m;
  if (n == 0) return 1;
  uint64_t g = n;
  int twos = 0;
  while (g % 2 == 0) {
    g /= 2;
    ++twos;
  }
  return m >> twos;
}

} // namespace

TorsionProfile torsion_profile(const KernelElement& el) {
  TorsionProfile tp;
  tp.order_at_depth.reserve(static_cast<size_t>(el.K));
  uint64_t running = 1;
  for (int k = 1; k <= el.K; ++k) {
    const auto& c = el.levels[static_cast<size_t>(k - 1)];
    for (uint64_t v : c.n) running = std::max(running, order_mod_pow2(v, k + 1));
    tp.order_at_depth.push_back(running);
  }
  size_t K = tp.order_at_depth.size();
  tp.stabilized = tp.order_at_depth.back() == 1 ||
                  (K >= 2 && tp.order_at_depth[K - 1] == tp.order_at_depth[K - 2]);
  return tp;
}

BranchKernelReport branch_kernel_check(int d, int k, const SearchBudget* search) {
  check_level(d, k);
  if (k > 60) throw ResourceError("k too large");
  BranchKernelReport rep;
  rep.d = d;
  rep.k = k;
  uint64_t s = uint64_t{1} << (k + 1); // first tuple entry is a_1^(2^(k+1))
  rep.tuple_first_in_Hk = (s % (uint64_t{1} << (k + 1))) == 0;
  // Halve k times: any psi_k-preimage of the tuple has this total.
  uint64_t total = s;
  for (int i = 0; i < k; ++i) {
    if (total % 2 != 0)
      throw InternalError("forced total not even");
    total /= 2;
  }
  rep.forced_total = static_cast<long long>(total);
  rep.outside_H = (total % 4) != 0;
  rep.holds = rep.tuple_first_in_Hk && rep.outside_H && rep.forced_total == 2;

  if (search != nullptr && k == 1) {
    rep.search_attempted = true;
    WreathSystem sys = gd_system(d);
    std::vector<GroupWord> target(static_cast<size_t>(d));
    target[0] = GroupWord::generator(1).pow(static_cast<long long>(s));
    SearchResult sr =
        witness_search(sys, target, perm_identity(static_cast<size_t>(d)), *search);
    if (sr.witness) {
      rep.witness_word = format_word(*sr.witness);
      rep.witness_total =
          exponent_vector(*sr.witness, sys.num_generators()).total;
    }
  }
  return rep;
}

} // namespace branchlab
