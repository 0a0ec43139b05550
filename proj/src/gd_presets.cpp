#include "branchlab/gd_presets.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace branchlab {

int mod_index(long long i, int d) {
  long long r = (i - 1) % d;
  if (r < 0) r += d;
  return static_cast<int>(r) + 1;
}

namespace {

Perm transposition(int d, int a, int b) { // 0-based points
  Perm p = perm_identity(static_cast<size_t>(d));
  std::swap(p[static_cast<size_t>(a)], p[static_cast<size_t>(b)]);
  return p;
}

GroupWord gen(int i) { return GroupWord::generator(i); }

} // namespace

WreathSystem gd_system(int d) {
  GroupConfig cfg(d);
  std::vector<WreathSystem::GenRecursion> gens;
  gens.reserve(static_cast<size_t>(d));
  for (int i = 1; i <= d; ++i) {
    WreathSystem::GenRecursion rec;
    rec.sections.assign(static_cast<size_t>(d), GroupWord{});
    int next = mod_index(i + 1, d);
    rec.sections[static_cast<size_t>(i - 1)] = gen(i);
    rec.sections[static_cast<size_t>(next - 1)] = gen(next);
    rec.root = transposition(d, i - 1, next - 1);
    gens.push_back(std::move(rec));
  }
  WreathSystem sys(cfg, std::move(gens), "G_" + std::to_string(d));
  sys.set_zero_exponent_law(true);
  return sys;
}

WreathSystem aut_system(int d, int depth) {
  GroupConfig cfg(d);
  if (depth < 1 || depth > 16)
    throw UsageError("aut_system depth out of range 1..16");
  std::vector<WreathSystem::GenRecursion> gens;
  // r_1..r_{d-1}: rooted adjacent transpositions
  for (int i = 1; i < d; ++i) {
    WreathSystem::GenRecursion rec;
    rec.sections.assign(static_cast<size_t>(d), GroupWord{});
    rec.root = transposition(d, i - 1, i);
    gens.push_back(std::move(rec));
  }
  // m = (m, r_1, ..., r_{d-1}), rooted trivial: replicates the rooted
  // generators into every subtree.
  {
    WreathSystem::GenRecursion rec;
    rec.sections.assign(static_cast<size_t>(d), GroupWord{});
    rec.sections[0] = gen(d); // m itself
    for (int i = 1; i < d; ++i) rec.sections[static_cast<size_t>(i)] = gen(i);
    rec.root = perm_identity(static_cast<size_t>(d));
    gens.push_back(std::move(rec));
  }
  // Sign-breakers c_2..c_depth: c_t has its first odd layer signature at
  // layer t, so the layer-sign vectors are triangular and span C_2^k for
  // every k <= depth. c_2 = (c_2, r_1, e, ..); c_{t+1} = (c_{t+1}, c_t, e, ..).
  // Generator indices: c_t is generator d + t - 1.
  for (int t = 2; t <= depth; ++t) {
    WreathSystem::GenRecursion rec;
    rec.sections.assign(static_cast<size_t>(d), GroupWord{});
    rec.sections[0] = gen(d + t - 1);
    rec.sections[1] = t == 2 ? gen(1) : gen(d + t - 2);
    rec.root = perm_identity(static_cast<size_t>(d));
    gens.push_back(std::move(rec));
  }
  return WreathSystem(cfg, std::move(gens), "Aut_" + std::to_string(d));
}

void NamedElement::verify(const WreathSystem& sys) const {
  LevelPermutation lp = level_perm(sys, word, 1);
  if (lp.map != expected_root)
    throw InternalError("named element " + name + ": root permutation mismatch, got " +
                        perm_cycles(lp.map) + " expected " + perm_cycles(expected_root));
  for (int x = 1; x <= sys.d(); ++x) {
    GroupWord s = section(sys, word, {x});
    if (!equal(sys, s, expected_sections[static_cast<size_t>(x - 1)]))
      throw InternalError("named element " + name + ": section at " + std::to_string(x) +
                          " mismatch, got " + format_word(s));
  }
}

namespace {

GroupWord xi_word(int d, int i) {
  GroupWord a_i = gen(mod_index(i, d));
  GroupWord a_i1 = gen(mod_index(i + 1, d));
  GroupWord a_i2 = gen(mod_index(i + 2, d));
  return commutator(a_i, a_i1) * commutator(a_i1, a_i2) *
         commutator(a_i1 * a_i1, a_i2).inverse();
}

GroupWord eta_word(int d, int i) {
  // eta_1 = xi_{d-2} xi_{d-4} ... xi_3  xi_2 xi_4 ... xi_{d-1}  xi_d,
  // shifted by i-1 for i >= 2.
  int shift = i - 1;
  GroupWord w;
  for (int j = d - 2; j >= 3; j -= 2) w = w * xi_word(d, mod_index(j + shift, d));
  for (int j = 2; j <= d - 1; j += 2) w = w * xi_word(d, mod_index(j + shift, d));
  w = w * xi_word(d, mod_index(d + shift, d));
  return w;
}

std::vector<GroupWord> all_empty(int d) {
  return std::vector<GroupWord>(static_cast<size_t>(d));
}

void check_index(int d, int i) {
  if (i < 1 || i > d)
    throw UsageError("index i = " + std::to_string(i) + " out of range 1.." + std::to_string(d));
}

} // namespace

NamedElement xi(int d, int i) {
  check_index(d, i);
  NamedElement el;
  el.name = "xi_" + std::to_string(i);
  el.word = xi_word(d, i);
  el.expected_sections = all_empty(d);
  el.expected_root = perm_then(transposition(d, i - 1, mod_index(i + 2, d) - 1),
                               transposition(d, mod_index(i + 1, d) - 1, mod_index(i + 3, d) - 1));
  el.verify(gd_system(d));
  return el;
}

NamedElement eta(int d, int i) {
  check_index(d, i);
  NamedElement el;
  el.name = "eta_" + std::to_string(i);
  el.word = eta_word(d, i);
  el.expected_sections = all_empty(d);
  Perm cyc = perm_identity(static_cast<size_t>(d));
  int p0 = i - 1, p1 = mod_index(i + 1, d) - 1, p2 = mod_index(i + 2, d) - 1;
  cyc[static_cast<size_t>(p0)] = static_cast<uint32_t>(p1);
  cyc[static_cast<size_t>(p1)] = static_cast<uint32_t>(p2);
  cyc[static_cast<size_t>(p2)] = static_cast<uint32_t>(p0);
  el.expected_root = cyc;
  el.verify(gd_system(d));
  return el;
}

NamedElement consecutive_spread(int d, int i) {
  check_index(d, i);
  NamedElement el;
  el.name = "spread_" + std::to_string(i);
  int next = mod_index(i + 1, d);
  el.word = commutator(gen(i), gen(next)) * eta_word(d, i).inverse();
  el.expected_sections = all_empty(d);
  el.expected_sections[static_cast<size_t>(i - 1)] = gen(next).inverse();
  el.expected_sections[static_cast<size_t>(next - 1)] = gen(next);
  el.expected_root = perm_identity(static_cast<size_t>(d));
  el.verify(gd_system(d));
  return el;
}

std::vector<NamedElement> rist1_generators(int d) {
  GroupConfig cfg(d); // validates d
  if (d < 5)
    throw NotApplicableError(
        "rigid-stabilizer witnesses for d = 3 have no closed-form words; "
        "witnesses deferred to search");
  WreathSystem sys = gd_system(d);
  std::vector<NamedElement> out;
  auto g = [&](long long j) { return gen(mod_index(j, d)); };
  for (int i = 1; i <= d; ++i) {
    long long c = i - 1;
    int slot = mod_index(1 + c, d) - 1;
    {
      NamedElement el;
      el.name = "rist_diff_" + std::to_string(i);
      el.word = g(1 + c).inverse() * g(4 + c).inverse() * g(2 + c).inverse() * g(1 + c) *
                g(3 + c) * g(4 + c) * xi_word(d, mod_index(2 + c, d)) *
                xi_word(d, mod_index(1 + c, d));
      el.expected_sections = all_empty(d);
      el.expected_sections[static_cast<size_t>(slot)] = g(2 + c).inverse() * g(4 + c);
      el.expected_root = perm_identity(static_cast<size_t>(d));
      el.verify(sys);
      out.push_back(std::move(el));
    }
    {
      NamedElement el;
      el.name = "rist_sq_" + std::to_string(i);
      GroupWord base = g(1 + c).conjugate_by(g(2 + c)) * xi_word(d, mod_index(1 + c, d));
      el.word = base * base;
      el.expected_sections = all_empty(d);
      GroupWord prod = g(1 + c) * g(2 + c);
      el.expected_sections[static_cast<size_t>(slot)] = prod * prod;
      el.expected_root = perm_identity(static_cast<size_t>(d));
      el.verify(sys);
      out.push_back(std::move(el));
    }
  }
  return out;
}

GroupWord word_with_root_perm(const Perm& lambda) {
  if (!perm_is_valid(lambda))
    throw UsageError("not a permutation");
  // Sort the inverse array by adjacent entry swaps, then replay in reverse:
  // appending a_{j+1} composes with the value-transposition (j, j+1), which
  // is an adjacent entry swap on the inverse array.
  Perm beta = perm_inverse(lambda);
  std::vector<int> swaps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t j = 0; j + 1 < beta.size(); ++j) {
      if (beta[j] > beta[j + 1]) {
        std::swap(beta[j], beta[j + 1]);
        swaps.push_back(static_cast<int>(j));
        changed = true;
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  GroupWord w;
  for (int j : swaps) w = w * gen(j + 1);
  return w;
}

std::vector<GroupWord> default_search_basis(int d) {
  std::vector<GroupWord> basis;
  for (int i = 1; i <= d; ++i) basis.push_back(gen(i));
  for (int i = 1; i <= d; ++i) basis.push_back(xi(d, i).word);
  for (int i = 1; i <= d; ++i) basis.push_back(eta(d, i).word);
  for (int i = 1; i <= d; ++i) basis.push_back(consecutive_spread(d, i).word);
  if (d >= 5)
    for (const auto& el : rist1_generators(d)) basis.push_back(el.word);
  return basis;
}

namespace {

std::string signature_key(const WreathDecomposition& dec) {
  std::string sig;
  for (uint32_t v : dec.root) sig.push_back(static_cast<char>(v));
  for (const auto& s : dec.sections) {
    sig.push_back('\x7f');
    sig += s.key();
  }
  return sig;
}

} // namespace

SearchResult witness_search(const WreathSystem& sys,
                            const std::vector<GroupWord>& target_sections,
                            const Perm& target_root, const SearchBudget& budget,
                            const std::vector<GroupWord>& basis_in) {
  if (static_cast<int>(target_sections.size()) != sys.d())
    throw UsageError("target tuple must have d entries");
  if (static_cast<int>(target_root.size()) != sys.d() || !perm_is_valid(target_root))
    throw UsageError("target root permutation must be a bijection of {1..d}");

  std::vector<GroupWord> basis = basis_in;
  if (basis.empty()) basis = default_search_basis(sys.d());
  {
    std::vector<GroupWord> with_inverses;
    with_inverses.reserve(basis.size() * 2);
    for (const auto& b : basis) {
      with_inverses.push_back(b);
      GroupWord inv = b.inverse();
      if (inv != b) with_inverses.push_back(std::move(inv));
    }
    basis = std::move(with_inverses);
  }

  std::vector<ExponentVector> target_ev;
  target_ev.reserve(target_sections.size());
  for (const auto& t : target_sections)
    target_ev.push_back(exponent_vector(t, sys.num_generators()));

  auto matches = [&](const GroupWord& w, const WreathDecomposition& dec) {
    if (dec.root != target_root) return false;
    for (int x = 0; x < sys.d(); ++x) {
      const GroupWord& s = dec.sections[static_cast<size_t>(x)];
      const GroupWord& t = target_sections[static_cast<size_t>(x)];
      if (s == t) continue;
      if (sys.zero_exponent_law() &&
          exponent_vector(s, sys.num_generators()) != target_ev[static_cast<size_t>(x)])
        return false;
      if (!equal(sys, s, t)) return false;
    }
    (void)w;
    return true;
  };

  SearchResult result;
  std::deque<GroupWord> frontier;
  std::unordered_set<std::string> seen;
  GroupWord start;
  WreathDecomposition dec0 = decompose(sys, start);
  seen.insert(signature_key(dec0));
  ++result.states_explored;
  if (matches(start, dec0)) {
    result.witness = start;
    return result;
  }
  frontier.push_back(start);

  while (!frontier.empty()) {
    GroupWord cur = std::move(frontier.front());
    frontier.pop_front();
    for (const GroupWord& b : basis) {
      GroupWord next = cur * b;
      if (next.size() > budget.max_length) continue;
      WreathDecomposition dec = decompose(sys, next);
      if (!seen.insert(signature_key(dec)).second) continue;
      ++result.states_explored;
      if (matches(next, dec)) {
        // Post-hoc verification through the public evaluation path.
        if (level_perm(sys, next, 1).map != target_root)
          throw InternalError("witness_search: verification failed (root)");
        for (int x = 1; x <= sys.d(); ++x)
          if (!equal(sys, section(sys, next, {x}), target_sections[static_cast<size_t>(x - 1)]))
            throw InternalError("witness_search: verification failed (section)");
        result.witness = next;
        return result;
      }
      if (result.states_explored >= budget.max_states) {
        result.budget_exhausted = true;
        return result;
      }
      frontier.push_back(std::move(next));
    }
  }
  return result;
}

} // namespace branchlab
