#include "branchlab/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "branchlab/gd_presets.hpp"
#include "branchlab/indices.hpp"
#include "branchlab/parallel.hpp"
#include "branchlab/permgroup.hpp"
#include "branchlab/quotient_kernel.hpp"
#include "branchlab/stabilizers.hpp"
#include "branchlab/trace_monoid.hpp"
#include "branchlab/tree_engine.hpp"

namespace branchlab {

bool SuiteResult::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

size_t SuiteResult::total_checks() const {
  size_t n = 0;
  for (const auto& c : checks) n += c.checks;
  return n;
}

uint64_t WordSampler::next_u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t WordSampler::below(uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

GroupWord WordSampler::random_word(size_t max_len) {
  size_t len = below(max_len + 1);
  std::vector<Letter> letters;
  letters.reserve(len);
  for (size_t i = 0; i < len; ++i)
    letters.push_back(Letter{1 + static_cast<int>(below(static_cast<uint64_t>(d_))),
                             below(2) == 0 ? 1 : -1});
  return GroupWord(std::span<const Letter>(letters));
}

GroupWord WordSampler::random_positive_word(size_t max_len) {
  size_t len = 1 + below(max_len);
  std::vector<Letter> letters;
  letters.reserve(len);
  for (size_t i = 0; i < len; ++i)
    letters.push_back(Letter{1 + static_cast<int>(below(static_cast<uint64_t>(d_))), 1});
  return GroupWord(std::span<const Letter>(letters));
}

TraceWord WordSampler::random_trace(size_t len) {
  TraceWord t(len);
  for (auto& x : t) x = 1 + static_cast<int>(below(static_cast<uint64_t>(d_)));
  return t;
}

namespace {

// Candidate blocks in St(k-hat), each admitted by direct permutation
// computation. Cached per (d, k); the pool is reused heavily.
const std::vector<GroupWord>& stabilizer_blocks(const WreathSystem& sys, int k) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<GroupWord>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(sys.d(), k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const int d = sys.d();
  std::vector<GroupWord> pool;
  auto consider = [&](const GroupWord& w) {
    if (in_level_stabilizer(sys, w, k)) pool.push_back(w);
  };
  for (int i = 1; i <= d; ++i) {
    GroupWord a = GroupWord::generator(i);
    GroupWord s = consecutive_spread(d, i).word;
    if (k == 1) {
      consider(a.pow(2));
      consider(s);
    } else if (k == 2) {
      consider(a.pow(6));
      consider(s.pow(2));
    } else {
      consider(a.pow(18));
      consider(s.pow(6));
    }
  }
  if (pool.empty())
    throw InternalError("no stabilizer blocks available for level " + std::to_string(k));
  return cache.emplace(key, std::move(pool)).first->second;
}

} // namespace

GroupWord WordSampler::random_stabilizer_word(const WreathSystem& sys, int k,
                                              size_t max_blocks) {
  const auto& pool = stabilizer_blocks(sys, k);
  size_t blocks = 1 + below(max_blocks);
  GroupWord w;
  for (size_t b = 0; b < blocks; ++b) {
    const GroupWord& block = pool[static_cast<size_t>(below(pool.size()))];
    GroupWord h = random_word(5);
    w = w * block.conjugate_by(h);
  }
  if (!in_level_stabilizer(sys, w, k))
    throw InternalError("structured stabilizer word fails the permutation check");
  return w;
}

namespace {

struct Runner {
  SuiteResult& suite;

  void run(const std::string& name, const std::function<void(CheckResult&)>& fn) {
    CheckResult r;
    r.name = name;
    try {
      fn(r);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    suite.checks.push_back(std::move(r));
  }
};

void expect(CheckResult& r, bool cond, const std::string& msg) {
  ++r.checks;
  if (!cond && r.passed) {
    r.passed = false;
    r.detail = msg;
  }
}

// ---------------------------------------------------------------- words

void suite_words(SuiteResult& s, const VerifyConfig& cfg) {
  Runner run{s};
  const int d = cfg.d;

  run.run("reduction is confluent and idempotent", [&](CheckResult& r) {
    WordSampler rng(d, cfg.seed);
    for (size_t it = 0; it < cfg.samples; ++it) {
      GroupWord w = rng.random_word(cfg.max_word_length);
      // letter-by-letter product equals one-shot construction
      GroupWord stepwise;
      for (const Letter& l : w.letters())
        stepwise = stepwise * GroupWord({l});
      expect(r, stepwise == w, "stepwise reduction differs");
      // inserting a cancelling pair anywhere must not change the result
      std::vector<Letter> raw(w.letters().begin(), w.letters().end());
      size_t pos = rng.below(raw.size() + 1);
      Letter x{1 + static_cast<int>(rng.below(static_cast<uint64_t>(d))), 1};
      raw.insert(raw.begin() + static_cast<long>(pos), {x, x.inverse()});
      expect(r, GroupWord(std::span<const Letter>(raw)) == w,
             "cancelling-pair insertion changed the reduction");
    }
  });

  run.run("exponent vectors are additive and antisymmetric", [&](CheckResult& r) {
    WordSampler rng(d, cfg.seed + 1);
    for (size_t it = 0; it < cfg.samples; ++it) {
      GroupWord u = rng.random_word(cfg.max_word_length);
      GroupWord v = rng.random_word(cfg.max_word_length);
      auto eu = exponent_vector(u, d), ev = exponent_vector(v, d);
      auto euv = exponent_vector(u * v, d);
      bool additive = euv.total == eu.total + ev.total;
      for (int i = 0; i < d && additive; ++i)
        additive = euv.by_gen[static_cast<size_t>(i)] ==
                   eu.by_gen[static_cast<size_t>(i)] + ev.by_gen[static_cast<size_t>(i)];
      expect(r, additive, "exponent vector not additive on " + format_word(u) + " , " +
                              format_word(v));
      auto einv = exponent_vector(u.inverse(), d);
      expect(r, einv.total == -eu.total, "inverse total not negated");
    }
  });

  run.run("parse/format round-trips", [&](CheckResult& r) {
    WordSampler rng(d, cfg.seed + 2);
    GroupConfig gc(d);
    for (size_t it = 0; it < cfg.samples; ++it) {
      GroupWord w = rng.random_word(cfg.max_word_length);
      expect(r, parse_word(format_word(w), gc) == w, "parse(format(w)) != w");
    }
    expect(r, parse_word("", gc).empty(), "empty text should parse to e");
    expect(r, parse_word("e", gc).empty(), "'e' should parse to e");
    expect(r, parse_word("a1 a2'", gc) == GroupWord({Letter{1, 1}, Letter{2, -1}}),
           "a1 a2' parse");
    expect(r, parse_word("a1^-2", gc) == GroupWord::generator(1).pow(-2), "a1^-2 parse");
    expect(r, parse_word("a1 a1^-1", gc).empty(), "parse should reduce");
  });

  run.run("parse rejects malformed input", [&](CheckResult& r) {
    GroupConfig gc(d);
    auto rejects = [&](const std::string& text) {
      try {
        parse_word(text, gc);
        return false;
      } catch (const UsageError&) {
        return true;
      }
    };
    expect(r, rejects("a" + std::to_string(d + 1)), "index beyond d accepted");
    expect(r, rejects("b2"), "unknown token accepted");
    expect(r, rejects("a"), "bare 'a' accepted");
    expect(r, rejects("a1^"), "dangling exponent accepted");
    expect(r, rejects("a1x"), "trailing junk accepted");
  });
}

// ----------------------------------------------------------------- tree

void suite_tree(SuiteResult& s, const VerifyConfig& cfg) {
  Runner run{s};
  const int d = cfg.d;
  WreathSystem sys = gd_system(d);

  run.run("sections and actions compose along vertices", [&](CheckResult& r) {
    WordSampler rng(d, cfg.seed + 10);
    for (size_t it = 0; it < cfg.samples / 4 + 16; ++it) {
      GroupWord w = rng.random_word(cfg.max_word_length);
      Vertex u, v;
      for (size_t i = 0, n = 1 + rng.below(2); i < n; ++i)
        u.push_back(1 + static_cast<int>(rng.below(static_cast<uint64_t>(d))));
      for (size_t i = 0, n = 1 + rng.below(2); i < n; ++i)
        v.push_back(1 + static_cast<int>(rng.below(static_cast<uint64_t>(d))));
      Vertex uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      expect(r, section(sys, w, uv) == section(sys, section(sys, w, u), v),
             "w|_{uv} != (w|_u)|_v");
      Vertex lhs = act(sys, w, uv);
      Vertex rhs = act(sys, w, u);
      Vertex tail = act(sys, section(sys, w, u), v);
      rhs.insert(rhs.end(), tail.begin(), tail.end());
      expect(r, lhs == rhs, "g(uv) != g(u) g|_u(v)");
      expect(r, lhs.size() == uv.size(), "action not length preserving");
    }
  });

  run.run("first-level section totals double the word total", [&](CheckResult& r) {
    WordSampler rng(d, cfg.seed + 11);
    for (size_t it = 0; it < cfg.samples; ++it) {
      GroupWord w = rng.random_word(cfg.max_word_length);
      long long sum = 0;
      for (int x = 1; x <= d; ++x)
        sum += exponent_vector(section(sys, w, {x}), d).total;
      expect(r, sum == 2 * exponent_vector(w, d).total,
             "section totals != 2 * word total for " + format_word(w));
    }
  });

  run.run("positive-word section shape (head letter and neighbor steps)",
          [&](CheckResult& r) {
    WordSampler rng(d, cfg.seed + 12);
    for (size_t it = 0; it < cfg.samples; ++it) {
      GroupWord w = rng.random_positive_word(cfg.max_word_length);
      for (int i = 1; i <= d; ++i) {
        GroupWord sec = section(sys, w, {i});
        if (sec.empty()) {
          // empty section forces a fixed vertex
          expect(r, act(sys, w, {i}) == Vertex{i}, "empty section but vertex moved");
          continue;
        }
        expect(r, sec.letters().front() == Letter{i, 1},
               "section at " + std::to_string(i) + " does not start with a_i");
        for (size_t p = 0; p + 1 < sec.letters().size(); ++p) {
          int j = sec.letters()[p].gen, l = sec.letters()[p + 1].gen;
          expect(r, l == mod_index(j - 1, d) || l == mod_index(j + 1, d),
                 "adjacent section letters not neighbors mod d");
        }
      }
    }
  });

  run.run("total parity matches level-1 permutation parity", [&](CheckResult& r) {
    WordSampler rng(d, cfg.seed + 13);
    for (size_t it = 0; it < cfg.samples; ++it) {
      GroupWord w = rng.random_word(cfg.max_word_length);
      bool even_total = exponent_vector(w, d).total % 2 == 0;
      bool even_perm = perm_parity(level_perm(sys, w, 1).map) == 1;
      expect(r, even_total == even_perm, "parity link broken for " + format_word(w));
    }
  });

  run.run("identity decision agrees with level permutations", [&](CheckResult& r) {
    WordSampler rng(d, cfg.seed + 14);
    for (size_t it = 0; it < cfg.samples / 4 + 16; ++it) {
      // fresh system per word: an empty memo makes the witness depth exact
      WreathSystem fresh = gd_system(d);
      fresh.set_zero_exponent_law(false);
      GroupWord w = rng.random_word(8);
      IdentityCheck c = is_identity_stats(fresh, w);
      if (c.isIdentity) {
        for (int k = 0; k <= 3; ++k)
          expect(r, level_perm(fresh, w, k).trivial(), "identity with nontrivial level perm");
      } else {
        expect(r, c.witnessDepth >= 0, "no witness depth on fresh system");
        expect(r, !level_perm(fresh, w, c.witnessDepth + 1).trivial(),
               "non-identity but trivial at witness depth+1");
      }
      expect(r, is_identity(sys, w) == c.isIdentity, "fast-reject path disagrees");
    }
  });

  run.run("sections never lengthen and level perms are prefix-consistent",
          [&](CheckResult& r) {
    WordSampler rng(d, cfg.seed + 15);
    for (size_t it = 0; it < cfg.samples / 4 + 16; ++it) {
      GroupWord w = rng.random_word(cfg.max_word_length);
      for (int x = 1; x <= d; ++x)
        expect(r, section(sys, w, {x}).size() <= w.size(), "section longer than word");
      int k = 2 + static_cast<int>(rng.below(2));
      LevelPermutation lp = level_perm(sys, w, k);
      expect(r, perm_is_valid(lp.map), "level perm not a bijection");
      expect(r, truncate_level(lp) == level_perm(sys, w, k - 1),
             "level perm not prefix-consistent");
      uint64_t idx = rng.below(lp.map.size());
      Vertex v = vertex_at(idx, d, k);
      expect(r, vertex_index(act(sys, w, v), d) == lp.map[static_cast<size_t>(idx)],
             "level perm disagrees with act");
    }
  });

  run.run("psi_k demands level-stabilizer membership", [&](CheckResult& r) {
    try {
      section_tuple(sys, GroupWord::generator(1), 1);
      expect(r, false, "section_tuple accepted a non-stabilizer word");
    } catch (const UsageError& e) {
      expect(r, std::string(e.what()).find("not in level stabilizer") != std::string::npos,
             "wrong error message");
    }
    auto t = section_tuple(sys, GroupWord{}, 2);
    bool all_e = true;
    for (const auto& x : t) all_e = all_e && x.empty();
    expect(r, all_e && t.size() == static_cast<size_t>(d * d), "psi_2(e) wrong");
  });
}

// -------------------------------------------------------------- presets

void suite_presets(SuiteResult& s, const VerifyConfig& cfg) {
  Runner run{s};
  const int d = cfg.d;
  WreathSystem sys = gd_system(d);

  run.run("named element signatures verify against the engine", [&](CheckResult& r) {
    for (int i = 1; i <= d; ++i) {
      xi(d, i).verify(sys);
      eta(d, i).verify(sys);
      consecutive_spread(d, i).verify(sys);
      r.checks += 3;
    }
    if (d >= 5) {
      for (const auto& el : rist1_generators(d)) {
        el.verify(sys);
        ++r.checks;
      }
    } else {
      try {
        rist1_generators(d);
        expect(r, false, "rist1_generators(3) should signal deferred-to-search");
      } catch (const NotApplicableError&) {
        ++r.checks;
      }
    }
  });

  run.run("xi relations: involutions for d >= 5, order three at d = 3",
          [&](CheckResult& r) {
    for (int i = 1; i <= d; ++i) {
      GroupWord x = xi(d, i).word;
      if (d >= 5)
        expect(r, is_identity(sys, x.pow(2)), "xi_i^2 != e");
      else
        expect(r, !is_identity(sys, x.pow(2)) && is_identity(sys, x.pow(3)),
               "xi_i should have order 3 at d = 3");
    }
  });

  run.run("rist witness coordinates lie in H_1", [&](CheckResult& r) {
    if (d < 5) {
      ++r.checks; // not applicable at d = 3
      return;
    }
    for (const auto& el : rist1_generators(d)) {
      for (int x = 1; x <= d; ++x) {
        GroupWord sec = section(sys, el.word, {x});
        expect(r, in_H(sec, 1, d), "witness section outside H_1");
      }
      expect(r, in_rigid_stabilizer(sys, el.word, 1), "witness not rigid at level 1");
    }
  });

  run.run("coordinate permutation of stabilizer tuples (conjugation law)",
          [&](CheckResult& r) {
    WordSampler rng(d, cfg.seed + 20);
    std::vector<GroupWord> witnesses;
    for (int i = 1; i <= d; ++i) witnesses.push_back(consecutive_spread(d, i).word);
    if (d >= 5)
      for (const auto& el : rist1_generators(d)) witnesses.push_back(el.word);
    for (size_t it = 0; it < std::min<size_t>(cfg.samples / 20 + 4, 40); ++it) {
      const GroupWord& w = witnesses[static_cast<size_t>(rng.below(witnesses.size()))];
      GroupWord h = rng.random_word(4);
      GroupWord c = h * w * h.inverse();
      expect(r, in_level_stabilizer(sys, c, 1), "conjugate left the stabilizer");
      Perm lam = level_perm(sys, h, 1).map;
      for (int x = 1; x <= d; ++x) {
        GroupWord hx = section(sys, h, {x});
        GroupWord expected =
            hx * section(sys, w, {static_cast<int>(lam[static_cast<size_t>(x - 1)]) + 1}) *
            hx.inverse();
        expect(r, equal(sys, section(sys, c, {x}), expected),
               "conjugate sections not the permuted-conjugated tuple");
      }
    }
    // the permuted-conjugated tuple is also reachable by a bounded search;
    // a miss within budget is inconclusive, never a failure
    {
      GroupWord w = witnesses[0];
      GroupWord h = GroupWord::generator(1);
      std::vector<GroupWord> target;
      Perm lam = level_perm(sys, h, 1).map;
      for (int x = 1; x <= d; ++x) {
        GroupWord hx = section(sys, h, {x});
        target.push_back(
            hx * section(sys, w, {static_cast<int>(lam[static_cast<size_t>(x - 1)]) + 1}) *
            hx.inverse());
      }
      SearchBudget small{std::min<size_t>(cfg.search_states, 4000), 128};
      auto res = witness_search(sys, target, perm_identity(static_cast<size_t>(d)), small);
      ++r.checks;
      if (res.witness) {
        for (int x = 1; x <= d; ++x)
          expect(r, equal(sys, section(sys, *res.witness, {x}),
                          target[static_cast<size_t>(x - 1)]),
                 "searched conjugate tuple mismatch");
      } else if (r.detail.empty()) {
        r.detail = "conjugate-tuple search inconclusive within budget (allowed)";
      }
    }
  });

  run.run("root permutation realization by adjacent generators", [&](CheckResult& r) {
    WordSampler rng(d, cfg.seed + 21);
    for (size_t it = 0; it < 50; ++it) {
      Perm lambda = perm_identity(static_cast<size_t>(d));
      for (size_t i = lambda.size(); i > 1; --i)
        std::swap(lambda[i - 1], lambda[static_cast<size_t>(rng.below(i))]);
      GroupWord w = word_with_root_perm(lambda);
      expect(r, level_perm(sys, w, 1).map == lambda, "realized word has wrong root perm");
      expect(r, (w.size() % 2 == 0) == (perm_parity(lambda) == 1),
             "word length parity mismatches permutation parity");
    }
  });

  run.run("witness search solves known signatures", [&](CheckResult& r) {
    SearchBudget budget{cfg.search_states, 128};
    // identity target
    auto res0 = witness_search(sys, std::vector<GroupWord>(static_cast<size_t>(d)),
                               perm_identity(static_cast<size_t>(d)), budget);
    expect(r, res0.witness && res0.witness->empty(), "identity target should yield e");
    // a consecutive-spread signature must be found and verified
    NamedElement sp = consecutive_spread(d, 1);
    auto res1 = witness_search(sys, sp.expected_sections, sp.expected_root, budget);
    expect(r, res1.witness.has_value(), "spread signature not found");
    if (res1.witness)
      expect(r, equal(sys, *res1.witness, sp.word), "found witness differs as an element");
    // tiny budget exhausts explicitly rather than reporting nonexistence
    if (d >= 5) {
      SearchBudget tiny{8, 4};
      std::vector<GroupWord> target(static_cast<size_t>(d));
      target[0] = GroupWord::generator(1).pow(4);
      auto res2 = witness_search(sys, target, perm_identity(static_cast<size_t>(d)), tiny);
      expect(r, !res2.witness && res2.budget_exhausted, "tiny budget should exhaust");
    }
  });
}

// ---------------------------------------------------------- stabilizers

void suite_stabilizers(SuiteResult& s, const VerifyConfig& cfg) {
  Runner run{s};
  const int d = cfg.d;
  WreathSystem sys = gd_system(d);
  const int kmax = std::min(cfg.max_level, 3);

  run.run("H_k membership and nesting", [&](CheckResult& r) {
    WordSampler rng(d, cfg.seed + 30);
    expect(r, in_H(GroupWord::generator(1).pow(4), 1, d), "a_1^4 in H_1");
    expect(r, !in_H(GroupWord::generator(1).pow(4), 2, d), "a_1^4 not in H_2");
    for (int k = 1; k <= 4; ++k) {
      GroupWord w = GroupWord::generator(1).pow(1LL << (k + 1));
      expect(r, in_H(w, k, d) && !in_H(w, k + 1, d), "H_k separating witness failed");
    }
    for (size_t it = 0; it < cfg.samples; ++it) {
      GroupWord w = rng.random_word(cfg.max_word_length);
      for (int k = 1; k < 4; ++k)
        if (in_H(w, k + 1, d))
          expect(r, in_H(w, k, d), "H_{k+1} not inside H_k");
      ++r.checks;
    }
  });

  run.run("stabilizer criterion: membership implies zero profile", [&](CheckResult& r) {
    WordSampler rng(d, cfg.seed + 31);
    size_t hits = 0;
    for (size_t it = 0; it < cfg.samples; ++it) {
      GroupWord w = rng.random_word(cfg.max_word_length);
      for (int k = 1; k <= kmax; ++k) {
        if (!in_level_stabilizer(sys, w, k)) continue;
        ++hits;
        expect(r, tuple_criterion(section_tuple(sys, w, k), d, k).all_zero(),
               "stabilizer word with nonzero profile: " + format_word(w));
      }
    }
    // structured members keep deeper levels non-vacuous
    for (int k = 1; k <= kmax; ++k) {
      for (size_t it = 0; it < cfg.samples / 20 + 10; ++it) {
        GroupWord w = rng.random_stabilizer_word(sys, k);
        ++hits;
        expect(r, tuple_criterion(section_tuple(sys, w, k), d, k).all_zero(),
               "structured stabilizer word with nonzero profile");
      }
    }
    if (r.detail.empty())
      r.detail = std::to_string(hits) + " stabilizer members checked";
  });

  run.run("criterion localizes violations", [&](CheckResult& r) {
    // (a_1, e, .., e) fails the r=1 congruence with residue 1
    std::vector<GroupWord> t(static_cast<size_t>(d));
    t[0] = GroupWord::generator(1);
    auto p = tuple_criterion(t, d, 1);
    expect(r, !p.all_zero() && p.residues[0][0] == 1, "expected residue 1 at (r=1,t=0)");
    // d=3, k=2 example: totals (2,0,0, 0,0,0, 2,0,0) has r=1 residues (2,0,2)
    if (d == 3) {
      std::vector<long long> totals{2, 0, 0, 0, 0, 0, 2, 0, 0};
      auto q = tuple_criterion_totals(totals, 3, 2);
      expect(r, q.residues[0][0] == 2 && q.residues[0][1] == 0 && q.residues[0][2] == 2,
             "r=1 residues wrong");
      expect(r, !q.all_zero(), "profile should be nonzero");
    }
    // a passing example
    std::vector<GroupWord> ok{GroupWord::generator(1), GroupWord::generator(1),
                              GroupWord::generator(1) * GroupWord::generator(2)};
    ok.resize(static_cast<size_t>(d));
    if (d == 3)
      expect(r, tuple_criterion(ok, 3, 1).all_zero(), "sum-4 tuple should pass at k=1");
  });

  run.run("rigid stabilizer membership", [&](CheckResult& r) {
    expect(r, in_rigid_stabilizer(sys, GroupWord{}, 1), "e rigid");
    expect(r, !in_rigid_stabilizer(sys, GroupWord::generator(1).pow(2), 1),
           "a_1^2 must fail (sections have total 2)");
    if (d >= 5) {
      auto wits = rist1_generators(d);
      WordSampler rng(d, cfg.seed + 32);
      for (size_t it = 0; it < 30; ++it) {
        // random product of witnesses stays rigid
        GroupWord w;
        for (size_t j = 0, n = 1 + rng.below(3); j < n; ++j) {
          const auto& el = wits[static_cast<size_t>(rng.below(wits.size()))];
          w = w * (rng.below(2) == 0 ? el.word : el.word.inverse());
        }
        expect(r, in_rigid_stabilizer(sys, w, 1), "product of rist witnesses not rigid");
      }
      expect(r, in_rist_of_vertex(sys, wits[0].word, {1}), "witness supported at vertex 1");
      expect(r, !in_rist_of_vertex(sys, wits[0].word, {2}), "witness not supported at 2");
    }
    expect(r, in_rist_of_vertex(sys, GroupWord{}, {1, 1}), "e in every Rist(u)");
    expect(r, in_rist_of_vertex(sys, GroupWord::generator(1), {}), "root Rist is everything");
  });

  run.run("fractal lift tuples are admissible", [&](CheckResult& r) {
    WordSampler rng(d, cfg.seed + 33);
    for (size_t it = 0; it < cfg.samples / 20 + 10; ++it) {
      int k = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(kmax)));
      GroupWord w = rng.random_stabilizer_word(sys, k);
      int x = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(d)));
      auto tuple = fractal_lift_exists(sys, w, k, x);
      expect(r, tuple_criterion(tuple, d, 1).all_zero(), "lift tuple fails the criterion");
      expect(r, tuple[static_cast<size_t>(x - 1)] == w, "lift does not carry w at slot x");
      long long total = exponent_vector(w, d).total;
      size_t copies = 0;
      for (const auto& e : tuple)
        if (!e.empty()) ++copies;
      if (w.empty())
        expect(r, copies == 0, "identity lift should be empty tuple");
      else
        expect(r, copies == (total % 4 == 0 ? 1u : 2u), "wrong lift branch");
    }
    auto e_tuple = fractal_lift_exists(sys, GroupWord{}, 1, 1);
    bool all_e = true;
    for (const auto& e : e_tuple) all_e = all_e && e.empty();
    expect(r, all_e, "lift of e not all-e");
  });
}

// ------------------------------------------------------------- quotient

void suite_quotient(SuiteResult& s, const VerifyConfig& cfg) {
  Runner run{s};
  const int d = cfg.d;
  WreathSystem sys = gd_system(d);

  run.run("theta is a bijective homomorphism at (3,1)", [&](CheckResult& r) {
    if (d != 3) {
      ++r.checks;
      return;
    }
    std::vector<QuotientCoset> all;
    for (uint64_t n1 = 0; n1 < 4; ++n1)
      for (uint64_t n2 = 0; n2 < 4; ++n2)
        all.emplace_back(3, 1, std::vector<uint64_t>{n1, n2, (8 - n1 - n2) % 4});
    expect(r, all.size() == 16, "expected 16 admissible cosets");
    std::set<std::vector<uint64_t>> images;
    for (const auto& c : all) images.insert(theta(c).l);
    expect(r, images.size() == 16, "theta not injective on enumeration");
    expect(r, theta_alpha(3, 1, 1) == 4 && theta_alpha(3, 1, 2) == 4,
           "alpha should be (4,4)");
    WordSampler rng(3, cfg.seed + 40);
    for (size_t it = 0; it < 200; ++it) {
      const auto& a = all[static_cast<size_t>(rng.below(all.size()))];
      const auto& b = all[static_cast<size_t>(rng.below(all.size()))];
      auto lhs = theta(coset_mul(a, b));
      auto ta = theta(a), tb = theta(b);
      bool hom = true;
      for (size_t j = 0; j < lhs.l.size(); ++j)
        hom = hom && lhs.l[j] == (ta.l[j] + tb.l[j]) % theta_alpha(3, 1, j + 1);
      expect(r, hom, "theta not a homomorphism");
    }
  });

  run.run("theta round-trips on random cosets", [&](CheckResult& r) {
    WordSampler rng(d, cfg.seed + 41);
    for (int k = 1; k <= 2; ++k) {
      uint64_t size = 1;
      for (int i = 0; i < k; ++i) size *= static_cast<uint64_t>(d);
      for (size_t it = 0; it < cfg.samples / 4 + 50; ++it) {
        ThetaImage img;
        img.d = d;
        img.k = k;
        for (uint64_t j = 1; j < size; ++j)
          img.l.push_back(rng.below(theta_alpha(d, k, j)));
        QuotientCoset c = theta_inv(img);
        expect(r, theta(c) == img, "theta(theta_inv(l)) != l");
        expect(r, theta_inv(theta(c)) == c, "theta_inv(theta(c)) != c");
      }
    }
  });

  run.run("coset arithmetic is well-defined on representatives", [&](CheckResult& r) {
    WordSampler rng(d, cfg.seed + 42);
    for (int k = 1; k <= 2; ++k) {
      for (size_t it = 0; it < cfg.samples / 8 + 20; ++it) {
        GroupWord u = rng.random_stabilizer_word(sys, k);
        GroupWord v = rng.random_stabilizer_word(sys, k);
        expect(r, coset_of(sys, u * v, k) == coset_mul(coset_of(sys, u, k), coset_of(sys, v, k)),
               "coset_of(uv) != coset_of(u) + coset_of(v)");
      }
    }
  });

  run.run("rho matches re-evaluation one level down", [&](CheckResult& r) {
    WordSampler rng(d, cfg.seed + 43);
    for (size_t it = 0; it < cfg.samples / 8 + 20; ++it) {
      GroupWord w = rng.random_stabilizer_word(sys, 2);
      expect(r, rho(coset_of(sys, w, 2)) == coset_of(sys, w, 1),
             "rho(coset_2) != coset_1");
    }
    if (d == 3) {
      QuotientCoset c(3, 2, {2, 2, 0, 0, 0, 0, 2, 2, 0});
      expect(r, rho(c).n == std::vector<uint64_t>({2, 0, 2}), "worked rho example");
    }
  });

  run.run("rho image is exactly the even cosets", [&](CheckResult& r) {
    WordSampler rng(d, cfg.seed + 44);
    for (size_t it = 0; it < cfg.samples / 8 + 20; ++it) {
      // arbitrary admissible level-2 coset via theta_inv
      uint64_t size = static_cast<uint64_t>(d) * static_cast<uint64_t>(d);
      ThetaImage img;
      img.d = d;
      img.k = 2;
      for (uint64_t j = 1; j < size; ++j) img.l.push_back(rng.below(theta_alpha(d, 2, j)));
      QuotientCoset down = rho(theta_inv(img));
      for (uint64_t v : down.n) expect(r, v % 2 == 0, "rho emitted an odd residue");
      // doubling any level-1 coset gives an even coset with a preimage
      ThetaImage im1;
      im1.d = d;
      im1.k = 1;
      for (uint64_t j = 1; j < static_cast<uint64_t>(d); ++j)
        im1.l.push_back(rng.below(theta_alpha(d, 1, j)));
      QuotientCoset c1 = theta_inv(im1);
      QuotientCoset even = coset_mul(c1, c1);
      std::vector<uint64_t> up(static_cast<size_t>(size), 0);
      for (uint64_t j = 1; j <= static_cast<uint64_t>(d); ++j)
        up[static_cast<size_t>(j * static_cast<uint64_t>(d) - 1)] =
            (2 * even.n[static_cast<size_t>(j - 1)]) % 8;
      QuotientCoset pre(d, 2, std::move(up));
      expect(r, rho(pre) == even, "constructed preimage fails");
    }
    if (d == 3) {
      QuotientCoset odd(3, 1, {1, 1, 2}); // valid coset, odd coordinates
      expect(r, !odd.is_zero(), "odd example");
      ++r.checks; // oddness of any rho output checked above
    }
  });

  run.run("kernel towers: construction, evenness, round-trips", [&](CheckResult& r) {
    WordSampler rng(d, cfg.seed + 45);
    const int K = 4;
    for (size_t it = 0; it < cfg.samples / 10 + 20; ++it) {
      // random phi-side image
      PhiImage img;
      img.d = d;
      img.K = K;
      img.eta.resize(K);
      for (int k = 1; k <= K; ++k) {
        uint64_t dk = 1;
        for (int i = 0; i < k; ++i) dk *= static_cast<uint64_t>(d);
        uint64_t count = dk - dk / static_cast<uint64_t>(d);
        for (uint64_t j = 0; j < count; ++j)
          img.eta[static_cast<size_t>(k - 1)].push_back(rng.below(uint64_t{1} << k));
      }
      KernelElement el = phi_inv(img);
      expect(r, phi(el) == img, "phi(phi_inv(img)) != img");
      // free residues extracted from the element rebuild it
      FreeResidues fr(static_cast<size_t>(K));
      for (int k = 1; k <= K; ++k) {
        const auto& c = el.levels[static_cast<size_t>(k - 1)];
        for (uint64_t j = 1; j <= c.n.size(); ++j)
          if (j % static_cast<uint64_t>(d) != 0)
            fr[static_cast<size_t>(k - 1)].push_back(c.n[static_cast<size_t>(j - 1)]);
      }
      expect(r, kernel_from_free(d, K, fr) == el, "kernel_from_free(free(el)) != el");
      // homomorphism through phi
      PhiImage img2;
      img2.d = d;
      img2.K = K;
      img2.eta.resize(K);
      for (int k = 1; k <= K; ++k)
        for (uint64_t v : img.eta[static_cast<size_t>(k - 1)]) {
          (void)v;
          img2.eta[static_cast<size_t>(k - 1)].push_back(rng.below(uint64_t{1} << k));
        }
      KernelElement el2 = phi_inv(img2);
      KernelElement prod = kernel_mul(el, el2);
      PhiImage sum = phi(prod);
      bool hom = true;
      for (int k = 1; k <= K && hom; ++k) {
        const auto& a = img.eta[static_cast<size_t>(k - 1)];
        const auto& b = img2.eta[static_cast<size_t>(k - 1)];
        const auto& c = sum.eta[static_cast<size_t>(k - 1)];
        for (size_t j = 0; j < a.size() && hom; ++j)
          hom = c[j] == (a[j] + b[j]) % (uint64_t{1} << k);
      }
      expect(r, hom, "phi not a homomorphism");
    }
    if (d == 3) {
      auto el = kernel_from_free(3, 2, {{2, 0}, {0, 0, 0, 0, 0, 0}});
      expect(r, el.levels[0].n == std::vector<uint64_t>({2, 0, 2}), "worked example level 1");
      expect(r, el.levels[1].n == std::vector<uint64_t>({0, 0, 4, 0, 0, 0, 0, 0, 4}),
             "worked example level 2");
      auto im = phi(el);
      expect(r, im.eta[0] == std::vector<uint64_t>({1, 0}), "worked example phi level 1");
      bool zeros = true;
      for (uint64_t v : im.eta[1]) zeros = zeros && v == 0;
      expect(r, zeros, "worked example phi level 2");
    }
  });

  run.run("torsion evidence from truncations", [&](CheckResult& r) {
    const int K = 6;
    FreeResidues zero(static_cast<size_t>(K));
    FreeResidues level1(static_cast<size_t>(K));
    FreeResidues maximal(static_cast<size_t>(K));
    for (int k = 1; k <= K; ++k) {
      uint64_t dk = 1;
      for (int i = 0; i < k; ++i) dk *= static_cast<uint64_t>(d);
      uint64_t count = dk - dk / static_cast<uint64_t>(d);
      zero[static_cast<size_t>(k - 1)].assign(count, 0);
      level1[static_cast<size_t>(k - 1)].assign(count, 0);
      maximal[static_cast<size_t>(k - 1)].assign(count, (uint64_t{1} << k) - 2);
    }
    level1[0].assign(level1[0].size(), 2);
    auto tid = torsion_profile(kernel_from_free(d, K, zero));
    expect(r, tid.order_at_depth.back() == 1 && tid.stabilized, "identity profile");
    auto t1 = torsion_profile(kernel_from_free(d, K, level1));
    expect(r, t1.stabilized && t1.order_at_depth.back() <= 4, "level-1 element profile");
    auto tm = torsion_profile(kernel_from_free(d, K, maximal));
    expect(r, !tm.stabilized, "maximal element should keep growing");
    expect(r, tm.order_at_depth.back() == uint64_t{1} << K, "maximal order at depth K");
  });

  run.run("branch kernel arithmetic chain", [&](CheckResult& r) {
    for (int k = 1; k <= 3; ++k) {
      auto rep = branch_kernel_check(d, k);
      expect(r, rep.holds && rep.forced_total == 2,
             "chain fails at k=" + std::to_string(k));
    }
    if (d == 3) {
      SearchBudget budget{std::min<size_t>(cfg.search_states, 30000), 20};
      auto rep = branch_kernel_check(3, 1, &budget);
      expect(r, rep.search_attempted, "search not attempted");
      if (rep.witness_word) {
        expect(r, rep.witness_total && *rep.witness_total == 2,
               "found witness must have total 2");
        r.detail = "witness found: " + *rep.witness_word;
      } else if (r.detail.empty()) {
        r.detail = "witness search inconclusive within budget (allowed)";
      }
    }
  });
}

// ---------------------------------------------------------------- trace

void suite_trace(SuiteResult& s, const VerifyConfig& cfg) {
  Runner run{s};
  const int d = cfg.d;
  WreathSystem sys = gd_system(d);

  run.run("commutation relation boundaries", [&](CheckResult& r) {
    for (int i = 1; i <= d; ++i) {
      expect(r, !commutes(i, i, d), "self-commuting letter");
      if (i < d) expect(r, !commutes(i, i + 1, d), "neighbors commute");
    }
    expect(r, !commutes(1, d, d), "(1,d) must not commute (plain distance)");
    if (d == 3)
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
          expect(r, !commutes(i, j, 3), "free monoid at d = 3");
    if (d >= 5) {
      expect(r, commutes(1, 3, d), "(1,3) commutes");
      expect(r, !commutes(1, 2, d), "(1,2) free");
    }
  });

  run.run("normal form is canonical and letter-preserving", [&](CheckResult& r) {
    WordSampler rng(d, cfg.seed + 50);
    for (size_t it = 0; it < cfg.samples; ++it) {
      TraceWord w = rng.random_trace(1 + rng.below(10));
      TraceWord nf = normal_form(w, d);
      expect(r, normal_form(nf, d) == nf, "normal form not idempotent");
      TraceWord a = w, b = nf;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      expect(r, a == b, "normal form changed the letter multiset");
      expect(r, projection_equal(w, nf, d), "normal form left the trace class");
      expect(r, !(nf > w) || nf == w, "normal form not <= input");
      TraceWord shuffled = w;
      // random adjacent commuting swaps stay in the class
      for (int sw = 0; sw < 5 && shuffled.size() >= 2; ++sw) {
        size_t p = rng.below(shuffled.size() - 1);
        if (commutes(shuffled[p], shuffled[p + 1], d))
          std::swap(shuffled[p], shuffled[p + 1]);
      }
      expect(r, normal_form(shuffled, d) == nf, "swapped word has different normal form");
    }
  });

  run.run("monoid equality agrees with letter-pair projections", [&](CheckResult& r) {
    WordSampler rng(d, cfg.seed + 51);
    for (size_t it = 0; it < cfg.samples; ++it) {
      TraceWord u = rng.random_trace(1 + rng.below(8));
      TraceWord v = rng.below(3) == 0 ? u : rng.random_trace(1 + rng.below(8));
      if (rng.below(2) == 0 && u.size() >= 2) {
        v = u;
        size_t p = rng.below(v.size() - 1);
        std::swap(v[p], v[p + 1]); // may or may not be legal
      }
      expect(r, monoid_equal(u, v, d) == projection_equal(u, v, d),
             "normal-form route disagrees with projection route");
    }
  });

  run.run("monoid equality matches the tree-engine word problem", [&](CheckResult& r) {
    // exhaustive over short positive words
    std::vector<TraceWord> words;
    size_t maxlen = d == 3 ? 4 : 3;
    std::function<void(TraceWord&)> gen = [&](TraceWord& w) {
      if (!w.empty()) words.push_back(w);
      if (w.size() == maxlen) return;
      for (int a = 1; a <= d; ++a) {
        w.push_back(a);
        gen(w);
        w.pop_back();
      }
    };
    TraceWord w0;
    gen(w0);
    uint64_t bad = cfg.parallel ? par::trace_tree_discrepancies_parallel(sys, words)
                                : par::trace_tree_discrepancies_serial(sys, words);
    expect(r, bad == 0, std::to_string(bad) + " disagreements on exhaustive pairs");
    r.detail = std::to_string(words.size() * (words.size() + 1) / 2) + " pairs compared";
    // seeded random longer pairs
    WordSampler rng(d, cfg.seed + 52);
    for (size_t it = 0; it < cfg.samples / 4 + 25; ++it) {
      TraceWord u = rng.random_trace(5);
      TraceWord v = rng.random_trace(5);
      bool m = monoid_equal(u, v, d);
      bool t = equal(sys, word_from_trace(u), word_from_trace(v));
      expect(r, m == t, "random length-5 pair disagrees");
    }
  });

  run.run("growth counting: three routes agree", [&](CheckResult& r) {
    auto series = growth_series_mobius(d, 8);
    for (int n = 0; n <= 6; ++n) {
      uint64_t dfs = growth_count(d, n);
      expect(r, dfs == series[static_cast<size_t>(n)], "DFS != recurrence at n=" +
                                                           std::to_string(n));
      if (n <= 4) {
        // brute force: normalize every word of length n
        std::set<TraceWord> classes;
        std::function<void(TraceWord&)> gen = [&](TraceWord& w) {
          if (static_cast<int>(w.size()) == n) {
            classes.insert(normal_form(w, d));
            return;
          }
          for (int a = 1; a <= d; ++a) {
            w.push_back(a);
            gen(w);
            w.pop_back();
          }
        };
        TraceWord w0;
        gen(w0);
        expect(r, classes.size() == dfs, "brute enumeration != DFS at n=" + std::to_string(n));
      }
    }
    expect(r, growth_count(d, 0) == 1 && growth_count(d, 1) == static_cast<uint64_t>(d),
           "base growth values");
    if (d == 3)
      for (int n = 1; n <= 8; ++n) {
        uint64_t want = 1;
        for (int i = 0; i < n; ++i) want *= 3;
        expect(r, growth_count(3, n) == want, "free monoid growth at d=3");
      }
    if (d == 5) expect(r, growth_count(5, 2) == 20, "growth(5,2) != 20");
    for (int n = 1; n <= 10; ++n)
      expect(r, growth_count(d, n) >= (uint64_t{1} << n), "growth below 2^n");
  });

  run.run("positive-word guard", [&](CheckResult& r) {
    try {
      trace_from_word(parse_word("a1 a2'", d));
      expect(r, false, "inverse letter accepted");
    } catch (const UsageError&) {
      ++r.checks;
    }
  });
}

// -------------------------------------------------------------- indices

void suite_indices(SuiteResult& s, const VerifyConfig& cfg) {
  Runner run{s};
  const int d = cfg.d;

  run.run("closed forms match the permutation-group oracle", [&](CheckResult& r) {
    WreathSystem sys = gd_system(d);
    int kmax = d == 3 ? 3 : 1;
    for (int k = 1; k <= kmax; ++k) {
      std::vector<Perm> gens;
      for (int i = 1; i <= d; ++i)
        gens.push_back(level_perm(sys, GroupWord::generator(i), k).map);
      expect(r, group_order(gens, cfg.seed) == index_g_st(d, k).value(),
             "closed form != chain order at k=" + std::to_string(k));
      if (k <= 2) {
        auto e = bfs_enumerate(gens, cfg.bfs_cap);
        if (!e.overflow)
          expect(r, BigInt(e.elements.size()) == index_g_st(d, k).value(),
                 "BFS count != order");
      }
    }
    if (d == 3) {
      expect(r, index_g_st(3, 1).value() == 6, "[G_3:St(1)] = 6");
      expect(r, index_g_st(3, 2).value() == 648, "[G_3:St(2)] = 648");
      expect(r, index_g_st(3, 3).value() == 816293376, "[G_3:St(3)] = 816293376");
      expect(r, index_st_st(3, 1).value() == 108, "[St(1):St(2)] = 108");
      expect(r, index_aut_st(3, 2).value() == 1296, "[Aut:St(2)] = 1296");
      expect(r, rist_exponent_t(3, 1) == 4 && rist_exponent_t(3, 2) == 20, "t values");
    }
    if (d == 5) expect(r, index_g_st(5, 1).value() == 120, "[G_5:St(1)] = 120");
  });

  run.run("aut oracle equals the iterated wreath order", [&](CheckResult& r) {
    int kmax = d == 3 ? 3 : (d == 5 ? 2 : 1);
    WreathSystem aut = aut_system(d, kmax);
    for (int k = 1; k <= kmax; ++k) {
      std::vector<Perm> gens;
      for (int i = 1; i <= aut.num_generators(); ++i)
        gens.push_back(level_perm(aut, GroupWord::generator(i), k).map);
      expect(r, group_order(gens, cfg.seed) == index_aut_st(d, k).value(),
             "aut system not full at level " + std::to_string(k));
    }
    for (int k = 1; k <= 6; ++k) {
      BigInt direct = 1; // product of d!^(d^j)
      BigInt dj = 1;
      for (int j = 0; j < k; ++j) {
        direct *= boost::multiprecision::pow(factorial(d), static_cast<unsigned>(dj));
        dj *= d;
      }
      auto v = index_aut_st(d, k).value_if_at_most_digits(100000);
      expect(r, v.has_value() && *v == direct, "closed form != iterated wreath order");
    }
  });

  run.run("factored forms stay exact and telescope", [&](CheckResult& r) {
    for (int dd = 3; dd <= 15; dd += 2) {
      for (int k = 1; k <= 10; ++k) {
        expect(r, index_st_st(dd, k).division_exact(), "inexact [St:St]");
        expect(r, index_g_st(dd, k).division_exact(), "inexact [G:St]");
        geometric_sum(dd, k);    // throws if not integral
        rist_exponent_t(dd, k);  // throws if not integral
        ++r.checks;
        // telescoping in exponents: [G:St(k+1)] = [G:St(k)] * [St(k):St(k+1)]
        auto g1 = index_g_st(dd, k + 1);
        auto g0 = index_g_st(dd, k);
        auto st = index_st_st(dd, k);
        expect(r, g1.e_factorial == g0.e_factorial + st.e_factorial &&
                      g1.e_two == g0.e_two + st.e_two,
               "telescoping fails in factored form");
      }
    }
    // [St(k):Rist(k)] = 2^t equals the product of the theta factor orders
    for (int k = 1; k <= 3; ++k) {
      BigInt prod = 1;
      uint64_t size = 1;
      for (int i = 0; i < k; ++i) size *= static_cast<uint64_t>(d);
      for (uint64_t j = 1; j < size; ++j) prod *= theta_alpha(d, k, j);
      expect(r, prod == boost::multiprecision::pow(BigInt(2),
                                                   static_cast<unsigned>(rist_exponent_t(d, k))),
             "|prod C_alpha| != 2^t at k=" + std::to_string(k));
    }
  });

  run.run("index table rows", [&](CheckResult& r) {
    auto table = index_table(d, 3);
    expect(r, table.rows.size() == 3, "row count");
    for (const auto& row : table.rows) {
      expect(r, row.st_next.division_exact() && row.g_next.division_exact(),
             "row not exact");
      expect(r, row.st_rist.e_factorial == 0, "rist index has a factorial part");
    }
    if (d == 3) {
      expect(r, table.rows[0].st_next.value() == 108 && table.rows[0].g_next.value() == 648 &&
                    table.rows[0].aut_next.value() == 1296 &&
                    table.rows[0].st_rist.value() == 16,
             "row k=1 should be 108, 648, 1296, 16");
    }
  });

  run.run("hausdorff dimension and ratio convergence", [&](CheckResult& r) {
    auto h = hausdorff_dimension(d, 25);
    // independent evaluation of 1 - log 2 / (d log d!)
    HighFloat lit = HighFloat(1) - boost::multiprecision::log(HighFloat(2)) /
                                       (HighFloat(d) * boost::multiprecision::log(
                                                           HighFloat(factorial(d))));
    expect(r, boost::multiprecision::abs(h.closed_form - lit) < HighFloat("1e-12"),
           "closed form differs from literal evaluation");
    expect(r, boost::multiprecision::abs(h.ratios[0] - HighFloat(1)) < HighFloat("1e-40"),
           "r_1 should be exactly 1 (no factor of 2 at k = 1)");
    expect(r, boost::multiprecision::abs(h.ratios[19] - h.closed_form) < HighFloat("1e-6"),
           "r_20 not within 1e-6 of the limit");
    // B_k/C_k strictly increases (exact integer cross-multiplication)
    for (int k = 1; k < 25; ++k) {
      BigInt b0 = geometric_sum(d, k - 1), c0 = geometric_sum(d, k);
      BigInt b1 = geometric_sum(d, k), c1 = geometric_sum(d, k + 1);
      expect(r, b0 * c1 < b1 * c0, "B_k/C_k not strictly increasing");
    }
    for (size_t k = 1; k < h.ratios.size(); ++k)
      expect(r, h.ratios[k] <= h.ratios[k - 1] + HighFloat("1e-45"),
             "ratios should be non-increasing toward the limit");
  });

  run.run("permutation group handle basics", [&](CheckResult& r) {
    std::vector<Perm> s3 = {{1, 0, 2}, {0, 2, 1}};
    PermGroupHandle h(s3, cfg.seed);
    expect(r, h.order() == 6, "S_3 order");
    expect(r, h.contains({2, 1, 0}), "membership");
    expect(r, !h.contains({0, 1, 2, 3}), "degree mismatch rejected");
    auto e = bfs_enumerate(s3, 10);
    expect(r, !e.overflow && e.elements.size() == 6, "S_3 enumeration");
    auto e2 = bfs_enumerate(s3, 5);
    expect(r, e2.overflow, "cap should overflow");
    // order invariant under augmentation by products
    std::vector<Perm> aug = s3;
    aug.push_back(perm_then(s3[0], s3[1]));
    expect(r, group_order(aug, cfg.seed + 7) == 6, "augmented order changed");
    // seed invariance
    expect(r, group_order(s3, 1) == group_order(s3, 999), "order depends on seed");
  });
}

// ------------------------------------------------------------- parallel

void suite_parallel(SuiteResult& s, const VerifyConfig& cfg) {
  Runner run{s};
  const int d = cfg.d;
  WreathSystem sys = gd_system(d);

  run.run("level permutation kernels agree", [&](CheckResult& r) {
    WordSampler rng(d, cfg.seed + 60);
    int k = d == 3 ? 6 : 4;
    for (size_t it = 0; it < 10; ++it) {
      GroupWord w = rng.random_word(cfg.max_word_length);
      auto rec = level_perm(sys, w, k);
      auto flat = par::level_perm_flat_serial(sys, w, k);
      auto par_ = par::level_perm_flat_parallel(sys, w, k);
      expect(r, rec == flat, "recursive != flat serial");
      expect(r, flat == par_, "flat serial != flat parallel");
    }
  });

  run.run("batch identity kernels agree", [&](CheckResult& r) {
    WordSampler rng(d, cfg.seed + 61);
    std::vector<GroupWord> words;
    for (size_t i = 0; i < cfg.samples; ++i) words.push_back(rng.random_word(10));
    words.push_back(GroupWord{});
    words.push_back(xi(d, 1).word.pow(2));
    auto a = par::batch_is_identity_serial(sys, words);
    auto b = par::batch_is_identity_parallel(sys, words);
    expect(r, a == b, "serial and parallel identity batches differ");
  });

  run.run("trace comparison kernels agree", [&](CheckResult& r) {
    WordSampler rng(d, cfg.seed + 62);
    std::vector<TraceWord> words;
    for (size_t i = 0; i < 60; ++i) words.push_back(rng.random_trace(1 + rng.below(4)));
    expect(r, par::trace_tree_discrepancies_serial(sys, words) ==
                  par::trace_tree_discrepancies_parallel(sys, words),
           "discrepancy counts differ");
  });

  run.run("growth kernels agree", [&](CheckResult& r) {
    for (int n = 0; n <= (d == 3 ? 9 : 7); ++n)
      expect(r, par::growth_count_serial(d, n) == par::growth_count_parallel(d, n),
             "growth counts differ at n=" + std::to_string(n));
  });
}

} // namespace

std::vector<std::string> suite_names() {
  return {"words", "tree", "presets", "stabilizers", "quotient", "trace", "indices",
          "parallel"};
}

SuiteResult run_suite(const std::string& name, const VerifyConfig& cfg) {
  SuiteResult s;
  s.suite = name;
  if (name == "words")
    suite_words(s, cfg);
  else if (name == "tree")
    suite_tree(s, cfg);
  else if (name == "presets")
    suite_presets(s, cfg);
  else if (name == "stabilizers")
    suite_stabilizers(s, cfg);
  else if (name == "quotient")
    suite_quotient(s, cfg);
  else if (name == "trace")
    suite_trace(s, cfg);
  else if (name == "indices")
    suite_indices(s, cfg);
  else if (name == "parallel")
    suite_parallel(s, cfg);
  else
    throw UsageError("unknown suite \"" + name + "\"; available: words, tree, presets, "
                     "stabilizers, quotient, trace, indices, parallel");
  return s;
}

std::vector<SuiteResult> run_all_suites(const VerifyConfig& cfg) {
  std::vector<SuiteResult> out;
  for (const auto& name : suite_names()) out.push_back(run_suite(name, cfg));
  return out;
}

} // namespace branchlab
