#include "branchlab/cli_app.hpp"

#include <algorithm>
#include <functional>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "branchlab/gd_presets.hpp"
#include "branchlab/indices.hpp"
#include "branchlab/parallel.hpp"
#include "branchlab/permgroup.hpp"
#include "branchlab/quotient_kernel.hpp"
#include "branchlab/stabilizers.hpp"
#include "branchlab/trace_monoid.hpp"
#include "branchlab/tree_engine.hpp"
#include "branchlab/verify.hpp"

namespace branchlab {

namespace {

using Json = nlohmann::ordered_json;

struct CliOptions {
  int d = 3;
  std::string format = "json"; // json|csv|text
  uint64_t seed = 1;
  int max_level = 3;
  uint64_t max_vertices = 10'000'000;
  size_t samples = 2000;
  size_t search_states = 100000;
  size_t search_length = 128;
  bool serial = false;
};

std::string cycles_of(const LevelPermutation& p) {
  if (p.level <= 1) return perm_cycles(p.map);
  std::string out;
  std::vector<bool> seen(p.map.size(), false);
  for (size_t i = 0; i < p.map.size(); ++i) {
    if (seen[i] || p.map[i] == i) {
      seen[i] = true;
      continue;
    }
    out += '(';
    bool first = true;
    for (size_t j = i; !seen[j]; j = p.map[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += format_vertex(vertex_at(j, p.d, p.level), p.d);
      first = false;
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Json coset_json(const QuotientCoset& c) {
  return Json{{"d", c.d}, {"k", c.k}, {"n", c.n}};
}

QuotientCoset coset_from_json(const Json& j) {
  if (!j.contains("d") || !j.contains("k") || !j.contains("n"))
    throw UsageError("coset JSON needs fields d, k, n");
  return QuotientCoset(j.at("d").get<int>(), j.at("k").get<int>(),
                       j.at("n").get<std::vector<uint64_t>>());
}

KernelElement kernel_from_json(const Json& j) {
  if (j.contains("free")) {
    return kernel_from_free(j.at("d").get<int>(), j.at("K").get<int>(),
                            j.at("free").get<FreeResidues>());
  }
  if (!j.contains("levels"))
    throw UsageError("kernel JSON needs either \"free\" or \"levels\"");
  std::vector<QuotientCoset> levels;
  for (const auto& lj : j.at("levels")) levels.push_back(coset_from_json(lj));
  return KernelElement(j.at("d").get<int>(), j.at("K").get<int>(), std::move(levels));
}

Json profile_json(const BlockCongruenceProfile& p) {
  Json rows = Json::array();
  for (int r = 1; r <= p.k; ++r)
    rows.push_back(Json{{"r", r},
                        {"modulus", uint64_t{1} << (r + 1)},
                        {"residues", p.residues[static_cast<size_t>(r - 1)]}});
  return Json{{"all_zero", p.all_zero()}, {"rows", rows}};
}

Json factored_json(const FactoredIndex& fi) {
  Json j{{"e_factorial", fi.e_factorial.str()}, {"e_two", fi.e_two.str()}};
  if (auto v = fi.value_if_at_most_digits(10000)) {
    j["value"] = v->str();
  } else {
    j["value"] = nullptr;
    j["decimal_digits"] = fi.decimal_digits().str();
  }
  return j;
}

void emit(const Json& j, const CliOptions& opt, std::ostream& out) {
  if (opt.format == "json") {
    out << j.dump(2) << "\n";
    return;
  }
  // text: flat key/value rendering
  std::function<void(const Json&, const std::string&)> render =
      [&](const Json& node, const std::string& prefix) {
        if (node.is_object()) {
          for (auto it = node.begin(); it != node.end(); ++it)
            render(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
        } else if (node.is_array()) {
          bool scalars = true;
          for (const auto& e : node) scalars = scalars && !e.is_structured();
          if (scalars) {
            out << prefix << ":";
            for (const auto& e : node) out << " " << e.dump();
            out << "\n";
          } else {
            size_t i = 0;
            for (const auto& e : node) render(e, prefix + "[" + std::to_string(i++) + "]");
          }
        } else {
          out << prefix << ": " << (node.is_string() ? node.get<std::string>() : node.dump())
              << "\n";
        }
      };
  render(j, "");
}

WreathSystem make_system(const CliOptions& opt) {
  WreathSystem sys = gd_system(opt.d);
  sys.set_max_level_vertices(opt.max_vertices);
  return sys;
}

int exit_code_for(const Error& e) {
  if (e.code() == "usage" || e.code() == "not-applicable") return 2;
  if (e.code() == "resource") return 3;
  return 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"branchlab: exact computation in the non-contracting self-similar branch "
               "groups G_d on d-regular rooted trees"};
  app.set_config("--config", "", "read options from an INI/TOML file");
  CliOptions opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();

  auto add_d = [&](CLI::App* cmd) {
    cmd->add_option("--d", opt.d, "tree arity / generator count (odd, >= 3)")
        ->capture_default_str();
  };

  std::string word_text, word2_text, vertex_text, json_text, suite = "all";
  int level = 1, k_param = 1, n_param = 8, k_max = 3, index_i = 1;
  std::string named_kind;

  Json output;

  // act
  auto* c_act = app.add_subcommand("act", "image of a vertex under a word");
  add_d(c_act);
  c_act->add_option("word", word_text)->required();
  c_act->add_option("vertex", vertex_text)->required();
  c_act->callback([&] {
    WreathSystem sys = make_system(opt);
    GroupWord w = parse_word(word_text, sys.num_generators());
    Vertex v = parse_vertex(vertex_text, opt.d);
    output = Json{{"command", "act"},
                  {"d", opt.d},
                  {"word", format_word(w)},
                  {"vertex", format_vertex(v, opt.d)},
                  {"image", format_vertex(act(sys, w, v), opt.d)}};
  });

  // section
  auto* c_sec = app.add_subcommand("section", "section of a word at a vertex");
  add_d(c_sec);
  c_sec->add_option("word", word_text)->required();
  c_sec->add_option("vertex", vertex_text)->required();
  c_sec->callback([&] {
    WreathSystem sys = make_system(opt);
    GroupWord w = parse_word(word_text, sys.num_generators());
    Vertex v = parse_vertex(vertex_text, opt.d);
    output = Json{{"command", "section"},
                  {"d", opt.d},
                  {"word", format_word(w)},
                  {"vertex", format_vertex(v, opt.d)},
                  {"section", format_word(section(sys, w, v))}};
  });

  // perm
  auto* c_perm = app.add_subcommand("perm", "induced permutation of level k");
  add_d(c_perm);
  c_perm->add_option("word", word_text)->required();
  c_perm->add_option("--level", level)->capture_default_str();
  c_perm->add_option("--max-vertices", opt.max_vertices)->capture_default_str();
  c_perm->callback([&] {
    WreathSystem sys = make_system(opt);
    GroupWord w = parse_word(word_text, sys.num_generators());
    LevelPermutation lp = level_perm(sys, w, level);
    output = Json{{"command", "perm"},
                  {"d", opt.d},
                  {"word", format_word(w)},
                  {"level", level},
                  {"cycles", cycles_of(lp)},
                  {"trivial", lp.trivial()}};
  });

  // identity / equal
  auto* c_id = app.add_subcommand("identity", "decide whether a word is the identity");
  add_d(c_id);
  c_id->add_option("word", word_text)->required();
  c_id->callback([&] {
    WreathSystem sys = make_system(opt);
    GroupWord w = parse_word(word_text, sys.num_generators());
    IdentityCheck c = is_identity_stats(sys, w);
    output = Json{{"command", "identity"},
                  {"d", opt.d},
                  {"word", format_word(w)},
                  {"is_identity", c.isIdentity},
                  {"closure_size", c.closureSize}};
  });

  auto* c_eq = app.add_subcommand("equal", "decide equality of two words");
  add_d(c_eq);
  c_eq->add_option("word1", word_text)->required();
  c_eq->add_option("word2", word2_text)->required();
  c_eq->callback([&] {
    WreathSystem sys = make_system(opt);
    GroupWord u = parse_word(word_text, sys.num_generators());
    GroupWord v = parse_word(word2_text, sys.num_generators());
    IdentityCheck c = is_identity_stats(sys, u * v.inverse());
    output = Json{{"command", "equal"},
                  {"d", opt.d},
                  {"word1", format_word(u)},
                  {"word2", format_word(v)},
                  {"equal", c.isIdentity},
                  {"closure_size", c.closureSize}};
  });

  // stab / rist / inH
  auto* c_stab = app.add_subcommand("stab", "level-stabilizer membership");
  add_d(c_stab);
  c_stab->add_option("word", word_text)->required();
  c_stab->add_option("--level", level)->capture_default_str();
  c_stab->callback([&] {
    WreathSystem sys = make_system(opt);
    GroupWord w = parse_word(word_text, sys.num_generators());
    bool member = in_level_stabilizer(sys, w, level);
    Json j{{"command", "stab"},
           {"d", opt.d},
           {"word", format_word(w)},
           {"level", level},
           {"in_stabilizer", member}};
    if (member && level >= 1)
      j["profile"] = profile_json(tuple_criterion(section_tuple(sys, w, level), opt.d, level));
    else
      j["profile"] = nullptr;
    output = std::move(j);
  });

  auto* c_rist = app.add_subcommand("rist", "rigid level-stabilizer membership");
  add_d(c_rist);
  c_rist->add_option("word", word_text)->required();
  c_rist->add_option("--level", level)->capture_default_str();
  c_rist->callback([&] {
    WreathSystem sys = make_system(opt);
    GroupWord w = parse_word(word_text, sys.num_generators());
    bool stab = in_level_stabilizer(sys, w, level);
    Json sections = Json::array();
    bool rigid = stab;
    if (stab) {
      for (const GroupWord& s : section_tuple(sys, w, level)) {
        bool h = in_H(s, level, sys.num_generators());
        rigid = rigid && h;
        sections.push_back(Json{{"section", format_word(s)},
                                {"total", exponent_vector(s, sys.num_generators()).total},
                                {"in_H", h}});
      }
    }
    output = Json{{"command", "rist"},
                  {"d", opt.d},
                  {"word", format_word(w)},
                  {"level", level},
                  {"in_rigid_stabilizer", rigid},
                  {"in_stabilizer", stab},
                  {"sections", sections}};
  });

  auto* c_inh = app.add_subcommand("inH", "membership in H_k (total mod 2^(k+1))");
  add_d(c_inh);
  c_inh->add_option("word", word_text)->required();
  c_inh->add_option("--k", k_param)->capture_default_str();
  c_inh->callback([&] {
    GroupConfig gc(opt.d);
    GroupWord w = parse_word(word_text, gc);
    long long total = exponent_vector(w, opt.d).total;
    output = Json{{"command", "inH"},
                  {"d", opt.d},
                  {"word", format_word(w)},
                  {"k", k_param},
                  {"total", total},
                  {"modulus", uint64_t{1} << (k_param + 1)},
                  {"in_H", in_H(w, k_param, opt.d)}};
  });

  // coset / theta / rho / kernel-from-free / phi
  auto* c_coset = app.add_subcommand("coset", "quotient coset of a stabilizer word");
  add_d(c_coset);
  c_coset->add_option("word", word_text)->required();
  c_coset->add_option("--level", level)->capture_default_str();
  c_coset->callback([&] {
    WreathSystem sys = make_system(opt);
    GroupWord w = parse_word(word_text, sys.num_generators());
    QuotientCoset c = coset_of(sys, w, level);
    output = Json{{"command", "coset"},
                  {"d", c.d},
                  {"k", c.k},
                  {"n", c.n},
                  {"word", format_word(w)}};
  });

  auto* c_theta = app.add_subcommand("theta", "isomorphism onto the product of cyclic groups");
  c_theta->add_option("--json", json_text, "coset as {\"d\":..,\"k\":..,\"n\":[..]}")
      ->required();
  c_theta->callback([&] {
    QuotientCoset c = coset_from_json(Json::parse(json_text));
    ThetaImage t = theta(c);
    Json alphas = Json::array();
    for (uint64_t j = 1; j < c.n.size(); ++j) alphas.push_back(theta_alpha(c.d, c.k, j));
    output = Json{{"command", "theta"}, {"d", c.d},     {"k", c.k},
                  {"l", t.l},           {"alpha", alphas}};
  });

  auto* c_rho = app.add_subcommand("rho", "connecting map down one level");
  c_rho->add_option("--json", json_text, "level-(k+1) coset")->required();
  c_rho->callback([&] {
    QuotientCoset down = rho(coset_from_json(Json::parse(json_text)));
    output = Json{{"command", "rho"}, {"d", down.d}, {"k", down.k}, {"n", down.n}};
  });

  auto* c_kff = app.add_subcommand("kernel-from-free",
                                   "rigid-kernel element from free coordinates");
  c_kff->add_option("--json", json_text,
                    "{\"d\":..,\"K\":..,\"free\":[[..],[..]]} (even residues)")
      ->required();
  c_kff->callback([&] {
    KernelElement el = kernel_from_json(Json::parse(json_text));
    Json levels = Json::array();
    for (const auto& c : el.levels) levels.push_back(coset_json(c));
    output = Json{{"command", "kernel-from-free"}, {"d", el.d}, {"K", el.K},
                  {"levels", levels}};
  });

  auto* c_phi = app.add_subcommand("phi", "image of a kernel element in the cyclic product");
  c_phi->add_option("--json", json_text, "kernel element (levels or free form)")->required();
  c_phi->callback([&] {
    KernelElement el = kernel_from_json(Json::parse(json_text));
    PhiImage img = phi(el);
    auto tp = torsion_profile(el);
    output = Json{{"command", "phi"},
                  {"d", el.d},
                  {"K", el.K},
                  {"eta", img.eta},
                  {"order_at_depth", tp.order_at_depth},
                  {"order_stabilized", tp.stabilized}};
  });

  auto* c_branch = app.add_subcommand("branch-kernel", "the Rist-vs-H arithmetic chain");
  add_d(c_branch);
  c_branch->add_option("--k", k_param)->capture_default_str();
  c_branch->add_option("--search-states", opt.search_states)->capture_default_str();
  bool do_search = false;
  c_branch->add_flag("--search", do_search, "attempt a witness search (k = 1 only)");
  c_branch->callback([&] {
    SearchBudget budget{opt.search_states, opt.search_length};
    auto rep = branch_kernel_check(opt.d, k_param, do_search ? &budget : nullptr);
    output = Json{{"command", "branch-kernel"},
                  {"d", rep.d},
                  {"k", rep.k},
                  {"tuple_first_in_Hk", rep.tuple_first_in_Hk},
                  {"forced_total", rep.forced_total},
                  {"outside_H", rep.outside_H},
                  {"holds", rep.holds},
                  {"search_attempted", rep.search_attempted},
                  {"witness", rep.witness_word ? Json(*rep.witness_word) : Json(nullptr)},
                  {"witness_total",
                   rep.witness_total ? Json(*rep.witness_total) : Json(nullptr)}};
  });

  // trace-nf / growth
  auto* c_nf = app.add_subcommand("trace-nf", "lexicographic trace normal form");
  add_d(c_nf);
  c_nf->add_option("word", word_text)->required();
  c_nf->callback([&] {
    GroupConfig gc(opt.d);
    TraceWord t = trace_from_word(parse_word(word_text, gc));
    output = Json{{"command", "trace-nf"},
                  {"d", opt.d},
                  {"word", format_word(word_from_trace(t))},
                  {"normal_form", format_word(word_from_trace(normal_form(t, opt.d)))}};
  });

  auto* c_growth = app.add_subcommand("growth", "trace-class growth table");
  add_d(c_growth);
  c_growth->add_option("--n", n_param)->capture_default_str();
  c_growth->callback([&] {
    Json rows = Json::array();
    for (int n = 0; n <= n_param; ++n) {
      uint64_t count = opt.serial ? par::growth_count_serial(opt.d, n)
                                  : par::growth_count_parallel(opt.d, n);
      rows.push_back(Json{{"n", n}, {"count", count}});
    }
    output = Json{{"command", "growth"}, {"d", opt.d}, {"rows", rows}};
  });

  // index-table / hausdorff
  auto* c_idx = app.add_subcommand("index-table", "exact index table");
  add_d(c_idx);
  c_idx->add_option("--kmax", k_max)->capture_default_str();
  c_idx->callback([&] {
    IndexTable table = index_table(opt.d, k_max);
    Json rows = Json::array();
    for (const auto& row : table.rows)
      rows.push_back(Json{{"k", row.k},
                          {"st_k_st_k1", factored_json(row.st_next)},
                          {"g_st_k1", factored_json(row.g_next)},
                          {"aut_st_k1", factored_json(row.aut_next)},
                          {"st_k_rist_k", factored_json(row.st_rist)}});
    output = Json{{"command", "index-table"}, {"d", opt.d}, {"rows", rows}};
  });

  auto* c_haus = app.add_subcommand("hausdorff", "Hausdorff dimension and ratio sequence");
  add_d(c_haus);
  int h_kmax = 25;
  c_haus->add_option("--kmax", h_kmax)->capture_default_str();
  c_haus->callback([&] {
    auto h = hausdorff_dimension(opt.d, h_kmax);
    Json ratios = Json::array();
    for (size_t k = 1; k <= h.ratios.size(); ++k)
      ratios.push_back(Json{{"k", k}, {"r", h.ratios[k - 1].str(30)}});
    output = Json{{"command", "hausdorff"},
                  {"d", opt.d},
                  {"closed_form", h.closed_form.str(30)},
                  {"ratios", ratios}};
  });

  // named
  auto* c_named = app.add_subcommand("named", "distinguished elements with verified signature");
  add_d(c_named);
  c_named->add_option("kind", named_kind, "xi | eta | spread | rist-gens")->required();
  c_named->add_option("i", index_i, "generator index (ignored for rist-gens)");
  c_named->callback([&] {
    WreathSystem sys = make_system(opt);
    std::vector<NamedElement> els;
    if (named_kind == "xi")
      els.push_back(xi(opt.d, index_i));
    else if (named_kind == "eta")
      els.push_back(eta(opt.d, index_i));
    else if (named_kind == "spread")
      els.push_back(consecutive_spread(opt.d, index_i));
    else if (named_kind == "rist-gens")
      els = rist1_generators(opt.d);
    else
      throw UsageError("kind must be xi, eta, spread, or rist-gens");
    Json arr = Json::array();
    for (const auto& el : els) {
      el.verify(sys);
      Json sections = Json::array();
      for (const auto& sct : el.expected_sections) sections.push_back(format_word(sct));
      arr.push_back(Json{{"name", el.name},
                         {"word", format_word(el.word)},
                         {"sections", sections},
                         {"root_cycles", perm_cycles(el.expected_root)},
                         {"verified", true}});
    }
    output = Json{{"command", "named"}, {"d", opt.d}, {"elements", arr}};
  });

  // search
  auto* c_search = app.add_subcommand("search", "bounded witness search for a level-1 signature");
  add_d(c_search);
  c_search->add_option("--target", json_text,
                       "{\"sections\":[word,..],\"perm\":[images 1-based]}")
      ->required();
  c_search->add_option("--budget", opt.search_states)->capture_default_str();
  c_search->add_option("--max-length", opt.search_length)->capture_default_str();
  c_search->callback([&] {
    WreathSystem sys = make_system(opt);
    Json t = Json::parse(json_text);
    if (!t.contains("sections") || !t.contains("perm"))
      throw UsageError("target needs \"sections\" and \"perm\"");
    std::vector<GroupWord> sections;
    for (const auto& sj : t.at("sections"))
      sections.push_back(parse_word(sj.get<std::string>(), sys.num_generators()));
    Perm root;
    for (const auto& pj : t.at("perm")) {
      int image = pj.get<int>();
      if (image < 1 || image > opt.d) throw UsageError("perm image out of range");
      root.push_back(static_cast<uint32_t>(image - 1));
    }
    SearchBudget budget{opt.search_states, opt.search_length};
    SearchResult res = witness_search(sys, sections, root, budget);
    output = Json{{"command", "search"},
                  {"d", opt.d},
                  {"found", res.witness.has_value()},
                  {"witness", res.witness ? Json(format_word(*res.witness)) : Json(nullptr)},
                  {"states_explored", res.states_explored},
                  {"budget_exhausted", res.budget_exhausted}};
  });

  // verify
  auto* c_verify = app.add_subcommand("verify", "run the property suites");
  add_d(c_verify);
  c_verify->add_option("--suite", suite, "suite name or 'all'")->capture_default_str();
  c_verify->add_option("--seed", opt.seed)->capture_default_str();
  c_verify->add_option("--samples", opt.samples)->capture_default_str();
  c_verify->add_option("--max-level", opt.max_level)->capture_default_str();
  c_verify->add_option("--search-states", opt.search_states)->capture_default_str();
  size_t bfs_cap = 2000;
  c_verify->add_option("--bfs-cap", bfs_cap)->capture_default_str();
  c_verify->add_flag("--serial", opt.serial, "disable the OpenMP kernels");
  c_verify->callback([&] {
    VerifyConfig vc;
    vc.d = opt.d;
    vc.seed = opt.seed;
    vc.samples = opt.samples;
    vc.max_level = opt.max_level;
    vc.search_states = opt.search_states;
    vc.bfs_cap = bfs_cap;
    vc.parallel = !opt.serial;
    std::vector<SuiteResult> results;
    if (suite == "all")
      results = run_all_suites(vc);
    else
      results.push_back(run_suite(suite, vc));
    bool ok = true;
    size_t checks = 0;
    Json suites = Json::array();
    for (const auto& s : results) {
      ok = ok && s.passed();
      checks += s.total_checks();
      Json cj = Json::array();
      for (const auto& c : s.checks)
        cj.push_back(Json{{"name", c.name},
                          {"passed", c.passed},
                          {"checks", c.checks},
                          {"detail", c.detail}});
      suites.push_back(Json{{"suite", s.suite}, {"passed", s.passed()}, {"checks", cj}});
    }
    output = Json{{"command", "verify"}, {"d", opt.d},          {"seed", opt.seed},
                  {"samples", opt.samples}, {"passed", ok},     {"total_checks", checks},
                  {"suites", suites}};
  });

  app.require_subcommand(1);
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  std::vector<std::string> argv(args);
  std::reverse(argv.begin(), argv.end()); // CLI11 parses reversed vectors
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) { // --help
      out << app.help() << "\n";
      return 0;
    }
    err << Json{{"error", Json{{"code", "usage"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 2;
  } catch (const Error& e) {
    err << Json{{"error", Json{{"code", e.code()}, {"message", e.what()}}}}.dump(2) << "\n";
    return exit_code_for(e);
  } catch (const Json::exception& e) {
    err << Json{{"error", Json{{"code", "usage"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << Json{{"error", Json{{"code", "internal"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 1;
  }

  // csv rendering for the tabular commands, else json/text
  const std::string& cmd = output.contains("command") ? output["command"].get_ref<const std::string&>()
                                                      : std::string("");
  if (opt.format == "csv") {
    if (cmd == "growth") {
      out << "n,count\n";
      for (const auto& row : output["rows"]) out << row["n"] << "," << row["count"] << "\n";
    } else if (cmd == "index-table") {
      out << "k,st_k_st_k1,g_st_k1,aut_st_k1,st_k_rist_k\n";
      for (const auto& row : output["rows"]) {
        auto cell = [](const Json& f) {
          return f["value"].is_null() ? std::string("(") + f["e_factorial"].get<std::string>() +
                                            "|" + f["e_two"].get<std::string>() + ")"
                                      : f["value"].get<std::string>();
        };
        out << row["k"] << "," << cell(row["st_k_st_k1"]) << "," << cell(row["g_st_k1"]) << ","
            << cell(row["aut_st_k1"]) << "," << cell(row["st_k_rist_k"]) << "\n";
      }
    } else if (cmd == "hausdorff") {
      out << "k,r\n";
      for (const auto& row : output["ratios"])
        out << row["k"] << "," << row["r"].get<std::string>() << "\n";
    } else {
      emit(output, opt, out);
    }
  } else {
    emit(output, opt, out);
  }

  if (cmd == "verify" && !output["passed"].get<bool>()) return 1;
  return 0;
}

} // namespace branchlab
