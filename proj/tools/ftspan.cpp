#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "ftspan/analysis.hpp"
#include "ftspan/generators.hpp"
#include "ftspan/graph_algos.hpp"
#include "ftspan/greedy.hpp"
#include "ftspan/polytime.hpp"
#include "ftspan/report.hpp"

using namespace ftspan;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 2;
constexpr int kExitBudget = 3;
constexpr int kExitBadInput = 4;

constexpr const char* kSweepHeader =
    "key,family,n,m,algo,k,f,eta,seed,spanner_edges,spanner_weight,preserver_weight,"
    "preserver_exact,l_classical,l_f,l_competition,verified,status";

uint64_t default_seed() {
  const char* env = std::getenv("FTSPAN_SEED");
  if (!env || !*env) return 0;
  return std::strtoull(env, nullptr, 10);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  if (!out) throw InputError("cannot write " + output);
  out << text;
}

WeightedMultigraph load_graph(const std::string& path) {
  return WeightedMultigraph::parse(slurp(path));
}

EdgeSet load_spanner_ids(const std::string& path, const WeightedMultigraph& g) {
  std::istringstream in(slurp(path));
  EdgeSet s(g.edge_count());
  long long id = 0;
  while (in >> id) {
    if (id < 0 || id >= g.edge_count()) {
      throw InputError("spanner edge id out of range: " + std::to_string(id));
    }
    if (s.contains(static_cast<int>(id))) {
      throw InputError("duplicate spanner edge id: " + std::to_string(id));
    }
    s.insert(static_cast<int>(id));
  }
  if (in.fail() && !in.eof()) throw InputError("spanner file holds a non-integer token");
  return s;
}

/// Shared stretch/fault/preserver/budget flags.
struct CommonArgs {
  std::string k_text;
  std::string k0_text;
  std::string eps_text;
  int f = 0;
  std::string eta_text;
  std::string competition;  // "", "2f" or "2+eta"
  std::string preserver = "exact";
  uint64_t seed = default_seed();
  OracleBudget budget;

  void attach(CLI::App* cmd, bool with_f = true) {
    cmd->add_option("--k", k_text, "stretch factor (rational)");
    cmd->add_option("--k0", k0_text, "base stretch; expands to (1+eps)(2 k0 - 1)");
    cmd->add_option("--eps", eps_text, "slack for the --k0 expansion (rational)");
    if (with_f) cmd->add_option("--f", f, "fault budget");
    cmd->add_option("--eta", eta_text, "competition slack (rational, > 0)");
    cmd->add_option("--competition", competition, "competition level: 2f or 2+eta")
        ->check(CLI::IsMember({"2f", "2+eta"}));
    cmd->add_option("--preserver", preserver, "preserver mode")
        ->check(CLI::IsMember({"exact", "heuristic"}));
    cmd->add_option("--seed", seed, "RNG seed (falls back to FTSPAN_SEED, then 0)");
    cmd->add_option("--budget-fault-sets", budget.max_fault_sets, "fault-set enumeration cap");
    cmd->add_option("--budget-subset-bits", budget.max_subset_bits, "2^m enumeration cap");
    cmd->add_option("--budget-cyclomatic", budget.max_cyclomatic, "cycle-space dimension cap");
    cmd->add_option("--budget-search-nodes", budget.max_search_nodes, "search node cap");
  }

  Rat stretch(std::optional<Rat>* k0_out = nullptr, std::optional<Rat>* eps_out = nullptr) const {
    if (!k_text.empty()) {
      if (!k0_text.empty() || !eps_text.empty()) {
        throw InputError("give either --k or the --k0/--eps pair, not both");
      }
      return Rat::parse(k_text);
    }
    if (k0_text.empty()) {
      if (eps_text.empty()) return Rat(1);
      throw InputError("--eps needs --k0");
    }
    if (eps_text.empty()) throw InputError("--k0 needs --eps");
    Rat k0 = Rat::parse(k0_text);
    Rat eps = Rat::parse(eps_text);
    if (k0_out) *k0_out = k0;
    if (eps_out) *eps_out = eps;
    return (Rat(1) + eps) * (Rat(2) * k0 - Rat(1));
  }

  std::optional<Rat> eta() const {
    if (eta_text.empty()) return std::nullopt;
    return Rat::parse(eta_text);
  }

  DenominatorMode preserver_mode() const {
    return preserver == "exact" ? DenominatorMode::exact : DenominatorMode::heuristic;
  }

  void check_competition(const std::string& algo) const {
    bool wants_eta = algo == "poly-eta" || (algo == "greedy" && !eta_text.empty());
    if (!competition.empty()) {
      if (competition == "2+eta" && eta_text.empty()) {
        throw InputError("--competition 2+eta needs --eta");
      }
      if (competition == "2f" && wants_eta) {
        throw InputError("--competition 2f conflicts with --eta");
      }
    }
    if (algo == "poly" && !eta_text.empty()) {
      throw InputError("--eta only applies to greedy or poly-eta");
    }
    if (algo == "poly-eta" && eta_text.empty()) throw InputError("poly-eta needs --eta");
  }
};

void add_lightness(RunReport& rep, const Subgraph& h, const WeightedMultigraph& g,
                   const std::vector<int>& levels, DenominatorMode mode,
                   const OracleBudget& budget) {
  std::set<int> wanted(levels.begin(), levels.end());
  for (int level : wanted) {
    LightnessEntry e;
    e.competition = level;
    e.value = competitive_lightness(h, g, level, mode, budget);
    rep.lightness.push_back(e);
  }
}

/// Fills the construction-independent parts: sizes, weights, girth.
void fill_outputs(RunReport& rep, const Subgraph& h, const Subgraph& q,
                  const WeightedMultigraph& g) {
  rep.n = g.vertex_count();
  rep.m = g.edge_count();
  rep.spanner_edges = static_cast<int>(h.edges.ids().size());
  rep.spanner_weight = h.weight();
  rep.spanner_ids = h.edges;
  rep.preserver_edges = static_cast<int>(q.edges.ids().size());
  rep.preserver_weight = q.weight();
  rep.mst_weight = Subgraph(g, mst(g)).weight();
  rep.girth = weighted_girth(h).value;
}

struct BuildArgs {
  std::string input;
  std::string output;
  std::string algo = "greedy";
  CommonArgs common;
  std::string threshold_text;
  int samples = -1;
  double c_const = 384.0;
  bool verify = false;
  bool timing = false;
  std::vector<int> extra_levels;
  std::string save_spanner;
};

int run_build(const BuildArgs& a) {
  auto t0 = std::chrono::steady_clock::now();
  WeightedMultigraph g = load_graph(a.input);
  a.common.check_competition(a.algo);

  RunReport rep;
  rep.family = "file";
  rep.params["path"] = a.input;
  rep.algo = a.algo;
  std::optional<Rat> k0;
  std::optional<Rat> eps;
  rep.k = a.common.stretch(&k0, &eps);
  rep.k0 = k0;
  rep.eps = eps;
  rep.f = a.common.f;
  rep.eta = a.common.eta();
  rep.competition = rep.eta ? "2+eta" : "2f";
  rep.preserver_mode = a.common.preserver;
  rep.seed = a.common.seed;

  Subgraph h(g, EdgeSet(g.edge_count()));
  Subgraph q = h;
  int competition_f = 0;

  if (a.algo == "greedy") {
    GreedyOptions o;
    o.k = rep.k;
    o.f = rep.f;
    o.eta = rep.eta;
    o.preserver_mode = a.common.preserver_mode();
    o.budget = a.common.budget;
    GreedyResult r = build_greedy(g, o);
    h = r.h;
    q = r.q;
    competition_f = r.competition_f;
    rep.preserver_exact = r.preserver_exact;
    if (a.verify) {
      rep.verdicts.push_back({"spanner-oracle", is_ft_spanner(h, g, rep.k, rep.f, a.common.budget)});
      rep.verdicts.push_back({"blocking-set", check_blocking_set(r.blocks, h, q, rep.k, a.common.budget)});
    }
  } else {
    PolyOptions o;
    o.k = rep.k;
    o.f = rep.f;
    if (a.algo == "poly-eta") o.eta = rep.eta;
    if (!a.threshold_text.empty()) o.threshold = Rat::parse(a.threshold_text);
    if (a.samples > 0) o.samples = a.samples;
    o.c_const = a.c_const;
    o.preserver_mode = a.common.preserver_mode();
    o.seed = a.common.seed;
    o.budget = a.common.budget;
    PolyResult r = a.algo == "poly" ? build_poly(g, o) : build_poly_eta(g, o);
    h = r.h;
    q = r.q;
    competition_f = r.competition_f;
    rep.preserver_exact = r.preserver_exact;
    rep.threshold = o.threshold;
    rep.samples = r.samples;
    rep.c_const = a.c_const;
    rep.host_log = r.host_log;
    rep.has_host_log = true;
    if (a.verify) {
      rep.verdicts.push_back({"spanner-oracle", is_ft_spanner(h, g, rep.k, rep.f, a.common.budget)});
    }
  }

  fill_outputs(rep, h, q, g);
  std::vector<int> levels = {0, rep.f, competition_f};
  levels.insert(levels.end(), a.extra_levels.begin(), a.extra_levels.end());
  add_lightness(rep, h, g, levels, a.common.preserver_mode(), a.common.budget);
  if (rep.f == 0) {
    VerificationReport girth_check;
    girth_check.check = "weighted-girth";
    if (!(rep.girth > rep.k + Rat(1))) {
      girth_check.pass = false;
      girth_check.detail = "girth " + rep.girth.str() + " not above " + (rep.k + Rat(1)).str();
    }
    rep.verdicts.push_back({"weighted-girth", girth_check});
  }

  if (!a.save_spanner.empty()) {
    std::ostringstream ids;
    for (int id : h.edges.ids()) ids << id << "\n";
    emit(ids.str(), a.save_spanner);
  }
  if (a.timing) {
    auto t1 = std::chrono::steady_clock::now();
    rep.wall_clock_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  }
  emit(render(json_of(rep)), a.output);
  return rep.all_passed() ? kExitPass : kExitVerifyFail;
}

struct GenArgs {
  std::string family;
  std::string output;
  std::string w_text = "4";
  int n = 5;
  std::string k_text = "2";
  std::string eps_text = "1/4";
  int m = 4;
  int f = 1;
  int c = 2;
  std::string base;
  int base_cycle = 0;
  std::string edge_prob_text = "1/2";
  WeightRange range;
  uint64_t seed = default_seed();
};

int run_gen(const GenArgs& a) {
  WeightedMultigraph g(1);
  if (a.family == "triangle") {
    g = gen_triangle(Rat::parse(a.w_text));
  } else if (a.family == "cycle-chords") {
    g = gen_cycle_chords(a.n, Rat::parse(a.k_text), Rat::parse(a.eps_text));
  } else if (a.family == "cloud-cycle") {
    g = gen_cloud_cycle(a.m, a.f, Rat::parse(a.k_text), Rat::parse(a.eps_text));
  } else if (a.family == "cloud-blowup") {
    WeightedMultigraph base(1);
    if (a.base_cycle > 0) {
      base = WeightedMultigraph(a.base_cycle);
      for (int i = 0; i < a.base_cycle; ++i) base.add_edge(i, (i + 1) % a.base_cycle, Rat(1));
    } else if (!a.base.empty()) {
      base = load_graph(a.base);
    } else {
      throw InputError("cloud-blowup needs --base or --base-cycle");
    }
    g = gen_cloud_blowup(base, a.f, a.c);
  } else if (a.family == "random") {
    g = gen_random(a.n, Rat::parse(a.edge_prob_text), a.range, a.seed);
  } else {
    throw InputError("unknown family: " + a.family);
  }
  emit(g.serialize(), a.output);
  return kExitPass;
}

struct VerifyArgs {
  std::string input;
  std::string spanner;
  std::string output;
  CommonArgs common;
};

int run_verify(const VerifyArgs& a) {
  WeightedMultigraph g = load_graph(a.input);
  Subgraph h(g, load_spanner_ids(a.spanner, g));
  Rat k = a.common.stretch();
  VerificationReport v = is_ft_spanner(h, g, k, a.common.f, a.common.budget);
  Json out;
  out["k"] = json_of(k);
  out["f"] = a.common.f;
  out["spanner_edges"] = static_cast<int>(h.edges.ids().size());
  out["verdict"] = json_of(v);
  emit(render(out), a.output);
  return v.pass ? kExitPass : kExitVerifyFail;
}

struct MetricsArgs {
  std::string input;
  std::string spanner;
  std::string output;
  CommonArgs common;
  std::vector<int> levels;
};

int run_metrics(const MetricsArgs& a) {
  WeightedMultigraph g = load_graph(a.input);
  Subgraph h(g, load_spanner_ids(a.spanner, g));
  Json out;
  out["n"] = g.vertex_count();
  out["m"] = g.edge_count();
  out["spanner_edges"] = static_cast<int>(h.edges.ids().size());
  out["spanner_weight"] = json_of(h.weight());
  out["mst_weight"] = json_of(Subgraph(g, mst(g)).weight());
  out["weighted_girth"] = json_of(weighted_girth(h).value);
  out["classical_lightness"] = json_of(lightness(h, g));
  std::vector<int> levels = a.levels.empty() ? std::vector<int>{0, a.common.f} : a.levels;
  std::set<int> wanted(levels.begin(), levels.end());
  Json entries = Json::array();
  for (int level : wanted) {
    CompetitiveLightness cl =
        competitive_lightness(h, g, level, a.common.preserver_mode(), a.common.budget);
    Json e;
    e["competition"] = level;
    e["lightness"] = json_of(cl);
    entries.push_back(e);
  }
  out["lightness"] = entries;
  emit(render(out), a.output);
  return kExitPass;
}

struct PackArgs {
  std::string input;
  std::string output;
  int level = 1;
  uint64_t seed = default_seed();
};

int run_pack(const PackArgs& a) {
  WeightedMultigraph g = load_graph(a.input);
  Subgraph q = Subgraph::full(g);
  ForestPacking p = pack_forests(q, a.level, a.seed);
  VerificationReport v = verify_packing(p, q);
  Json out;
  out["packing"] = json_of(p);
  out["verdict"] = json_of(v);
  emit(render(out), a.output);
  return v.pass ? kExitPass : kExitVerifyFail;
}

struct ReplayArgs {
  std::string input;
  std::string output;
  CommonArgs common;
  std::string mode = "single";
  std::string p_text;
  int trials = 100;
};

int run_replay(const ReplayArgs& a) {
  WeightedMultigraph g = load_graph(a.input);
  GreedyOptions o;
  o.k = a.common.stretch();
  o.f = a.common.f;
  o.eta = a.common.eta();
  o.preserver_mode = a.common.preserver_mode();
  o.budget = a.common.budget;
  GreedyResult r = build_greedy(g, o);
  ForestPacking pack = pack_forests(r.q, r.competition_f + 1, a.common.seed);
  HostMode mode = a.mode == "single"         ? HostMode::single
                  : a.mode == "all-eligible" ? HostMode::all_eligible
                                             : HostMode::q_light_heavy;
  HostGraphs hg = build_host_graphs(r.h, r.q, r.blocks, pack, mode);
  Rat p = a.p_text.empty() ? hg.light_p : Rat::parse(a.p_text);
  StreamRng rng(a.common.seed);

  std::ostringstream csv;
  csv << "# ftspan-replay v1\n";
  csv << "forest_index,w_t,w_ht,mean_h3,girth_check\n";
  bool all_pass = true;
  for (size_t fi = 0; fi < hg.graphs.size(); ++fi) {
    Subgraph t(g, pack.forests[fi]);
    ChainWeightStats stats = measure_chain_weight(hg.graphs[fi], t, r.blocks, p, a.trials, rng);
    bool girth_ok = true;
    for (int trial = 0; trial < a.trials && girth_ok; ++trial) {
      Chain c = subsample_chain(hg.graphs[fi], t, r.blocks, p, rng, static_cast<uint64_t>(trial));
      girth_ok = check_chain_girth(c.h3, o.k).pass;
    }
    all_pass = all_pass && girth_ok;
    csv << fi << "," << stats.w_t.str() << "," << stats.w_ht.str() << ","
        << stats.mean_h3.str() << "," << (girth_ok ? "pass" : "fail") << "\n";
  }
  emit(csv.str(), a.output);
  return all_pass ? kExitPass : kExitVerifyFail;
}

struct SweepArgs {
  std::string config;
  std::string output;
  bool verify = false;
};

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  throw InputError("sweep parameters must be strings or integers");
}

WeightedMultigraph sweep_instance(const std::string& family,
                                  const std::map<std::string, std::string>& params) {
  auto get = [&](const std::string& name) -> std::string {
    auto it = params.find(name);
    if (it == params.end()) throw InputError("family " + family + " needs parameter " + name);
    return it->second;
  };
  if (family == "triangle") return gen_triangle(Rat::parse(get("w")));
  if (family == "cycle-chords") {
    return gen_cycle_chords(std::stoi(get("n")), Rat::parse(get("k")), Rat::parse(get("eps")));
  }
  if (family == "cloud-cycle") {
    return gen_cloud_cycle(std::stoi(get("m")), std::stoi(get("f")), Rat::parse(get("k")),
                           Rat::parse(get("eps")));
  }
  if (family == "cloud-blowup") {
    int cycle = std::stoi(get("base_cycle"));
    WeightedMultigraph base(cycle);
    for (int i = 0; i < cycle; ++i) base.add_edge(i, (i + 1) % cycle, Rat(1));
    return gen_cloud_blowup(base, std::stoi(get("f")), std::stoi(get("c")));
  }
  if (family == "random") {
    WeightRange range;
    range.lo = std::stoll(get("wmin"));
    range.hi = std::stoll(get("wmax"));
    if (params.count("wden")) range.den = std::stoll(params.at("wden"));
    return gen_random(std::stoi(get("n")), Rat::parse(get("edge_prob")), range,
                      std::stoull(get("seed")));
  }
  throw InputError("unknown family: " + family);
}

struct SweepRow {
  std::string key;
  std::string line;
};

int run_sweep(const SweepArgs& a) {
  Json config = Json::parse(slurp(a.config));
  if (!config.contains("blocks") || !config["blocks"].is_array()) {
    throw InputError("sweep config needs a top-level \"blocks\" array");
  }

  std::vector<SweepRow> rows;
  for (const Json& block : config["blocks"]) {
    std::string family = block.at("family").get<std::string>();
    // expand the family parameter grid in sorted-name order
    std::map<std::string, std::vector<std::string>> grid;
    if (block.contains("params")) {
      for (auto it = block["params"].begin(); it != block["params"].end(); ++it) {
        std::vector<std::string> values;
        for (const Json& v : it.value()) values.push_back(scalar_text(v));
        grid[it.key()] = values;
      }
    }
    std::vector<std::map<std::string, std::string>> combos{{}};
    for (const auto& [name, values] : grid) {
      std::vector<std::map<std::string, std::string>> next;
      for (const auto& combo : combos) {
        for (const std::string& v : values) {
          auto widened = combo;
          widened[name] = v;
          next.push_back(std::move(widened));
        }
      }
      combos = std::move(next);
    }

    auto list_of = [&](const char* name, std::vector<std::string> fallback) {
      std::vector<std::string> out;
      if (!block.contains(name)) return fallback;
      for (const Json& v : block[name]) out.push_back(scalar_text(v));
      return out;
    };
    std::vector<std::string> algos = list_of("algo", {"greedy"});
    std::vector<std::string> ks = list_of("k", {"1"});
    std::vector<std::string> fs = list_of("f", {"1"});
    std::vector<std::string> etas = list_of("eta", {""});
    std::vector<std::string> seeds = list_of("seed", {"0"});

    for (const auto& combo : combos) {
      std::string param_key;
      for (const auto& [name, value] : combo) param_key += ";" + name + "=" + value;
      for (const std::string& algo : algos) {
        for (const std::string& k : ks) {
          for (const std::string& f : fs) {
            for (const std::string& eta : etas) {
              for (const std::string& seed : seeds) {
                SweepRow row;
                row.key = family + param_key + "|" + algo + "|k=" + k + "|f=" + f +
                          "|eta=" + eta + "|seed=" + seed;
                std::string cells = "\"" + row.key + "\"," + family + ",";
                std::string status = "ok";
                std::string verified;
                std::ostringstream data;
                try {
                  WeightedMultigraph g = sweep_instance(family, combo);
                  int fi = std::stoi(f);
                  uint64_t seed_v = std::stoull(seed);
                  Rat kr = Rat::parse(k);
                  std::optional<Rat> eta_r;
                  if (!eta.empty()) eta_r = Rat::parse(eta);

                  Subgraph h(g, EdgeSet(g.edge_count()));
                  Subgraph q = h;
                  bool preserver_exact = false;
                  int competition_f = 0;
                  if (algo == "greedy") {
                    GreedyOptions o;
                    o.k = kr;
                    o.f = fi;
                    o.eta = eta_r;
                    GreedyResult r = build_greedy(g, o);
                    h = r.h;
                    q = r.q;
                    preserver_exact = r.preserver_exact;
                    competition_f = r.competition_f;
                  } else {
                    PolyOptions o;
                    o.k = kr;
                    o.f = fi;
                    if (algo == "poly-eta") o.eta = eta_r;
                    o.seed = seed_v;
                    PolyResult r = algo == "poly" ? build_poly(g, o) : build_poly_eta(g, o);
                    h = r.h;
                    q = r.q;
                    preserver_exact = r.preserver_exact;
                    competition_f = r.competition_f;
                  }
                  CompetitiveLightness lf = competitive_lightness(h, g, fi);
                  CompetitiveLightness lc = competitive_lightness(h, g, competition_f);
                  if (a.verify) {
                    verified = is_ft_spanner(h, g, kr, fi).pass ? "pass" : "fail";
                  }
                  data << g.vertex_count() << "," << g.edge_count() << "," << algo << "," << k
                       << "," << f << "," << eta << "," << seed << ","
                       << h.edges.ids().size() << "," << h.weight().str() << ","
                       << q.weight().str() << "," << (preserver_exact ? "true" : "false") << ","
                       << lightness(h, g).str() << "," << lf.value.str() << ","
                       << lc.value.str();
                } catch (const BudgetExceeded&) {
                  status = "budget";
                  data << ",,,,,,,,,,,,,";
                } catch (const PackingError&) {
                  status = "packing-fail";
                  data << ",,,,,,,,,,,,,";
                } catch (const std::exception&) {
                  status = "input-error";
                  data << ",,,,,,,,,,,,,";
                }
                row.line = cells + data.str() + "," + verified + "," + status;
                rows.push_back(std::move(row));
              }
            }
          }
        }
      }
    }
  }

  std::sort(rows.begin(), rows.end(),
            [](const SweepRow& x, const SweepRow& y) { return x.key < y.key; });

  // append-only resume: keep whatever rows an earlier run already wrote
  std::set<std::string> done;
  bool have_header = false;
  {
    std::ifstream existing(a.output);
    std::string line;
    while (existing && std::getline(existing, line)) {
      if (line.rfind("# ", 0) == 0 || line == kSweepHeader) {
        have_header = true;
        continue;
      }
      auto quote = line.find('"', 1);
      if (line.size() > 1 && line[0] == '"' && quote != std::string::npos) {
        done.insert(line.substr(1, quote - 1));
      }
    }
  }
  std::ofstream out(a.output, std::ios::app);
  if (!out) throw InputError("cannot write " + a.output);
  if (!have_header) out << "# ftspan-sweep v1\n" << kSweepHeader << "\n";
  for (const SweepRow& row : rows) {
    if (done.count(row.key)) continue;
    out << row.line << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fault-tolerant light spanner toolkit"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* cmd_gen = app.add_subcommand("gen", "generate an instance");
  cmd_gen->add_option("--family", gen.family, "triangle|cycle-chords|cloud-cycle|cloud-blowup|random")
      ->required();
  cmd_gen->add_option("--output", gen.output, "target file (default stdout)");
  cmd_gen->add_option("--w", gen.w_text, "triangle heavy weight");
  cmd_gen->add_option("--n", gen.n, "cycle-chords half-length / random vertex count");
  cmd_gen->add_option("--k", gen.k_text, "stretch the instance is built against");
  cmd_gen->add_option("--eps", gen.eps_text, "weight slack");
  cmd_gen->add_option("--m", gen.m, "cloud-cycle hub count");
  cmd_gen->add_option("--f", gen.f, "cloud size / blow-up fault parameter");
  cmd_gen->add_option("--c", gen.c, "blow-up competition multiplier");
  cmd_gen->add_option("--base", gen.base, "blow-up base graph file");
  cmd_gen->add_option("--base-cycle", gen.base_cycle, "blow-up base: unit cycle of this length");
  cmd_gen->add_option("--edge-prob", gen.edge_prob_text, "random edge probability");
  cmd_gen->add_option("--wmin", gen.range.lo, "random minimum weight");
  cmd_gen->add_option("--wmax", gen.range.hi, "random maximum weight");
  cmd_gen->add_option("--wden", gen.range.den, "random weight denominator");
  cmd_gen->add_option("--seed", gen.seed, "random family seed");

  BuildArgs build;
  CLI::App* cmd_build = app.add_subcommand("build", "construct a spanner and report");
  cmd_build->add_option("--input", build.input, "graph file")->required();
  cmd_build->add_option("--output", build.output, "report file (default stdout)");
  cmd_build->add_option("--algo", build.algo, "greedy|poly|poly-eta")
      ->check(CLI::IsMember({"greedy", "poly", "poly-eta"}));
  build.common.attach(cmd_build);
  cmd_build->add_option("--threshold", build.threshold_text, "sampling acceptance threshold");
  cmd_build->add_option("--samples", build.samples, "per-tree sample count override");
  cmd_build->add_option("--c-const", build.c_const, "sample count constant");
  cmd_build->add_flag("--verify", build.verify, "run the brute-force spanner oracle");
  cmd_build->add_flag("--timing", build.timing, "include wall clock in the report");
  cmd_build->add_option("--lf", build.extra_levels, "extra competitive-lightness levels");
  cmd_build->add_option("--save-spanner", build.save_spanner, "write spanner edge ids here");

  VerifyArgs verify;
  CLI::App* cmd_verify = app.add_subcommand("verify", "oracle-check a stored spanner");
  cmd_verify->add_option("--input", verify.input, "graph file")->required();
  cmd_verify->add_option("--spanner", verify.spanner, "edge-id list file")->required();
  cmd_verify->add_option("--output", verify.output, "report file (default stdout)");
  verify.common.attach(cmd_verify);

  MetricsArgs metrics;
  CLI::App* cmd_metrics = app.add_subcommand("metrics", "weights, girth and lightness");
  cmd_metrics->add_option("--input", metrics.input, "graph file")->required();
  cmd_metrics->add_option("--spanner", metrics.spanner, "edge-id list file")->required();
  cmd_metrics->add_option("--output", metrics.output, "report file (default stdout)");
  metrics.common.attach(cmd_metrics);
  cmd_metrics->add_option("--lf", metrics.levels, "competition levels to report");

  PackArgs pack;
  CLI::App* cmd_pack = app.add_subcommand("pack", "pack covering forests of a graph");
  cmd_pack->add_option("--input", pack.input, "graph file (treated as the base Q)")->required();
  cmd_pack->add_option("--level", pack.level, "connectivity level")->required();
  cmd_pack->add_option("--output", pack.output, "report file (default stdout)");
  cmd_pack->add_option("--seed", pack.seed, "packing restart seed");

  ReplayArgs replay;
  CLI::App* cmd_replay = app.add_subcommand("replay-analysis", "host graphs and chain statistics");
  cmd_replay->add_option("--input", replay.input, "graph file")->required();
  cmd_replay->add_option("--output", replay.output, "CSV file (default stdout)");
  replay.common.attach(cmd_replay);
  cmd_replay->add_option("--mode", replay.mode, "single|all-eligible|q-light-heavy")
      ->check(CLI::IsMember({"single", "all-eligible", "q-light-heavy"}));
  cmd_replay->add_option("--p", replay.p_text, "chain sampling probability override");
  cmd_replay->add_option("--trials", replay.trials, "replays per forest");

  SweepArgs sweep;
  CLI::App* cmd_sweep = app.add_subcommand("experiment", "parameter sweep to CSV");
  cmd_sweep->add_option("--config", sweep.config, "JSON matrix config")->required();
  cmd_sweep->add_option("--output", sweep.output, "CSV file")->required();
  cmd_sweep->add_flag("--verify", sweep.verify, "oracle-check every row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (app.got_subcommand(cmd_gen)) return run_gen(gen);
    if (app.got_subcommand(cmd_build)) return run_build(build);
    if (app.got_subcommand(cmd_verify)) return run_verify(verify);
    if (app.got_subcommand(cmd_metrics)) return run_metrics(metrics);
    if (app.got_subcommand(cmd_pack)) return run_pack(pack);
    if (app.got_subcommand(cmd_replay)) return run_replay(replay);
    if (app.got_subcommand(cmd_sweep)) return run_sweep(sweep);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const PackingError& e) {
    std::cerr << "packing failed: " << e.what() << "\n";
    return kExitBudget;
  } catch (const RationalError& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const InputError& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
