#include "ftspan/report.hpp"

namespace ftspan {

Json json_of(const Rat& r) { return r.str(); }

Json json_of(const EdgeSet& s) {
  Json out = Json::array();
  for (int id : s.ids()) out.push_back(id);
  return out;
}

Json json_of(const SpannerWitness& w) {
  Json out;
  out["fault_edge_ids"] = w.fault_edge_ids;
  out["u"] = w.u;
  out["v"] = w.v;
  out["dist_sub"] = json_of(w.dist_sub);
  out["dist_full"] = json_of(w.dist_full);
  return out;
}

Json json_of(const CycleWitness& c) {
  Json out;
  out["edge_ids"] = c.edge_ids;
  out["total_weight"] = json_of(c.total_weight);
  out["max_edge_weight"] = json_of(c.max_edge_weight);
  out["normalized_weight"] = json_of(c.normalized_weight());
  return out;
}

Json json_of(const VerificationReport& v) {
  Json out;
  out["verdict"] = v.pass ? "pass" : "fail";
  if (!v.check.empty()) out["check"] = v.check;
  if (!v.detail.empty()) out["detail"] = v.detail;
  if (v.witness) out["witness"] = json_of(*v.witness);
  if (v.cycle) out["cycle"] = json_of(*v.cycle);
  return out;
}

Json json_of(const ForestPacking& p) {
  Json out;
  out["level"] = p.level;
  Json forests = Json::array();
  for (const EdgeSet& f : p.forests) forests.push_back(json_of(f));
  out["forests"] = forests;
  out["classes"] = p.classes;
  return out;
}

Json json_of(const CompetitiveLightness& c) {
  Json out;
  out["value"] = json_of(c.value);
  out["denominator"] = json_of(c.denominator);
  out["denominator_exact"] = c.denominator_exact;
  return out;
}

Json json_of(const HostRecord& h) {
  Json out;
  out["edge_id"] = h.edge_id;
  out["trees"] = h.trees;
  Json ph = Json::array();
  for (const Rat& r : h.p_hats) ph.push_back(json_of(r));
  out["p_hats"] = ph;
  return out;
}

bool RunReport::all_passed() const {
  for (const auto& [name, v] : verdicts) {
    if (!v.pass) return false;
  }
  return true;
}

Json json_of(const RunReport& r) {
  Json out;
  Json instance;
  instance["family"] = r.family;
  instance["params"] = r.params;
  instance["n"] = r.n;
  instance["m"] = r.m;
  out["instance"] = instance;

  Json algo;
  algo["name"] = r.algo;
  algo["k"] = json_of(r.k);
  if (r.k0) algo["k0"] = json_of(*r.k0);
  if (r.eps) algo["eps"] = json_of(*r.eps);
  algo["f"] = r.f;
  if (r.eta) algo["eta"] = json_of(*r.eta);
  algo["competition"] = r.competition;
  algo["preserver_mode"] = r.preserver_mode;
  algo["seed"] = r.seed;
  if (r.threshold) algo["threshold"] = json_of(*r.threshold);
  if (r.samples) algo["samples"] = *r.samples;
  if (r.c_const) algo["c_const"] = *r.c_const;
  out["algorithm"] = algo;

  Json res;
  res["spanner_edges"] = r.spanner_edges;
  res["spanner_weight"] = json_of(r.spanner_weight);
  res["spanner_edge_ids"] = json_of(r.spanner_ids);
  res["preserver_edges"] = r.preserver_edges;
  res["preserver_weight"] = json_of(r.preserver_weight);
  res["preserver_exact"] = r.preserver_exact;
  res["mst_weight"] = json_of(r.mst_weight);
  res["weighted_girth"] = json_of(r.girth);
  Json light = Json::array();
  for (const LightnessEntry& e : r.lightness) {
    Json entry;
    entry["competition"] = e.competition;
    entry["lightness"] = json_of(e.value);
    light.push_back(entry);
  }
  res["lightness"] = light;
  if (r.has_host_log) {
    Json hosts = Json::array();
    for (const HostRecord& h : r.host_log) hosts.push_back(json_of(h));
    res["host_log"] = hosts;
  }
  out["results"] = res;

  Json verdicts = Json::array();
  for (const auto& [name, v] : r.verdicts) {
    Json entry = json_of(v);
    entry["name"] = name;
    verdicts.push_back(entry);
  }
  out["verdicts"] = verdicts;
  if (r.wall_clock_ms) out["wall_clock_ms"] = *r.wall_clock_ms;
  return out;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ftspan
