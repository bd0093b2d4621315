#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ftspan/graph.hpp"
#include "ftspan/oracles.hpp"
#include "ftspan/packing.hpp"
#include "ftspan/polytime.hpp"
#include "ftspan/preserver.hpp"

namespace ftspan {

// insertion-ordered so identical runs render byte-identical documents
using Json = nlohmann::ordered_json;

Json json_of(const Rat& r);
Json json_of(const EdgeSet& s);
Json json_of(const SpannerWitness& w);
Json json_of(const CycleWitness& c);
Json json_of(const VerificationReport& v);
Json json_of(const ForestPacking& p);
Json json_of(const CompetitiveLightness& c);
Json json_of(const HostRecord& h);

struct LightnessEntry {
  int competition = 0;
  CompetitiveLightness value;
};

/// Everything a single construction run reports.  Ratios always appear
/// next to the weights they were computed from.
struct RunReport {
  std::string family;
  Json params = Json::object();
  int n = 0;
  int m = 0;

  std::string algo;
  Rat k{1};
  std::optional<Rat> k0;
  std::optional<Rat> eps;
  int f = 0;
  std::optional<Rat> eta;
  std::string competition;     // "2f" or "2+eta"
  std::string preserver_mode;  // "exact" or "heuristic"
  uint64_t seed = 0;
  std::optional<Rat> threshold;
  std::optional<int> samples;
  std::optional<double> c_const;

  int spanner_edges = 0;
  Rat spanner_weight{0};
  EdgeSet spanner_ids{0};
  int preserver_edges = 0;
  Rat preserver_weight{0};
  bool preserver_exact = true;
  Rat mst_weight{0};
  Rat girth{0};
  std::vector<LightnessEntry> lightness;
  std::vector<HostRecord> host_log;
  bool has_host_log = false;

  std::vector<std::pair<std::string, VerificationReport>> verdicts;
  std::optional<double> wall_clock_ms;  // only with --timing

  bool all_passed() const;
};

Json json_of(const RunReport& r);

/// Two-space indented dump with a trailing newline.
std::string render(const Json& j);

}  // namespace ftspan
