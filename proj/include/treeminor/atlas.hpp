#pragma once

#include <string>
#include <utility>
#include <vector>

#include "treeminor/relation.hpp"

namespace treeminor {

struct AtlasConfig {
  int n_max = 6;
  std::vector<Relation> relations{std::begin(kAllRelations), std::end(kAllRelations)};
  // Operation-sequence oracle cross-check for pairs with both sizes <= this;
  // 0 disables it. At most kAtlasOracleLimit.
  int oracle_n_max = 0;
  // Rooted sweep over every rooting of every tree up to this size; 0
  // disables it.
  int rooted_n_max = 0;
  // 0 picks std::thread::hardware_concurrency().
  int workers = 0;
  // Size guard for n_max and rooted_n_max.
  int cap = 10;
};

inline constexpr int kAtlasOracleLimit = 7;
inline constexpr std::size_t kViolationSampleLimit = 100;

struct Violation {
  std::string pattern;  // "#<index>:<canonical code>"
  std::string host;
  std::string expected;
  std::string observed;
};

// One audited property. `failures` is exact; `samples` keeps at most
// kViolationSampleLimit of them in sweep order.
struct CheckTally {
  std::string name;
  long long checked = 0;
  long long failures = 0;
  std::vector<Violation> samples;
};

struct RelationSection {
  Relation relation;
  bool rooted = false;
  // Indexed by size - 1.
  std::vector<int> tree_count;
  std::vector<int> class_count;
  long long mutual_pairs = 0;
  long long pruned_by_size = 0;
};

struct AtlasReport {
  int n_min = 1;
  int n_max = 0;
  int oracle_n_max = 0;
  int rooted_n_max = 0;
  std::vector<Relation> relations;
  std::vector<RelationSection> sections;
  std::vector<CheckTally> checks;
  std::vector<std::pair<std::string, double>> timings_ms;

  bool ok() const;
  long long total_failures() const;

  // Everything except timings is a deterministic function of the config.
  std::string to_json(bool include_timings = true) const;
  std::string to_text(bool include_timings = true) const;
};

// Enumerates all free trees up to n_max, decides every ordered pair under
// every requested relation and audits: mutual <=> isomorphic, the
// Embed => TopoMinor => Minor chain, witness soundness, the branch-vertex
// lemma, and (optionally) oracle agreement and the rooted sweep.
// Throws SizeLimitExceeded when a size bound exceeds its guard.
AtlasReport run_atlas(const AtlasConfig& config);

}  // namespace treeminor
