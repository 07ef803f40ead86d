#include "treeminor/atlas.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <json.hpp>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "treeminor/canonical.hpp"
#include "treeminor/constructions.hpp"
#include "treeminor/decide.hpp"
#include "treeminor/errors.hpp"
#include "treeminor/operations.hpp"

namespace treeminor {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Outcome of decide(pattern, host) for one relation, already verified.
struct Cell {
  bool holds = false;
  std::string witness_failure;  // empty when the witness checked out
  bool lemma_ok = true;
  std::string unrooted_failure;  // rooted sweep: witness with roots dropped
};

class Tally {
 public:
  explicit Tally(std::string name) { tally_.name = std::move(name); }

  void record(bool passed, const std::string& pattern, const std::string& host,
              const std::string& expected, const std::string& observed) {
    ++tally_.checked;
    if (passed) return;
    ++tally_.failures;
    if (tally_.samples.size() < kViolationSampleLimit) {
      tally_.samples.push_back({pattern, host, expected, observed});
    }
  }

  CheckTally take() { return std::move(tally_); }

 private:
  CheckTally tally_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(j) for j in [0, count) on a pool; each j writes only its own
// slots, so the result does not depend on scheduling.
template <typename Body>
void parallel_for(int count, int workers, Body body) {
  workers = std::min(workers, std::max(count, 1));
  if (workers <= 1) {
    for (int j = 0; j < count; ++j) body(j);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int j = next++; j < count; j = next++) body(j);
    });
  }
  for (auto& t : pool) t.join();
}

MinorModel drop_roots(MinorModel m) {
  m.pattern_root.reset();
  m.host_root.reset();
  return m;
}

template <typename T>
Cell evaluate(const T& pattern, const T& host, Relation r) {
  Cell cell;
  auto m = decide(pattern, host, r);
  if (!m) return cell;
  cell.holds = true;
  if (auto check = check_witness(*m, r); !check) {
    cell.witness_failure = std::string(clause_name(check.clause)) + ": " + check.detail;
  }
  cell.lemma_ok = !branch_vertex_violation(*m).has_value();
  if (m->rooted()) {
    if (auto check = check_witness(drop_roots(*m), r); !check) {
      cell.unrooted_failure = std::string(clause_name(check.clause)) + ": " + check.detail;
    }
  }
  return cell;
}

int tree_size(const Tree& t) { return t.size(); }
int tree_size(const RootedTree& t) { return t.size(); }

// Shared sweep over a list of trees (free or rooted). decided[r][i * n + j]
// holds decide(trees[i], trees[j], relations[r]).
template <typename T>
struct Sweep {
  std::vector<T> trees;
  std::vector<std::string> labels;
  std::vector<CanonicalCode> codes;
  std::vector<std::vector<Cell>> decided;
};

template <typename T>
void decide_all(Sweep<T>& sweep, const std::vector<Relation>& relations, int workers) {
  const int n = static_cast<int>(sweep.trees.size());
  sweep.decided.assign(relations.size(), std::vector<Cell>(std::size_t(n) * n));
  parallel_for(n, workers, [&](int j) {
    for (std::size_t r = 0; r < relations.size(); ++r) {
      for (int i = 0; i < n; ++i) {
        sweep.decided[r][std::size_t(i) * n + j] =
            evaluate(sweep.trees[i], sweep.trees[j], relations[r]);
      }
    }
  });
}

template <typename T>
void audit(const Sweep<T>& sweep, const std::vector<Relation>& relations, int n_max,
           const std::string& prefix, bool rooted, AtlasReport& report) {
  const int n = static_cast<int>(sweep.trees.size());
  Tally mutual(prefix + "mutual-iff-isomorphic");
  Tally chain(prefix + "implication-chain");
  Tally witness(prefix + "witness-soundness");
  Tally lemma(prefix + "branch-vertex-lemma");
  Tally unrooted(prefix + "witness-forgets-root");

  for (std::size_t r = 0; r < relations.size(); ++r) {
    RelationSection section{relations[r], rooted, std::vector<int>(n_max, 0),
                            std::vector<int>(n_max, 0), 0, 0};
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int i = 0; i < n; ++i) ++section.tree_count[tree_size(sweep.trees[i]) - 1];

    const std::string name(relation_name(relations[r]));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Cell& cell = sweep.decided[r][std::size_t(i) * n + j];
        if (cell.holds) {
          witness.record(cell.witness_failure.empty(), sweep.labels[i], sweep.labels[j],
                         name + " witness valid", cell.witness_failure);
          lemma.record(cell.lemma_ok, sweep.labels[i], sweep.labels[j],
                       "branch vertices of the pattern meet F(host)", "violated");
          if (rooted) {
            unrooted.record(cell.unrooted_failure.empty(), sweep.labels[i], sweep.labels[j],
                            name + " witness valid without roots", cell.unrooted_failure);
          }
        }
        if (j < i) continue;
        if (tree_size(sweep.trees[i]) != tree_size(sweep.trees[j])) {
          ++section.pruned_by_size;
          continue;
        }
        ++section.mutual_pairs;
        const bool both = cell.holds && sweep.decided[r][std::size_t(j) * n + i].holds;
        const bool iso = sweep.codes[i] == sweep.codes[j];
        mutual.record(both == iso, sweep.labels[i], sweep.labels[j],
                      name + " mutual " + yes_no(iso), name + " mutual " + yes_no(both));
        if (both) parent[find(i)] = find(j);
      }
    }
    std::set<int> seen;
    for (int i = 0; i < n; ++i) {
      if (seen.insert(find(i)).second) ++section.class_count[tree_size(sweep.trees[i]) - 1];
    }
    report.sections.push_back(std::move(section));
  }

  // Chain order is Embed, TopoMinor, Minor; audit consecutive requested ones.
  std::vector<std::size_t> order(relations.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](auto a, auto b) { return relations[a] < relations[b]; });
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    const auto lo = order[k];
    const auto hi = order[k + 1];
    const std::string lhs(relation_name(relations[lo]));
    const std::string rhs(relation_name(relations[hi]));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const bool a = sweep.decided[lo][std::size_t(i) * n + j].holds;
        const bool b = sweep.decided[hi][std::size_t(i) * n + j].holds;
        chain.record(!a || b, sweep.labels[i], sweep.labels[j], lhs + " => " + rhs,
                     lhs + " " + yes_no(a) + ", " + rhs + " " + yes_no(b));
      }
    }
  }

  report.checks.push_back(mutual.take());
  report.checks.push_back(chain.take());
  report.checks.push_back(witness.take());
  report.checks.push_back(lemma.take());
  if (rooted) report.checks.push_back(unrooted.take());
}

std::string label(int index, const CanonicalCode& code) {
  return "#" + std::to_string(index) + ":" + code.str();
}

}  // namespace

bool AtlasReport::ok() const { return total_failures() == 0; }

long long AtlasReport::total_failures() const {
  long long total = 0;
  for (const auto& c : checks) total += c.failures;
  return total;
}

AtlasReport run_atlas(const AtlasConfig& config) {
  if (config.n_max < 1) throw BadParams("atlas needs n_max >= 1");
  if (config.n_max > config.cap) throw SizeLimitExceeded("atlas", config.n_max, config.cap);
  if (config.oracle_n_max > kAtlasOracleLimit) {
    throw SizeLimitExceeded("atlas oracle", config.oracle_n_max, kAtlasOracleLimit);
  }
  if (config.rooted_n_max > config.cap) {
    throw SizeLimitExceeded("atlas rooted sweep", config.rooted_n_max, config.cap);
  }
  if (config.relations.empty()) throw BadParams("atlas needs at least one relation");

  std::vector<Relation> relations = config.relations;
  std::sort(relations.begin(), relations.end());
  relations.erase(std::unique(relations.begin(), relations.end()), relations.end());
  const int workers = resolve_workers(config.workers);

  AtlasReport report;
  report.n_max = config.n_max;
  report.oracle_n_max = config.oracle_n_max;
  report.rooted_n_max = config.rooted_n_max;
  report.relations = relations;

  auto start = Clock::now();
  Sweep<Tree> free_sweep;
  for (int size = 1; size <= config.n_max; ++size) {
    for (auto& t : enumerate_free_trees(size, config.cap)) free_sweep.trees.push_back(std::move(t));
  }
  for (std::size_t i = 0; i < free_sweep.trees.size(); ++i) {
    free_sweep.codes.push_back(canonical_code(free_sweep.trees[i]));
    free_sweep.labels.push_back(label(static_cast<int>(i), free_sweep.codes.back()));
  }
  report.timings_ms.emplace_back("enumerate", ms_since(start));

  start = Clock::now();
  decide_all(free_sweep, relations, workers);
  report.timings_ms.emplace_back("decide", ms_since(start));

  start = Clock::now();
  audit(free_sweep, relations, config.n_max, "", false, report);
  report.timings_ms.emplace_back("audit", ms_since(start));

  if (config.oracle_n_max > 0) {
    start = Clock::now();
    Tally oracle("oracle-agreement");
    const int n = static_cast<int>(free_sweep.trees.size());
    // reach[r][j]: codes reachable from host j under relations[r].
    std::vector<std::vector<std::set<CanonicalCode>>> reach(relations.size(),
                                                            std::vector<std::set<CanonicalCode>>(n));
    parallel_for(n, workers, [&](int j) {
      if (free_sweep.trees[j].size() > config.oracle_n_max) return;
      for (std::size_t r = 0; r < relations.size(); ++r) {
        reach[r][j] = reachable_codes(free_sweep.trees[j], relations[r], kAtlasOracleLimit);
      }
    });
    for (std::size_t r = 0; r < relations.size(); ++r) {
      const std::string name(relation_name(relations[r]));
      for (int i = 0; i < n; ++i) {
        if (free_sweep.trees[i].size() > config.oracle_n_max) continue;
        for (int j = 0; j < n; ++j) {
          if (free_sweep.trees[j].size() > config.oracle_n_max) continue;
          const bool dp = free_sweep.decided[r][std::size_t(i) * n + j].holds;
          const bool bfs = reach[r][j].count(free_sweep.codes[i]) > 0;
          oracle.record(dp == bfs, free_sweep.labels[i], free_sweep.labels[j],
                        name + " oracle " + yes_no(bfs), name + " decide " + yes_no(dp));
        }
      }
    }
    report.checks.push_back(oracle.take());
    report.timings_ms.emplace_back("oracle", ms_since(start));
  }

  if (config.rooted_n_max > 0) {
    start = Clock::now();
    Sweep<RootedTree> rooted_sweep;
    for (int size = 1; size <= config.rooted_n_max; ++size) {
      for (const auto& t : enumerate_free_trees(size, config.cap)) {
        for (Vertex root = 0; root < t.size(); ++root) rooted_sweep.trees.emplace_back(t, root);
      }
    }
    for (std::size_t i = 0; i < rooted_sweep.trees.size(); ++i) {
      rooted_sweep.codes.push_back(canonical_code(rooted_sweep.trees[i]));
      rooted_sweep.labels.push_back(label(static_cast<int>(i), rooted_sweep.codes.back()) + "@" +
                                    std::to_string(rooted_sweep.trees[i].root()));
    }
    decide_all(rooted_sweep, relations, workers);
    audit(rooted_sweep, relations, config.rooted_n_max, "rooted-", true, report);
    report.timings_ms.emplace_back("rooted", ms_since(start));
  }
  return report;
}

std::string AtlasReport::to_json(bool include_timings) const {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["n_range"] = {n_min, n_max};
  doc["oracle_n_max"] = oracle_n_max;
  doc["rooted_n_max"] = rooted_n_max;
  ordered_json rels = ordered_json::array();
  for (Relation r : relations) rels.push_back(std::string(relation_name(r)));
  doc["relations"] = std::move(rels);
  ordered_json sections_json = ordered_json::array();
  for (const auto& s : sections) {
    ordered_json sj;
    sj["relation"] = std::string(relation_name(s.relation));
    sj["rooted"] = s.rooted;
    sj["tree_count"] = s.tree_count;
    sj["class_count"] = s.class_count;
    sj["mutual_pairs"] = s.mutual_pairs;
    sj["pruned_by_size"] = s.pruned_by_size;
    sections_json.push_back(std::move(sj));
  }
  doc["sections"] = std::move(sections_json);
  ordered_json checks_json = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["checked"] = c.checked;
    cj["failures"] = c.failures;
    ordered_json samples = ordered_json::array();
    for (const auto& v : c.samples) {
      ordered_json vj;
      vj["pair"] = {v.pattern, v.host};
      vj["expected"] = v.expected;
      vj["observed"] = v.observed;
      samples.push_back(std::move(vj));
    }
    cj["violations"] = std::move(samples);
    checks_json.push_back(std::move(cj));
  }
  doc["checks"] = std::move(checks_json);
  doc["ok"] = ok();
  if (include_timings) {
    ordered_json t = ordered_json::object();
    for (const auto& [phase, ms] : timings_ms) t[phase] = ms;
    doc["timings_ms"] = std::move(t);
  }
  return doc.dump(2) + "\n";
}

std::string AtlasReport::to_text(bool include_timings) const {
  std::ostringstream out;
  out << "atlas n=" << n_min << ".." << n_max;
  if (oracle_n_max > 0) out << "  oracle<=" << oracle_n_max;
  if (rooted_n_max > 0) out << "  rooted<=" << rooted_n_max;
  out << "\n\n";

  char line[256];
  for (const auto& s : sections) {
    out << (s.rooted ? "rooted " : "") << relation_name(s.relation) << "\n";
    std::snprintf(line, sizeof line, "  %-6s %8s %8s\n", "size", "trees", "classes");
    out << line;
    for (std::size_t k = 0; k < s.tree_count.size(); ++k) {
      std::snprintf(line, sizeof line, "  %-6zu %8d %8d\n", k + 1, s.tree_count[k],
                    s.class_count[k]);
      out << line;
    }
    std::snprintf(line, sizeof line, "  mutual pairs %lld, pruned by size argument %lld\n\n",
                  s.mutual_pairs, s.pruned_by_size);
    out << line;
  }

  std::snprintf(line, sizeof line, "%-36s %10s %10s\n", "check", "checked", "failures");
  out << line;
  for (const auto& c : checks) {
    std::snprintf(line, sizeof line, "%-36s %10lld %10lld\n", c.name.c_str(), c.checked,
                  c.failures);
    out << line;
  }
  for (const auto& c : checks) {
    for (const auto& v : c.samples) {
      out << "  " << c.name << ": " << v.pattern << " vs " << v.host << " expected " << v.expected
          << ", observed " << v.observed << "\n";
    }
  }
  out << "\n" << (ok() ? "OK" : "VIOLATIONS") << " (" << total_failures() << " failures)\n";
  if (include_timings) {
    out << "\ntimings:";
    for (const auto& [phase, ms] : timings_ms) {
      std::snprintf(line, sizeof line, " %s %.1fms", phase.c_str(), ms);
      out << line;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace treeminor
