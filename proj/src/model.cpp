#include "treeminor/model.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <json.hpp>
#include <numeric>

#include "treeminor/errors.hpp"
#include "treeminor/structure.hpp"

namespace treeminor {

std::string_view clause_name(ModelCheck::Clause c) {
  using C = ModelCheck::Clause;
  switch (c) {
    case C::Ok:
      return "ok";
    case C::Malformed:
      return "malformed";
    case C::EmptyBranchSet:
      return "empty-branch-set";
    case C::OutOfRange:
      return "out-of-range";
    case C::Disconnected:
      return "disconnected";
    case C::Overlap:
      return "overlap";
    case C::MissingEdge:
      return "missing-edge";
    case C::RootedOrder:
      return "rooted-order";
    case C::NotSingleton:
      return "not-singleton";
    case C::NotPath:
      return "not-path";
    case C::NoAnchor:
      return "no-anchor";
  }
  return "?";
}

namespace {

using Clause = ModelCheck::Clause;

ModelCheck fail(Clause c, std::string detail) { return {c, std::move(detail)}; }

std::string set_text(const std::vector<Vertex>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

// Vertex count of the component of `start` inside `members` (marked by
// owner == label).
int component_size(const Tree& host, const std::vector<Vertex>& owner, Vertex label,
                   Vertex start) {
  std::vector<Vertex> stack{start};
  std::vector<char> seen(host.size(), 0);
  seen[start] = 1;
  int count = 0;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    ++count;
    for (Vertex y : host.neighbors(x)) {
      if (!seen[y] && owner[y] == label) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return count;
}

// owner[x] = pattern vertex whose branch set holds x, or -1.
std::vector<Vertex> owners(const MinorModel& m) {
  std::vector<Vertex> owner(m.host.size(), -1);
  for (Vertex v = 0; v < static_cast<Vertex>(m.branch_sets.size()); ++v) {
    for (Vertex x : m.branch_sets[v]) owner[x] = v;
  }
  return owner;
}

// The host vertex minimizing depth, i.e. the tree-order minimum of a
// connected set.
Vertex top_of(const RootedTree& host, const std::vector<Vertex>& set) {
  return *std::min_element(set.begin(), set.end(), [&](Vertex a, Vertex b) {
    return host.depth(a) < host.depth(b);
  });
}

}  // namespace

ModelCheck check_model(const MinorModel& m) {
  const int np = m.pattern.size();
  const int nh = m.host.size();
  if (static_cast<int>(m.branch_sets.size()) != np) {
    return fail(Clause::Malformed, "expected " + std::to_string(np) + " branch sets, got " +
                                       std::to_string(m.branch_sets.size()));
  }
  if (m.pattern_root.has_value() != m.host_root.has_value()) {
    return fail(Clause::Malformed, "only one of pattern/host carries a root");
  }

  std::vector<Vertex> owner(nh, -1);
  for (Vertex v = 0; v < np; ++v) {
    const auto& set = m.branch_sets[v];
    if (set.empty()) return fail(Clause::EmptyBranchSet, "mu(" + std::to_string(v) + ") is empty");
    for (std::size_t i = 0; i < set.size(); ++i) {
      Vertex x = set[i];
      if (x < 0 || x >= nh) {
        return fail(Clause::OutOfRange,
                    "mu(" + std::to_string(v) + ") contains " + std::to_string(x));
      }
      if (i > 0 && set[i - 1] >= x) {
        return fail(Clause::Malformed,
                    "mu(" + std::to_string(v) + ") is not strictly ascending: " + set_text(set));
      }
      if (owner[x] >= 0) {
        return fail(Clause::Overlap, "mu(" + std::to_string(owner[x]) + ") and mu(" +
                                         std::to_string(v) + ") share host vertex " +
                                         std::to_string(x));
      }
      owner[x] = v;
    }
  }
  for (Vertex v = 0; v < np; ++v) {
    const auto& set = m.branch_sets[v];
    if (component_size(m.host, owner, v, set.front()) != static_cast<int>(set.size())) {
      return fail(Clause::Disconnected,
                  "mu(" + std::to_string(v) + ") = " + set_text(set) + " is not connected");
    }
  }
  for (auto [v, w] : m.pattern.edges()) {
    bool realized = false;
    for (Vertex x : m.branch_sets[v]) {
      for (Vertex y : m.host.neighbors(x)) realized = realized || owner[y] == w;
    }
    if (!realized) {
      return fail(Clause::MissingEdge, "pattern edge " + std::to_string(v) + "-" +
                                           std::to_string(w) + " has no host edge between " +
                                           set_text(m.branch_sets[v]) + " and " +
                                           set_text(m.branch_sets[w]));
    }
  }
  if (m.rooted()) {
    if (!m.pattern.contains(*m.pattern_root) || !m.host.contains(*m.host_root)) {
      return fail(Clause::Malformed, "root out of range");
    }
    RootedTree pattern(m.pattern, *m.pattern_root);
    RootedTree host(m.host, *m.host_root);
    std::vector<Vertex> top(np);
    for (Vertex v = 0; v < np; ++v) top[v] = top_of(host, m.branch_sets[v]);
    for (Vertex v = 0; v < np; ++v) {
      for (Vertex w = 0; w < np; ++w) {
        if (pattern.precedes(v, w) != host.precedes(top[v], top[w])) {
          return fail(Clause::RootedOrder,
                      "pattern " + std::to_string(v) + (pattern.precedes(v, w) ? " <= " : " !<= ") +
                          std::to_string(w) + " but host minima " + std::to_string(top[v]) +
                          (host.precedes(top[v], top[w]) ? " <= " : " !<= ") +
                          std::to_string(top[w]));
        }
      }
    }
  }
  return {};
}

std::optional<std::vector<Vertex>> topological_anchors(const MinorModel& m) {
  const auto owner = owners(m);
  const int np = m.pattern.size();
  std::vector<Vertex> anchors(np, -1);
  for (Vertex v = 0; v < np; ++v) {
    const auto& set = m.branch_sets[v];
    // Port towards each pattern neighbour: the vertex of mu(v) adjacent to
    // that neighbour's branch set (unique, the host being a tree).
    std::vector<Vertex> ports;
    for (Vertex x : set) {
      for (Vertex y : m.host.neighbors(x)) {
        if (owner[y] >= 0 && owner[y] != v && m.pattern.has_edge(v, owner[y])) ports.push_back(x);
      }
    }
    for (Vertex a : set) {
      RootedTree from(m.host, a);
      std::vector<Vertex> first_steps;
      for (Vertex p : ports) {
        if (p == a) continue;
        Vertex step = p;
        while (from.parent(step) != a) step = from.parent(step);
        first_steps.push_back(step);
      }
      std::sort(first_steps.begin(), first_steps.end());
      if (std::adjacent_find(first_steps.begin(), first_steps.end()) == first_steps.end()) {
        anchors[v] = a;
        break;
      }
    }
    if (anchors[v] < 0) return std::nullopt;
  }
  return anchors;
}

ModelCheck check_witness(const MinorModel& m, Relation r) {
  if (auto base = check_model(m); !base) return base;
  const int np = m.pattern.size();
  switch (r) {
    case Relation::Embed:
      for (Vertex v = 0; v < np; ++v) {
        if (m.branch_sets[v].size() != 1) {
          return fail(Clause::NotSingleton,
                      "mu(" + std::to_string(v) + ") = " + set_text(m.branch_sets[v]));
        }
      }
      break;
    case Relation::TopoMinor: {
      const auto owner = owners(m);
      for (Vertex v = 0; v < np; ++v) {
        for (Vertex x : m.branch_sets[v]) {
          int inner = 0;
          for (Vertex y : m.host.neighbors(x)) inner += owner[y] == v;
          if (inner > 2) {
            return fail(Clause::NotPath, "mu(" + std::to_string(v) + ") = " +
                                             set_text(m.branch_sets[v]) + " branches at " +
                                             std::to_string(x));
          }
        }
      }
      if (!topological_anchors(m)) {
        return fail(Clause::NoAnchor, "some branch set has no anchor; the model does not unfold "
                                      "to a subdivision");
      }
      break;
    }
    case Relation::Minor:
      break;
  }
  return {};
}

std::optional<Vertex> branch_vertex_violation(const MinorModel& m) {
  for (Vertex v = 0; v < m.pattern.size(); ++v) {
    if (m.pattern.degree(v) <= 2) continue;
    const auto& set = m.branch_sets[v];
    bool hit = std::any_of(set.begin(), set.end(), [&](Vertex x) { return m.host.degree(x) > 2; });
    if (!hit) return v;
  }
  return std::nullopt;
}

MinorModel identity_model(const Tree& t) {
  MinorModel m{t, t, std::nullopt, std::nullopt, {}};
  for (Vertex v = 0; v < t.size(); ++v) m.branch_sets.push_back({v});
  return m;
}

MinorModel identity_model(const RootedTree& rt) {
  MinorModel m = identity_model(rt.tree());
  m.pattern_root = m.host_root = rt.root();
  return m;
}

MinorModel compose_models(const MinorModel& first, const MinorModel& second) {
  if (!(first.host == second.pattern)) {
    throw HostPatternMismatch("host of the first model is not the pattern of the second");
  }
  if (first.rooted() != second.rooted() ||
      (first.rooted() && *first.host_root != *second.pattern_root)) {
    throw HostPatternMismatch("roots of the intermediate tree disagree");
  }
  MinorModel out{first.pattern, second.host, first.pattern_root, second.host_root, {}};
  for (const auto& set : first.branch_sets) {
    std::vector<Vertex> merged;
    for (Vertex w : set) {
      if (w < 0 || w >= static_cast<Vertex>(second.branch_sets.size())) {
        throw HostPatternMismatch("branch set refers to vertex outside the intermediate tree");
      }
      merged.insert(merged.end(), second.branch_sets[w].begin(), second.branch_sets[w].end());
    }
    std::sort(merged.begin(), merged.end());
    out.branch_sets.push_back(std::move(merged));
  }
  return out;
}

namespace {

using Mask = std::uint32_t;

std::vector<Vertex> mask_members(Mask m) {
  std::vector<Vertex> out;
  for (Vertex x = 0; m; ++x, m >>= 1) {
    if (m & 1) out.push_back(x);
  }
  return out;
}

// Depth-first assignment of branch sets in pattern BFS order; each set is
// a connected host subset disjoint from those placed before and adjacent to
// the set of the BFS parent.
class ModelSearch {
 public:
  ModelSearch(const Tree& pattern, const Tree& host, Vertex start)
      : pattern_(pattern), host_(host) {
    RootedTree order(pattern, start);
    std::vector<Vertex> queue{start};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Vertex c : order.children(queue[i])) queue.push_back(c);
    }
    order_ = queue;
    parent_.resize(pattern.size());
    for (Vertex v = 0; v < pattern.size(); ++v) parent_[v] = order.parent(v);

    const int nh = host.size();
    neighborhood_.assign(nh, 0);
    for (auto [x, y] : host.edges()) {
      neighborhood_[x] |= Mask{1} << y;
      neighborhood_[y] |= Mask{1} << x;
    }
    for (Mask s = 1; s < (Mask{1} << nh); ++s) {
      if (connected(s)) subsets_.push_back(s);
    }
    std::stable_sort(subsets_.begin(), subsets_.end(),
                     [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
  }

  std::vector<MinorModel> run() {
    assigned_.assign(pattern_.size(), 0);
    place(0, 0);
    return std::move(found_);
  }

 private:
  bool connected(Mask s) const {
    Mask reach = s & (~s + 1);
    for (;;) {
      Mask grown = reach;
      for (Mask r = reach; r; r &= r - 1) grown |= neighborhood_[std::countr_zero(r)] & s;
      if (grown == reach) return reach == s;
      reach = grown;
    }
  }

  Mask boundary(Mask s) const {
    Mask out = 0;
    for (; s; s &= s - 1) out |= neighborhood_[std::countr_zero(s)];
    return out;
  }

  void place(std::size_t index, Mask used) {
    if (index == order_.size()) {
      MinorModel m{pattern_, host_, std::nullopt, std::nullopt, {}};
      for (Mask s : assigned_) m.branch_sets.push_back(mask_members(s));
      found_.push_back(std::move(m));
      return;
    }
    const Vertex v = order_[index];
    const int budget = host_.size() - std::popcount(used) -
                       static_cast<int>(order_.size() - index - 1);
    const Mask touch = parent_[v] < 0 ? ~Mask{0} : boundary(assigned_[parent_[v]]);
    for (Mask s : subsets_) {
      if (std::popcount(s) > budget) break;
      if ((s & used) || !(s & touch)) continue;
      assigned_[v] = s;
      place(index + 1, used | s);
    }
    assigned_[v] = 0;
  }

  const Tree& pattern_;
  const Tree& host_;
  std::vector<Vertex> order_;
  std::vector<Vertex> parent_;
  std::vector<Mask> neighborhood_;
  std::vector<Mask> subsets_;
  std::vector<Mask> assigned_;
  std::vector<MinorModel> found_;
};

void sort_models(std::vector<MinorModel>& models) {
  std::sort(models.begin(), models.end(), [](const MinorModel& a, const MinorModel& b) {
    return a.branch_sets < b.branch_sets;
  });
}

}  // namespace

std::vector<MinorModel> enumerate_models(const Tree& pattern, const Tree& host, int cap) {
  if (host.size() > cap) throw SizeLimitExceeded("model enumeration", host.size(), cap);
  if (pattern.size() > host.size()) return {};
  auto models = ModelSearch(pattern, host, 0).run();
  sort_models(models);
  return models;
}

std::vector<MinorModel> enumerate_models(const RootedTree& pattern, const RootedTree& host,
                                         int cap) {
  std::vector<MinorModel> out;
  for (auto& m : enumerate_models(pattern.tree(), host.tree(), cap)) {
    m.pattern_root = pattern.root();
    m.host_root = host.root();
    if (check_model(m)) out.push_back(std::move(m));
  }
  return out;
}

std::vector<MinorModel> enumerate_self_models(const Tree& t, int cap) {
  if (t.size() > cap) throw SizeLimitExceeded("self-model enumeration", t.size(), cap);
  return enumerate_models(t, t, cap);
}

std::string witness_json(const MinorModel& m, Relation r) {
  nlohmann::ordered_json doc;
  doc["pattern_n"] = m.pattern.size();
  doc["host_n"] = m.host.size();
  doc["relation"] = std::string(relation_name(r));
  doc["rooted"] = m.rooted();
  nlohmann::ordered_json sets = nlohmann::ordered_json::object();
  for (std::size_t v = 0; v < m.branch_sets.size(); ++v) {
    sets[std::to_string(v)] = m.branch_sets[v];
  }
  doc["branch_sets"] = std::move(sets);
  return doc.dump();
}

namespace {

Witness decode_witness(std::string_view text, const Tree& pattern, const Tree& host, bool rooted) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("witness JSON: ") + e.what());
  }
  try {
    if (doc.at("pattern_n").get<int>() != pattern.size() ||
        doc.at("host_n").get<int>() != host.size()) {
      throw ParseError("witness JSON sizes do not match the given trees");
    }
    auto relation = parse_relation(doc.at("relation").get<std::string>());
    if (!relation) throw ParseError("witness JSON: unknown relation");
    if (doc.at("rooted").get<bool>() != rooted) {
      throw ParseError("witness JSON rootedness does not match the given trees");
    }
    const auto& sets = doc.at("branch_sets");
    if (!sets.is_object() || static_cast<int>(sets.size()) != pattern.size()) {
      throw ParseError("witness JSON needs one branch set per pattern vertex");
    }
    MinorModel m{pattern, host, std::nullopt, std::nullopt, {}};
    for (Vertex v = 0; v < pattern.size(); ++v) {
      m.branch_sets.push_back(sets.at(std::to_string(v)).get<std::vector<Vertex>>());
    }
    return {std::move(m), *relation};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("witness JSON: ") + e.what());
  }
}

}  // namespace

Witness parse_witness_json(std::string_view text, const Tree& pattern, const Tree& host) {
  return decode_witness(text, pattern, host, false);
}

Witness parse_witness_json(std::string_view text, const RootedTree& pattern,
                           const RootedTree& host) {
  Witness w = decode_witness(text, pattern.tree(), host.tree(), true);
  w.model.pattern_root = pattern.root();
  w.model.host_root = host.root();
  return w;
}

}  // namespace treeminor
