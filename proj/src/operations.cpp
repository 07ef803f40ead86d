#include "treeminor/operations.hpp"

#include <algorithm>
#include <deque>

#include "treeminor/errors.hpp"

namespace treeminor {
namespace {

std::string edge_text(Edge e) {
  return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

// Rebuilds a tree from `edges` over the surviving ids in `keep` (ascending).
Relabeled<Tree> compact(int n, const std::vector<char>& keep, const std::vector<Edge>& edges) {
  std::vector<Vertex> index(n, -1);
  std::vector<Vertex> origin;
  for (Vertex v = 0; v < n; ++v) {
    if (keep[v]) {
      index[v] = static_cast<Vertex>(origin.size());
      origin.push_back(v);
    }
  }
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (auto [u, v] : edges) out.emplace_back(index[u], index[v]);
  return {Tree(static_cast<int>(origin.size()), std::move(out)), std::move(origin)};
}

Relabeled<Tree> drop_leaf(const Tree& t, Vertex leaf) {
  std::vector<char> keep(t.size(), 1);
  keep[leaf] = 0;
  std::vector<Edge> edges;
  for (auto e : t.edges()) {
    if (e.first != leaf && e.second != leaf) edges.push_back(e);
  }
  return compact(t.size(), keep, edges);
}

}  // namespace

Relabeled<Tree> apply_op(const Tree& t, const OpStep& step) {
  using Kind = OpStep::Kind;
  const int n = t.size();
  switch (step.kind) {
    case Kind::EdgeRemoval: {
      auto [u, v] = step.edge;
      if (!t.has_edge(u, v)) {
        throw OpError(OpError::Reason::MissingTarget, "no edge " + edge_text(step.edge));
      }
      if (t.degree(v) == 1) return drop_leaf(t, v);
      if (t.degree(u) == 1) return drop_leaf(t, u);
      throw OpError(OpError::Reason::WouldDisconnect,
                    "removing inner edge " + edge_text(step.edge) + " disconnects the tree");
    }
    case Kind::EdgeContraction: {
      auto [keep_v, gone] = step.edge;
      if (!t.has_edge(keep_v, gone)) {
        throw OpError(OpError::Reason::MissingTarget, "no edge " + edge_text(step.edge));
      }
      std::vector<char> keep(n, 1);
      keep[gone] = 0;
      std::vector<Edge> edges;
      for (auto [a, b] : t.edges()) {
        if (Edge{a, b} == step.edge) continue;
        if (a == gone) a = keep_v;
        if (b == gone) b = keep_v;
        edges.emplace_back(a, b);
      }
      return compact(n, keep, edges);
    }
    case Kind::VertexRemoval: {
      Vertex v = step.vertex;
      if (!t.contains(v)) {
        throw OpError(OpError::Reason::MissingTarget, "no vertex " + std::to_string(v));
      }
      if (n == 1) {
        throw OpError(OpError::Reason::WouldDisconnect, "cannot remove the only vertex");
      }
      if (t.degree(v) != 1) {
        throw OpError(OpError::Reason::WouldDisconnect,
                      "removing inner vertex " + std::to_string(v) + " disconnects the tree");
      }
      return drop_leaf(t, v);
    }
    case Kind::Deg2Dissolution: {
      Vertex v = step.vertex;
      if (!t.contains(v)) {
        throw OpError(OpError::Reason::MissingTarget, "no vertex " + std::to_string(v));
      }
      if (t.degree(v) != 2) {
        throw OpError(OpError::Reason::NotDegree2, "vertex " + std::to_string(v) + " has degree " +
                                                       std::to_string(t.degree(v)));
      }
      auto nb = t.neighbors(v);
      std::vector<char> keep(n, 1);
      keep[v] = 0;
      std::vector<Edge> edges;
      for (auto e : t.edges()) {
        if (e.first != v && e.second != v) edges.push_back(e);
      }
      edges.push_back(make_edge(nb[0], nb[1]));
      return compact(n, keep, edges);
    }
  }
  throw OpError(OpError::Reason::MissingTarget, "unknown operation");
}

std::vector<OpStep::Kind> operation_set(Relation r) {
  using Kind = OpStep::Kind;
  switch (r) {
    case Relation::Embed:
      return {Kind::EdgeRemoval, Kind::VertexRemoval};
    case Relation::TopoMinor:
      return {Kind::EdgeRemoval, Kind::VertexRemoval, Kind::Deg2Dissolution};
    case Relation::Minor:
      return {Kind::EdgeRemoval, Kind::EdgeContraction, Kind::VertexRemoval};
  }
  return {};
}

namespace {

// Applicable steps of the given kinds; inapplicable ones are skipped rather
// than thrown.
std::vector<OpStep> applicable_steps(const Tree& t, const std::vector<OpStep::Kind>& kinds) {
  using Kind = OpStep::Kind;
  std::vector<OpStep> steps;
  for (Kind k : kinds) {
    switch (k) {
      case Kind::EdgeRemoval:
        for (auto [u, v] : t.edges()) {
          if (t.degree(u) == 1 || t.degree(v) == 1) steps.push_back(OpStep::remove_edge(u, v));
        }
        break;
      case Kind::EdgeContraction:
        for (auto [u, v] : t.edges()) steps.push_back(OpStep::contract_edge(u, v));
        break;
      case Kind::VertexRemoval:
        if (t.size() > 1) {
          for (Vertex v = 0; v < t.size(); ++v) {
            if (t.degree(v) == 1) steps.push_back(OpStep::remove_vertex(v));
          }
        }
        break;
      case Kind::Deg2Dissolution:
        for (Vertex v = 0; v < t.size(); ++v) {
          if (t.degree(v) == 2) steps.push_back(OpStep::dissolve(v));
        }
        break;
    }
  }
  return steps;
}

// BFS over canonical codes. Stops early once `target` is seen; states below
// `min_size` are not expanded (edits never grow a tree).
std::set<CanonicalCode> explore(const Tree& host, Relation r, int size_cap, int min_size,
                                const CanonicalCode* target) {
  if (host.size() > size_cap) {
    throw SizeLimitExceeded("operation-sequence oracle", host.size(), size_cap);
  }
  const auto kinds = operation_set(r);
  std::set<CanonicalCode> seen{canonical_code(host)};
  std::deque<CanonicalCode> queue{*seen.begin()};
  while (!queue.empty()) {
    if (target && seen.count(*target)) break;
    CanonicalCode code = std::move(queue.front());
    queue.pop_front();
    Tree t = tree_from_code(code).tree();
    for (const OpStep& step : applicable_steps(t, kinds)) {
      Tree next = apply_op(t, step).tree;
      if (next.size() < min_size) continue;
      auto [it, fresh] = seen.insert(canonical_code(next));
      if (fresh) queue.push_back(*it);
    }
  }
  return seen;
}

}  // namespace

std::set<CanonicalCode> reachable_codes(const Tree& host, Relation r, int size_cap) {
  return explore(host, r, size_cap, 1, nullptr);
}

bool oracle_reachable(const Tree& pattern, const Tree& host, Relation r, int size_cap) {
  if (host.size() > size_cap) {
    throw SizeLimitExceeded("operation-sequence oracle", host.size(), size_cap);
  }
  if (pattern.size() > host.size()) return false;
  CanonicalCode target = canonical_code(pattern);
  return explore(host, r, size_cap, pattern.size(), &target).count(target) > 0;
}

}  // namespace treeminor
