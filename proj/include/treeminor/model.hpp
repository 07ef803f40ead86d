#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treeminor/relation.hpp"
#include "treeminor/tree.hpp"

namespace treeminor {

// A model mu of `pattern` in `host`: branch_sets[v] is the host vertex set
// mu(v), kept sorted ascending. A rooted model carries both roots.
struct MinorModel {
  Tree pattern;
  Tree host;
  std::optional<Vertex> pattern_root;
  std::optional<Vertex> host_root;
  std::vector<std::vector<Vertex>> branch_sets;

  bool rooted() const { return pattern_root.has_value() && host_root.has_value(); }

  friend bool operator==(const MinorModel&, const MinorModel&) = default;
};

struct ModelCheck {
  enum class Clause {
    Ok,
    Malformed,       // wrong number of branch sets, duplicates, half-rooted
    EmptyBranchSet,
    OutOfRange,
    Disconnected,    // a branch set does not induce a connected subgraph
    Overlap,         // mu(v) and mu(w) share a vertex
    MissingEdge,     // a pattern edge has no host edge between its branch sets
    RootedOrder,     // v <=_T w  <=>  min mu(v) <=_S min mu(w) fails
    NotSingleton,    // embedding witness with a non-singleton branch set
    NotPath,         // topological witness whose branch set is not a path
    NoAnchor,        // topological witness that does not unfold to a subdivision
  };

  Clause clause = Clause::Ok;
  std::string detail;

  bool ok() const { return clause == Clause::Ok; }
  explicit operator bool() const { return ok(); }
};

std::string_view clause_name(ModelCheck::Clause c);

// The model conditions: nonempty connected pairwise-disjoint branch sets,
// every pattern edge realized by a host edge, and for rooted models the
// tree-order biconditional on branch-set minima. Reports the first failure.
ModelCheck check_model(const MinorModel& m);

// check_model plus the shape a witness for `r` must have:
//   Embed     - every branch set is a singleton;
//   TopoMinor - every branch set induces a host path and contains an anchor
//               from which the ports towards the pattern neighbours leave in
//               pairwise distinct directions (so the model unfolds to a
//               subdivision of the pattern);
//   Minor     - nothing further.
ModelCheck check_witness(const MinorModel& m, Relation r);

// Anchors of a topological witness (the subdivision's branch vertices), or
// nullopt when some branch set has none. Assumes check_model passed.
std::optional<std::vector<Vertex>> topological_anchors(const MinorModel& m);

// For each pattern vertex of degree > 2, whether mu(v) meets F(host).
// Returns the first pattern vertex violating it, or nullopt.
std::optional<Vertex> branch_vertex_violation(const MinorModel& m);

MinorModel identity_model(const Tree& t);
MinorModel identity_model(const RootedTree& rt);

// mu2 o* mu1: branch set of v is the union of mu2(w) over w in mu1(v).
// Requires first.host == second.pattern (and matching roots when rooted);
// throws HostPatternMismatch otherwise.
MinorModel compose_models(const MinorModel& first, const MinorModel& second);

// Every valid model of `pattern` in `host` by exhaustive search over
// connected host subsets. Throws SizeLimitExceeded when host.size() > cap.
std::vector<MinorModel> enumerate_models(const Tree& pattern, const Tree& host, int cap = 8);
std::vector<MinorModel> enumerate_models(const RootedTree& pattern, const RootedTree& host,
                                         int cap = 8);

// All models of t in t (GM(T) = GE(T)).
std::vector<MinorModel> enumerate_self_models(const Tree& t, int cap = 8);

// Witness JSON, keys in this order:
//   {"pattern_n":..,"host_n":..,"relation":"embed|topo|minor","rooted":..,
//    "branch_sets":{"<v>":[ascending host vertices],...}}
std::string witness_json(const MinorModel& m, Relation r);

struct Witness {
  MinorModel model;
  Relation relation;
};

// Decodes witness JSON against the given trees; throws ParseError when the
// document is malformed or its sizes/rootedness disagree with the trees.
// The result is not validated; run check_witness on it.
Witness parse_witness_json(std::string_view text, const Tree& pattern, const Tree& host);
Witness parse_witness_json(std::string_view text, const RootedTree& pattern,
                           const RootedTree& host);

}  // namespace treeminor
