#pragma once

#include <set>
#include <stdexcept>
#include <string>

#include "treeminor/canonical.hpp"
#include "treeminor/relation.hpp"
#include "treeminor/tree.hpp"

namespace treeminor {

// One local edit. Edge-targeted kinds use `edge`, vertex-targeted kinds use
// `vertex`.
struct OpStep {
  enum class Kind { EdgeRemoval, EdgeContraction, VertexRemoval, Deg2Dissolution };

  Kind kind;
  Edge edge{-1, -1};
  Vertex vertex = -1;

  static OpStep remove_edge(Vertex u, Vertex v) {
    return {Kind::EdgeRemoval, make_edge(u, v), -1};
  }
  static OpStep contract_edge(Vertex u, Vertex v) {
    return {Kind::EdgeContraction, make_edge(u, v), -1};
  }
  static OpStep remove_vertex(Vertex v) { return {Kind::VertexRemoval, {-1, -1}, v}; }
  static OpStep dissolve(Vertex v) { return {Kind::Deg2Dissolution, {-1, -1}, v}; }
};

class OpError : public std::invalid_argument {
 public:
  enum class Reason { MissingTarget, WouldDisconnect, NotDegree2 };

  OpError(Reason reason, const std::string& what)
      : std::invalid_argument(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

// Applies one edit, keeping the result a tree, and compacts vertex ids in
// ascending order of the survivors.
//
//  - EdgeRemoval applies only to a pendant edge; the isolated leaf is
//    dropped with it. On P2 the higher endpoint goes.
//  - EdgeContraction merges the higher endpoint into the lower one.
//  - VertexRemoval applies only to a leaf of a tree with n >= 2.
//  - Deg2Dissolution replaces u - v - w by u - w.
//
// Throws OpError.
Relabeled<Tree> apply_op(const Tree& t, const OpStep& step);

// The operation kinds a relation is closed under.
std::vector<OpStep::Kind> operation_set(Relation r);

// Every tree reachable from `host` by sequences of the relation's
// operations (including the empty sequence), as free canonical codes.
// Breadth-first with canonical-code deduplication.
std::set<CanonicalCode> reachable_codes(const Tree& host, Relation r, int size_cap = 8);

// True iff some tree reachable from `host` is isomorphic to `pattern`.
// Throws SizeLimitExceeded when host.size() > size_cap.
bool oracle_reachable(const Tree& pattern, const Tree& host, Relation r, int size_cap = 8);

}  // namespace treeminor
