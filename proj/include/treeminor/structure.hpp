#pragma once

#include <string>
#include <vector>

#include "treeminor/tree.hpp"

namespace treeminor {

// A vertex or an edge of a tree. For a vertex, u == v.
struct FixedElement {
  enum class Kind { Vertex, Edge };

  Kind kind = Kind::Vertex;
  Vertex u = 0;
  Vertex v = 0;

  static FixedElement vertex(Vertex x) { return {Kind::Vertex, x, x}; }
  static FixedElement edge(Vertex a, Vertex b) {
    auto e = make_edge(a, b);
    return {Kind::Edge, e.first, e.second};
  }

  // True iff `perm` maps the element onto itself (setwise for an edge).
  bool stabilized_by(const std::vector<Vertex>& perm) const;

  // "vertex 2" or "edge 1 2".
  std::string to_string() const;

  friend bool operator==(const FixedElement&, const FixedElement&) = default;
};

// The vertex or edge left after repeatedly stripping all leaves.
FixedElement center(const Tree& t);

// A together with every vertex on a path between two members of A; sorted.
// Empty for empty A.
std::vector<Vertex> closure(const Tree& t, std::vector<Vertex> a);

// F(T): vertices of degree greater than two, ascending.
std::vector<Vertex> branch_vertices(const Tree& t);

// inf(T): vertices of infinite degree. Always empty for a finite tree; kept
// so callers can state the degenerate clauses explicitly.
std::vector<Vertex> infinite_degree_vertices(const Tree& t);

// Every bijection a -> b that preserves edges and maps root to root.
// perm[v] is the image of v. Empty when the trees are not rooted-isomorphic.
std::vector<std::vector<Vertex>> rooted_isomorphisms(const RootedTree& a, const RootedTree& b);

// The full automorphism group as explicit permutations; the identity comes
// first.
std::vector<std::vector<Vertex>> automorphisms(const Tree& t);

// A vertex or edge fixed by every self-model of `t`. The closure-of-inf
// descent terminates at once on a finite tree, leaving the center of `t`.
FixedElement fixed_element(const Tree& t);

}  // namespace treeminor
