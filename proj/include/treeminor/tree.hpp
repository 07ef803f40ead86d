#pragma once

#include <span>
#include <utility>
#include <vector>

namespace treeminor {

using Vertex = int;

// Undirected edge stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

// A finite simple tree on the vertex set {0, ..., n-1}. Immutable once
// built; the constructor rejects anything that is not a tree.
class Tree {
 public:
  // The single-vertex tree.
  Tree();
  Tree(int n, std::vector<Edge> edges);

  int size() const { return static_cast<int>(adjacency_.size()); }
  bool contains(Vertex v) const { return v >= 0 && v < size(); }

  // Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  // Normalized (u < v) and sorted.
  const std::vector<Edge>& edges() const { return edges_; }

  // Labeled equality: same n and same edge set.
  friend bool operator==(const Tree& a, const Tree& b) {
    return a.edges_ == b.edges_ && a.size() == b.size();
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

// A tree with a distinguished root and the induced tree order, where
// u <= w iff u lies on the root-to-w path.
class RootedTree {
 public:
  RootedTree() : RootedTree(Tree(), 0) {}
  RootedTree(Tree tree, Vertex root);

  const Tree& tree() const { return tree_; }
  Vertex root() const { return root_; }
  int size() const { return tree_.size(); }

  // -1 for the root.
  Vertex parent(Vertex v) const { return parent_[v]; }
  // Sorted ascending.
  std::span<const Vertex> children(Vertex v) const { return children_[v]; }
  int depth(Vertex v) const { return depth_[v]; }

  // Tree order: true iff `u` lies on the path from the root to `w`.
  bool precedes(Vertex u, Vertex w) const {
    return entry_[u] <= entry_[w] && exit_[w] <= exit_[u];
  }

  // Preorder visiting children in ascending id order; starts at the root.
  const std::vector<Vertex>& preorder() const { return preorder_; }

  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return a.root_ == b.root_ && a.tree_ == b.tree_;
  }

 private:
  Tree tree_;
  Vertex root_;
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<int> depth_;
  std::vector<int> entry_;
  std::vector<int> exit_;
  std::vector<Vertex> preorder_;
};

// Result of an operation that compacts vertex ids; origin[new_id] is the id
// the vertex carried in the input.
template <typename T>
struct Relabeled {
  T tree;
  std::vector<Vertex> origin;
};

// Children of `v` in the tree order, sorted by id.
std::vector<Vertex> successors(const RootedTree& rt, Vertex v);

// The full subtree (T_v, v) of all w >= v, relabeled contiguously. The new
// ids follow the ascending order of the original ids.
Relabeled<RootedTree> subtree_at(const RootedTree& rt, Vertex v);

// Induced subgraph on `keep`, which must induce a connected subtree.
Relabeled<Tree> induced_subtree(const Tree& t, std::span<const Vertex> keep);

// Vertices on the unique path from u to w, inclusive, in walking order.
std::vector<Vertex> tree_path(const Tree& t, Vertex u, Vertex w);

void require_vertex(const Tree& t, Vertex v);

}  // namespace treeminor
