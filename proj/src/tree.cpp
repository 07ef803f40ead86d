#include "treeminor/tree.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "treeminor/errors.hpp"

namespace treeminor {

Tree::Tree() : adjacency_(1) {}

Tree::Tree(int n, std::vector<Edge> edges) {
  if (n < 1) throw InvalidTree("tree needs at least one vertex, got " + std::to_string(n));
  if (static_cast<int>(edges.size()) != n - 1) {
    throw InvalidTree("tree on " + std::to_string(n) + " vertices needs " + std::to_string(n - 1) +
                      " edges, got " + std::to_string(edges.size()));
  }
  for (auto& e : edges) {
    if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n) {
      throw InvalidTree("edge " + std::to_string(e.first) + " " + std::to_string(e.second) +
                        " out of range");
    }
    if (e.first == e.second) throw InvalidTree("self-loop at " + std::to_string(e.first));
    e = make_edge(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw InvalidTree("parallel edge " + std::to_string(dup->first) + " " +
                      std::to_string(dup->second));
  }

  adjacency_.assign(n, {});
  for (auto [u, v] : edges) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
  edges_ = std::move(edges);

  // n-1 edges plus connectivity gives a tree.
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency_[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw InvalidTree("graph is not connected");
}

bool Tree::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

void require_vertex(const Tree& t, Vertex v) {
  if (!t.contains(v)) {
    throw VertexOutOfRange("vertex " + std::to_string(v) + " not in tree of size " +
                           std::to_string(t.size()));
  }
}

RootedTree::RootedTree(Tree tree, Vertex root) : tree_(std::move(tree)), root_(root) {
  if (!tree_.contains(root)) {
    throw InvalidTree("root " + std::to_string(root) + " not in tree of size " +
                      std::to_string(tree_.size()));
  }
  const int n = tree_.size();
  parent_.assign(n, -1);
  children_.assign(n, {});
  depth_.assign(n, 0);
  entry_.assign(n, 0);
  exit_.assign(n, 0);
  preorder_.reserve(n);

  // Iterative DFS; children are visited in ascending id order.
  int clock = 0;
  std::vector<std::pair<Vertex, std::size_t>> stack{{root_, 0}};
  entry_[root_] = clock++;
  preorder_.push_back(root_);
  while (!stack.empty()) {
    auto& [u, next] = stack.back();
    auto nb = tree_.neighbors(u);
    if (next < nb.size()) {
      Vertex w = nb[next++];
      if (w == parent_[u]) continue;
      parent_[w] = u;
      depth_[w] = depth_[u] + 1;
      children_[u].push_back(w);
      entry_[w] = clock++;
      preorder_.push_back(w);
      stack.emplace_back(w, 0);
    } else {
      exit_[u] = clock++;
      stack.pop_back();
    }
  }
}

std::vector<Vertex> successors(const RootedTree& rt, Vertex v) {
  require_vertex(rt.tree(), v);
  auto c = rt.children(v);
  return {c.begin(), c.end()};
}

Relabeled<Tree> induced_subtree(const Tree& t, std::span<const Vertex> keep) {
  std::vector<Vertex> origin(keep.begin(), keep.end());
  std::sort(origin.begin(), origin.end());
  origin.erase(std::unique(origin.begin(), origin.end()), origin.end());
  std::vector<Vertex> index(t.size(), -1);
  for (std::size_t i = 0; i < origin.size(); ++i) {
    require_vertex(t, origin[i]);
    index[origin[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : t.edges()) {
    if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  }
  return {Tree(static_cast<int>(origin.size()), std::move(edges)), std::move(origin)};
}

Relabeled<RootedTree> subtree_at(const RootedTree& rt, Vertex v) {
  require_vertex(rt.tree(), v);
  std::vector<Vertex> keep;
  for (Vertex w : rt.preorder()) {
    if (rt.precedes(v, w)) keep.push_back(w);
  }
  auto sub = induced_subtree(rt.tree(), keep);
  auto pos = std::lower_bound(sub.origin.begin(), sub.origin.end(), v) - sub.origin.begin();
  return {RootedTree(std::move(sub.tree), static_cast<Vertex>(pos)), std::move(sub.origin)};
}

std::vector<Vertex> tree_path(const Tree& t, Vertex u, Vertex w) {
  require_vertex(t, u);
  require_vertex(t, w);
  RootedTree rt(t, w);
  std::vector<Vertex> path{u};
  while (path.back() != w) path.push_back(rt.parent(path.back()));
  return path;
}

}  // namespace treeminor
