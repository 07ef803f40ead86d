#include "treeminor/constructions.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>
#include <string>

#include "treeminor/errors.hpp"

namespace treeminor {

Tree path_tree(int n) {
  if (n < 1) throw BadParams("path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Tree(n, std::move(edges));
}

Tree star_tree(int leaves) {
  if (leaves < 0) throw BadParams("star needs leaves >= 0");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Tree(leaves + 1, std::move(edges));
}

Tree spider_tree(std::span<const int> legs) {
  std::vector<Edge> edges;
  Vertex next = 1;
  for (int len : legs) {
    if (len < 1) throw BadParams("spider legs must have length >= 1");
    Vertex prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Tree(next, std::move(edges));
}

Tree caterpillar_tree(std::span<const int> leaves) {
  if (leaves.empty()) throw BadParams("caterpillar needs at least one spine vertex");
  const int spine = static_cast<int>(leaves.size());
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < spine; ++v) edges.emplace_back(v, v + 1);
  Vertex next = spine;
  for (Vertex v = 0; v < spine; ++v) {
    if (leaves[v] < 0) throw BadParams("caterpillar leaf counts must be >= 0");
    for (int i = 0; i < leaves[v]; ++i) edges.emplace_back(v, next++);
  }
  return Tree(next, std::move(edges));
}

Tree prufer_decode(std::span<const int> seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> degree(n, 1);
  for (int x : seq) {
    if (x < 0 || x >= n) throw BadParams("Prufer entry " + std::to_string(x) + " out of range");
    ++degree[x];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  for (int x : seq) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.push(x);
  }
  Vertex u = leaves.top();
  leaves.pop();
  edges.emplace_back(u, leaves.top());
  return Tree(n, std::move(edges));
}

Tree random_prufer_tree(int n, std::uint64_t seed) {
  if (n < 1) throw BadParams("random tree needs n >= 1");
  if (n == 1) return Tree();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(n - 2);
  for (int& x : seq) x = pick(rng);
  return prufer_decode(seq);
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "path") return Family::Path;
  if (name == "star") return Family::Star;
  if (name == "spider") return Family::Spider;
  if (name == "caterpillar") return Family::Caterpillar;
  if (name == "prufer" || name == "random-prufer") return Family::RandomPrufer;
  return std::nullopt;
}

Tree gen(Family family, std::span<const int> params) {
  auto want = [&](std::size_t count, const char* what) {
    if (params.size() != count) throw BadParams(std::string(what));
  };
  switch (family) {
    case Family::Path:
      want(1, "path takes one parameter: n");
      return path_tree(params[0]);
    case Family::Star:
      want(1, "star takes one parameter: leaves");
      return star_tree(params[0]);
    case Family::Spider:
      if (params.empty()) throw BadParams("spider takes one or more leg lengths");
      return spider_tree(params);
    case Family::Caterpillar:
      return caterpillar_tree(params);
    case Family::RandomPrufer:
      want(2, "prufer takes two parameters: n, seed");
      if (params[1] < 0) throw BadParams("seed must be >= 0");
      return random_prufer_tree(params[0], static_cast<std::uint64_t>(params[1]));
  }
  throw BadParams("unknown family");
}

namespace {

void check_enumeration_size(int n, int cap) {
  if (n < 1) throw BadParams("enumeration needs n >= 1");
  if (n > cap) throw SizeLimitExceeded("tree enumeration", n, cap);
}

Tree with_leaf(const Tree& t, Vertex at) {
  std::vector<Edge> edges = t.edges();
  edges.emplace_back(at, t.size());
  return Tree(t.size() + 1, std::move(edges));
}

}  // namespace

// Generate-and-dedup: every tree on n vertices arises from one on n-1 by
// adding a leaf.
std::vector<Tree> enumerate_free_trees(int n, int cap) {
  check_enumeration_size(n, cap);
  std::set<CanonicalCode> layer{canonical_code(Tree())};
  for (int size = 2; size <= n; ++size) {
    std::set<CanonicalCode> next;
    for (const auto& code : layer) {
      Tree t = tree_from_code(code).tree();
      for (Vertex v = 0; v < t.size(); ++v) next.insert(canonical_code(with_leaf(t, v)));
    }
    layer = std::move(next);
  }
  std::vector<Tree> out;
  for (const auto& code : layer) out.push_back(tree_from_code(code).tree());
  return out;
}

std::vector<RootedTree> enumerate_rooted_trees(int n, int cap) {
  check_enumeration_size(n, cap);
  std::set<CanonicalCode> layer{canonical_code(RootedTree())};
  for (int size = 2; size <= n; ++size) {
    std::set<CanonicalCode> next;
    for (const auto& code : layer) {
      Tree t = tree_from_code(code).tree();
      for (Vertex v = 0; v < t.size(); ++v) {
        next.insert(canonical_code(RootedTree(with_leaf(t, v), 0)));
      }
    }
    layer = std::move(next);
  }
  std::vector<RootedTree> out;
  for (const auto& code : layer) out.push_back(tree_from_code(code));
  return out;
}

ChildTypeMultiset child_type_multiset(const RootedTree& rt) {
  auto codes = subtree_codes(rt);
  ChildTypeMultiset out;
  for (Vertex c : rt.children(rt.root())) ++out[codes[c]];
  return out;
}

RootedTree graft(const RootedTree& rt, Vertex at, const RootedTree& s) {
  require_vertex(rt.tree(), at);
  const int n = rt.size();
  std::vector<Edge> edges = rt.tree().edges();
  for (auto [u, v] : s.tree().edges()) edges.emplace_back(u + n, v + n);
  edges.emplace_back(at, s.root() + n);
  return RootedTree(Tree(n + s.size(), std::move(edges)), rt.root());
}

namespace {

// Deletes (T_v, v) for every v in `cut` (children of the root), keeping the
// survivors' relative id order.
RootedTree remove_root_children(const RootedTree& rt, const std::vector<Vertex>& cut) {
  std::vector<Vertex> keep;
  for (Vertex w = 0; w < rt.size(); ++w) {
    bool gone = std::any_of(cut.begin(), cut.end(), [&](Vertex v) { return rt.precedes(v, w); });
    if (!gone) keep.push_back(w);
  }
  auto sub = induced_subtree(rt.tree(), keep);
  Vertex root = static_cast<Vertex>(
      std::lower_bound(sub.origin.begin(), sub.origin.end(), rt.root()) - sub.origin.begin());
  return RootedTree(std::move(sub.tree), root);
}

}  // namespace

RootedTree replace_child_subtree(const RootedTree& rt, Vertex v, const RootedTree& s) {
  if (!rt.tree().contains(v) || rt.parent(v) != rt.root()) {
    throw NotAChild("vertex " + std::to_string(v) + " is not a child of the root");
  }
  RootedTree rest = remove_root_children(rt, {v});
  return graft(rest, rest.root(), s);
}

RootedTree attach_copies(const RootedTree& rt, const CanonicalCode& beta, const RootedTree& k,
                         int count) {
  if (count < 0) throw BadParams("copy count must be >= 0");
  auto codes = subtree_codes(rt);
  std::vector<Vertex> cut;
  for (Vertex c : rt.children(rt.root())) {
    if (codes[c] == beta) cut.push_back(c);
  }
  RootedTree out = remove_root_children(rt, cut);
  for (int i = 0; i < count; ++i) out = graft(out, out.root(), k);
  return out;
}

}  // namespace treeminor
