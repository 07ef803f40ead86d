// Brute-force reference implementations used only by the tests. Nothing
// here calls into the decision procedures, canonical codes or model
// machinery of the library; only the Tree/RootedTree containers are shared.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "treeminor/tree.hpp"

namespace oracle {

using treeminor::Edge;
using treeminor::RootedTree;
using treeminor::Tree;
using treeminor::Vertex;

using Adj = std::vector<std::vector<bool>>;

inline Adj adjacency(const Tree& t) {
  Adj a(t.size(), std::vector<bool>(t.size(), false));
  for (auto [u, v] : t.edges()) a[u][v] = a[v][u] = true;
  return a;
}

// Textbook Prufer decoding by repeated linear scans for the smallest leaf.
inline Tree decode(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> deg(n, 1);
  for (int x : seq) ++deg[x];
  std::vector<Edge> edges;
  for (int x : seq) {
    int leaf = 0;
    while (deg[leaf] != 1) ++leaf;
    edges.push_back(treeminor::make_edge(leaf, x));
    --deg[leaf];
    --deg[x];
  }
  int a = -1;
  for (int v = 0; v < n; ++v) {
    if (deg[v] == 1) {
      if (a < 0) {
        a = v;
      } else {
        edges.push_back(treeminor::make_edge(a, v));
      }
    }
  }
  return Tree(n, edges);
}

// Every labeled tree on n vertices (n^(n-2) of them).
inline std::vector<Tree> labeled_trees(int n) {
  if (n == 1) return {Tree()};
  if (n == 2) return {Tree(2, {{0, 1}})};
  std::vector<Tree> out;
  std::vector<int> seq(n - 2, 0);
  while (true) {
    out.push_back(decode(seq));
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  return out;
}

// Backtracking search for a bijection a -> b preserving adjacency (and the
// root when both roots are given). `visit` returns false to stop.
inline void for_each_isomorphism(const Tree& a, const Tree& b, std::optional<Vertex> ra,
                                 std::optional<Vertex> rb,
                                 const std::function<bool(const std::vector<Vertex>&)>& visit) {
  const int n = a.size();
  if (b.size() != n) return;
  Adj aa = adjacency(a), bb = adjacency(b);
  std::vector<Vertex> perm(n, -1);
  std::vector<bool> used(n, false);
  bool stop = false;
  std::function<void(int)> go = [&](int v) {
    if (stop) return;
    if (v == n) {
      if (!visit(perm)) stop = true;
      return;
    }
    for (Vertex w = 0; w < n && !stop; ++w) {
      if (used[w] || a.degree(v) != b.degree(w)) continue;
      if (ra && ((v == *ra) != (w == *rb))) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) ok = aa[u][v] == bb[perm[u]][w];
      if (!ok) continue;
      perm[v] = w;
      used[w] = true;
      go(v + 1);
      used[w] = false;
    }
    perm[v] = -1;
  };
  go(0);
}

inline bool isomorphic(const Tree& a, const Tree& b) {
  bool found = false;
  for_each_isomorphism(a, b, std::nullopt, std::nullopt, [&](const auto&) {
    found = true;
    return false;
  });
  return found;
}

inline bool isomorphic(const RootedTree& a, const RootedTree& b) {
  bool found = false;
  for_each_isomorphism(a.tree(), b.tree(), a.root(), b.root(), [&](const auto&) {
    found = true;
    return false;
  });
  return found;
}

// Automorphism count by trying all n! permutations.
inline long long automorphism_count(const Tree& t) {
  const int n = t.size();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long long count = 0;
  do {
    bool ok = true;
    for (auto [u, v] : t.edges()) {
      if (!t.has_edge(perm[u], perm[v])) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

inline std::vector<int> degree_profile(const Tree& t) {
  std::vector<int> d;
  for (Vertex v = 0; v < t.size(); ++v) d.push_back(t.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

// Number of isomorphism classes among all labeled trees on n vertices.
inline int free_class_count(int n) {
  std::vector<Tree> reps;
  for (const Tree& t : labeled_trees(n)) {
    auto prof = degree_profile(t);
    bool seen = false;
    for (const Tree& r : reps) {
      if (degree_profile(r) == prof && isomorphic(r, t)) {
        seen = true;
        break;
      }
    }
    if (!seen) reps.push_back(t);
  }
  return static_cast<int>(reps.size());
}

// Number of rooted isomorphism classes among all labeled trees on n
// vertices with every choice of root.
inline int rooted_class_count(int n) {
  std::vector<RootedTree> reps;
  auto profile = [](const RootedTree& rt) {
    std::vector<std::pair<int, int>> p;
    for (Vertex v = 0; v < rt.size(); ++v) {
      p.emplace_back(rt.depth(v), static_cast<int>(rt.children(v).size()));
    }
    std::sort(p.begin(), p.end());
    return p;
  };
  std::vector<std::vector<std::pair<int, int>>> profiles;
  for (const Tree& t : labeled_trees(n)) {
    for (Vertex r = 0; r < n; ++r) {
      RootedTree rt(t, r);
      auto prof = profile(rt);
      bool seen = false;
      for (std::size_t i = 0; i < reps.size() && !seen; ++i) {
        seen = profiles[i] == prof && isomorphic(reps[i], rt);
      }
      if (!seen) {
        reps.push_back(rt);
        profiles.push_back(prof);
      }
    }
  }
  return static_cast<int>(reps.size());
}

// ---------------------------------------------------------------------------
// Brute-force models: label every host vertex with a pattern vertex or -1
// and keep the labelings that form models.

enum class Kind { Embed, Topo, Minor };

struct Labeling {
  std::vector<std::vector<Vertex>> sets;
};

inline bool connected_subset(const Tree& host, const std::vector<Vertex>& s) {
  if (s.empty()) return false;
  std::set<Vertex> in(s.begin(), s.end()), seen{s[0]};
  std::vector<Vertex> stack{s[0]};
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : host.neighbors(x)) {
      if (in.count(y) && seen.insert(y).second) stack.push_back(y);
    }
  }
  return seen.size() == in.size();
}

// The unique host edge between two disjoint connected sets, if any.
inline std::optional<Edge> linking_edge(const Tree& host, const std::vector<Vertex>& from,
                                        const std::vector<Vertex>& to) {
  for (Vertex x : from) {
    for (Vertex y : host.neighbors(x)) {
      if (std::find(to.begin(), to.end(), y) != to.end()) return Edge{x, y};
    }
  }
  return std::nullopt;
}

// Path-shaped branch sets, each with a vertex x from which the edges towards
// the pattern neighbours leave in distinct first steps.
inline bool topo_shape(const Tree& pattern, const Tree& host,
                       const std::vector<std::vector<Vertex>>& sets) {
  for (Vertex v = 0; v < pattern.size(); ++v) {
    const auto& s = sets[v];
    for (Vertex x : s) {
      int inner = 0;
      for (Vertex y : host.neighbors(x)) {
        inner += std::find(s.begin(), s.end(), y) != s.end();
      }
      if (inner > 2) return false;
    }
    bool anchored = false;
    for (Vertex x : s) {
      std::set<Vertex> steps;
      bool distinct = true;
      for (Vertex w : pattern.neighbors(v)) {
        Edge e = *linking_edge(host, s, sets[w]);
        Vertex step = e.first == x ? e.second : treeminor::tree_path(host, x, e.first)[1];
        distinct = distinct && steps.insert(step).second;
      }
      if (distinct) {
        anchored = true;
        break;
      }
    }
    if (!anchored) return false;
  }
  return true;
}

inline bool rooted_order(const RootedTree& pattern, const RootedTree& host,
                         const std::vector<std::vector<Vertex>>& sets) {
  const int k = pattern.size();
  std::vector<Vertex> top(k);
  for (Vertex v = 0; v < k; ++v) {
    top[v] = *std::min_element(sets[v].begin(), sets[v].end(), [&](Vertex a, Vertex b) {
      return host.depth(a) < host.depth(b);
    });
  }
  for (Vertex v = 0; v < k; ++v) {
    for (Vertex w = 0; w < k; ++w) {
      if (pattern.precedes(v, w) != host.precedes(top[v], top[w])) return false;
    }
  }
  return true;
}

// Calls `visit` on every model of `pattern` in `host` of the given kind;
// the rooted roots are optional. `visit` returns false to stop.
inline void for_each_model(const Tree& pattern, const Tree& host, Kind kind,
                           const RootedTree* rooted_pattern, const RootedTree* rooted_host,
                           const std::function<bool(const std::vector<std::vector<Vertex>>&)>& visit) {
  const int k = pattern.size(), n = host.size();
  if (k > n) return;
  std::vector<int> label(n, -1);
  while (true) {
    std::vector<std::vector<Vertex>> sets(k);
    for (Vertex x = 0; x < n; ++x) {
      if (label[x] >= 0) sets[label[x]].push_back(x);
    }
    bool ok = true;
    for (Vertex v = 0; v < k && ok; ++v) {
      ok = connected_subset(host, sets[v]) && (kind != Kind::Embed || sets[v].size() == 1);
    }
    for (auto [u, v] : pattern.edges()) {
      if (!ok) break;
      ok = linking_edge(host, sets[u], sets[v]).has_value();
    }
    if (ok && kind == Kind::Topo) ok = topo_shape(pattern, host, sets);
    if (ok && rooted_pattern) ok = rooted_order(*rooted_pattern, *rooted_host, sets);
    if (ok && !visit(sets)) return;
    int i = 0;
    while (i < n && label[i] == k - 1) label[i++] = -1;
    if (i == n) return;
    ++label[i];
  }
}

inline bool has_model(const Tree& pattern, const Tree& host, Kind kind) {
  bool found = false;
  for_each_model(pattern, host, kind, nullptr, nullptr, [&](const auto&) {
    found = true;
    return false;
  });
  return found;
}

inline bool has_model(const RootedTree& pattern, const RootedTree& host, Kind kind) {
  bool found = false;
  for_each_model(pattern.tree(), host.tree(), kind, &pattern, &host, [&](const auto&) {
    found = true;
    return false;
  });
  return found;
}

// Unrooted subdivision test, independent of the model reading: an injective
// map whose edge paths are internally disjoint and avoid all images.
inline bool has_subdivision(const Tree& pattern, const Tree& host) {
  const int k = pattern.size(), n = host.size();
  if (k > n) return false;
  std::vector<Vertex> image(k, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> go = [&](int v) -> bool {
    if (v == k) {
      std::vector<int> load(n, 0);
      for (Vertex x : image) load[x] = 2;
      for (auto [a, b] : pattern.edges()) {
        auto p = treeminor::tree_path(host, image[a], image[b]);
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
          if (++load[p[i]] > 1) return false;
        }
      }
      return true;
    }
    for (Vertex x = 0; x < n; ++x) {
      if (used[x]) continue;
      image[v] = x;
      used[x] = true;
      bool hit = go(v + 1);
      used[x] = false;
      if (hit) return true;
    }
    return false;
  };
  return go(0);
}

}  // namespace oracle
