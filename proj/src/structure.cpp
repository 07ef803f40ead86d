#include "treeminor/structure.hpp"

#include <algorithm>
#include <numeric>

#include "treeminor/canonical.hpp"

namespace treeminor {

bool FixedElement::stabilized_by(const std::vector<Vertex>& perm) const {
  if (kind == Kind::Vertex) return perm[u] == u;
  return make_edge(perm[u], perm[v]) == Edge{u, v};
}

std::string FixedElement::to_string() const {
  if (kind == Kind::Vertex) return "vertex " + std::to_string(u);
  return "edge " + std::to_string(u) + " " + std::to_string(v);
}

FixedElement center(const Tree& t) {
  const int n = t.size();
  if (n == 1) return FixedElement::vertex(0);
  std::vector<int> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex w : t.neighbors(leaf)) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  if (layer.size() == 1) return FixedElement::vertex(layer[0]);
  return FixedElement::edge(layer[0], layer[1]);
}

std::vector<Vertex> closure(const Tree& t, std::vector<Vertex> a) {
  for (Vertex v : a) require_vertex(t, v);
  if (a.empty()) return {};
  const int n = t.size();
  std::vector<char> anchored(n, 0);
  for (Vertex v : a) anchored[v] = 1;

  std::vector<char> alive(n, 1);
  std::vector<int> deg(n);
  std::vector<Vertex> strip;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1 && !anchored[v]) strip.push_back(v);
  }
  while (!strip.empty()) {
    Vertex v = strip.back();
    strip.pop_back();
    alive[v] = 0;
    for (Vertex w : t.neighbors(v)) {
      if (alive[w] && --deg[w] == 1 && !anchored[w]) strip.push_back(w);
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> branch_vertices(const Tree& t) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < t.size(); ++v) {
    if (t.degree(v) > 2) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> infinite_degree_vertices(const Tree&) { return {}; }

namespace {

// Enumerates rooted isomorphisms by pairing vertices top-down: once v is
// matched with w, the children of v are matched to the children of w in
// every code-respecting way.
class IsomorphismEnumerator {
 public:
  IsomorphismEnumerator(const RootedTree& a, const RootedTree& b)
      : a_(a), b_(b), code_a_(subtree_codes(a)), code_b_(subtree_codes(b)) {}

  std::vector<std::vector<Vertex>> run() {
    if (a_.size() != b_.size() || code_a_[a_.root()] != code_b_[b_.root()]) return {};
    image_.assign(a_.size(), -1);
    image_[a_.root()] = b_.root();
    pending_.push_back({a_.root(), b_.root()});
    expand(0);
    return std::move(found_);
  }

 private:
  void expand(std::size_t index) {
    if (index == pending_.size()) {
      found_.push_back(image_);
      return;
    }
    auto [v, w] = pending_[index];
    auto cv = a_.children(v);
    auto cw = b_.children(w);
    std::vector<char> used(cw.size(), 0);
    assign_children(index, cv, cw, used, 0);
  }

  void assign_children(std::size_t index, std::span<const Vertex> cv, std::span<const Vertex> cw,
                       std::vector<char>& used, std::size_t i) {
    if (i == cv.size()) {
      expand(index + 1);
      return;
    }
    for (std::size_t j = 0; j < cw.size(); ++j) {
      if (used[j] || code_a_[cv[i]] != code_b_[cw[j]]) continue;
      used[j] = 1;
      image_[cv[i]] = cw[j];
      pending_.push_back({cv[i], cw[j]});
      assign_children(index, cv, cw, used, i + 1);
      pending_.pop_back();
      image_[cv[i]] = -1;
      used[j] = 0;
    }
  }

  const RootedTree& a_;
  const RootedTree& b_;
  std::vector<CanonicalCode> code_a_;
  std::vector<CanonicalCode> code_b_;
  std::vector<Vertex> image_;
  std::vector<std::pair<Vertex, Vertex>> pending_;
  std::vector<std::vector<Vertex>> found_;
};

}  // namespace

std::vector<std::vector<Vertex>> rooted_isomorphisms(const RootedTree& a, const RootedTree& b) {
  return IsomorphismEnumerator(a, b).run();
}

std::vector<std::vector<Vertex>> automorphisms(const Tree& t) {
  // Every automorphism preserves the center, so rooting there suffices; a
  // central edge may additionally be flipped.
  FixedElement c = center(t);
  RootedTree from(t, c.u);
  auto group = rooted_isomorphisms(from, from);
  if (c.kind == FixedElement::Kind::Edge) {
    auto flips = rooted_isomorphisms(from, RootedTree(t, c.v));
    group.insert(group.end(), flips.begin(), flips.end());
  }
  std::vector<Vertex> identity(t.size());
  std::iota(identity.begin(), identity.end(), 0);
  auto id = std::find(group.begin(), group.end(), identity);
  std::rotate(group.begin(), id, id + 1);
  return group;
}

FixedElement fixed_element(const Tree& t) {
  // Descend T -> closure(inf(T)) -> ... while the layer stays nonempty.
  std::vector<Vertex> layer(t.size());
  std::iota(layer.begin(), layer.end(), 0);
  for (;;) {
    auto sub = induced_subtree(t, layer);
    std::vector<Vertex> next;
    for (Vertex v : infinite_degree_vertices(sub.tree)) next.push_back(sub.origin[v]);
    next = closure(t, std::move(next));
    if (next.empty() || next == layer) break;
    layer = std::move(next);
  }
  auto sub = induced_subtree(t, layer);
  FixedElement c = center(sub.tree);
  if (c.kind == FixedElement::Kind::Vertex) return FixedElement::vertex(sub.origin[c.u]);
  return FixedElement::edge(sub.origin[c.u], sub.origin[c.v]);
}

}  // namespace treeminor
