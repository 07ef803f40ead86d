#include "treeminor/decide.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

namespace treeminor {
namespace {

// Kuhn's augmenting paths. Left vertices are tried in order and each scans
// the right side in order, so the result is deterministic. Returns the
// right partner of every left vertex, or nullopt if some left vertex stays
// unmatched.
std::optional<std::vector<int>> saturating_matching(int left, int right,
                                                    const std::function<bool(int, int)>& ok) {
  if (left > right) return std::nullopt;
  std::vector<int> owner(right, -1);
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int i) {
    for (int j = 0; j < right; ++j) {
      if (seen[j] || !ok(i, j)) continue;
      seen[j] = 1;
      if (owner[j] < 0 || augment(owner[j])) {
        owner[j] = i;
        return true;
      }
    }
    return false;
  };
  for (int i = 0; i < left; ++i) {
    seen.assign(right, 0);
    if (!augment(i)) return std::nullopt;
  }
  std::vector<int> partner(left, -1);
  for (int j = 0; j < right; ++j) {
    if (owner[j] >= 0) partner[owner[j]] = j;
  }
  return partner;
}

std::vector<Vertex> postorder(const RootedTree& t) {
  return {t.preorder().rbegin(), t.preorder().rend()};
}

template <typename T>
using Table = std::vector<std::vector<T>>;

MinorModel empty_model(const RootedTree& pattern, const RootedTree& host, bool rooted) {
  MinorModel m{pattern.tree(), host.tree(), std::nullopt, std::nullopt,
               std::vector<std::vector<Vertex>>(pattern.size())};
  if (rooted) {
    m.pattern_root = pattern.root();
    m.host_root = host.root();
  }
  return m;
}

// ---------------------------------------------------------------------------
// Embedding: image[v] = x with the children of v sent to distinct children
// of x.

class EmbedSolver {
 public:
  EmbedSolver(const RootedTree& pattern, const RootedTree& host)
      : pattern_(pattern), host_(host), fits_(pattern.size(), std::vector<char>(host.size(), 0)) {
    for (Vertex v : postorder(pattern_)) {
      for (Vertex x : postorder(host_)) fits_[v][x] = match(v, x).has_value();
    }
  }

  bool fits(Vertex v, Vertex x) const { return fits_[v][x]; }

  void build(Vertex v, Vertex x, MinorModel& m) const {
    m.branch_sets[v] = {x};
    auto pc = pattern_.children(v);
    auto hc = host_.children(x);
    auto partner = *match(v, x);
    for (std::size_t i = 0; i < pc.size(); ++i) build(pc[i], hc[partner[i]], m);
  }

 private:
  std::optional<std::vector<int>> match(Vertex v, Vertex x) const {
    auto pc = pattern_.children(v);
    auto hc = host_.children(x);
    return saturating_matching(static_cast<int>(pc.size()), static_cast<int>(hc.size()),
                               [&](int i, int j) { return fits_[pc[i]][hc[j]] != 0; });
  }

  const RootedTree& pattern_;
  const RootedTree& host_;
  Table<char> fits_;
};

// ---------------------------------------------------------------------------
// Topological minor: anchor[v] = a with the children of v placed in distinct
// child subtrees of a, each at any depth. below_[v][y] is the smallest
// vertex of the host subtree at y that can anchor v, or -1.

class TopoSolver {
 public:
  TopoSolver(const RootedTree& pattern, const RootedTree& host)
      : pattern_(pattern),
        host_(host),
        anchors_(pattern.size(), std::vector<char>(host.size(), 0)),
        below_(pattern.size(), std::vector<Vertex>(host.size(), -1)) {
    for (Vertex v : postorder(pattern_)) {
      for (Vertex x : postorder(host_)) {
        anchors_[v][x] = match(v, x, -1).has_value();
        Vertex best = anchors_[v][x] ? x : -1;
        for (Vertex y : host_.children(x)) {
          Vertex cand = below_[v][y];
          if (cand >= 0 && (best < 0 || cand < best)) best = cand;
        }
        below_[v][x] = best;
      }
    }
  }

  bool anchors(Vertex v, Vertex a) const { return anchors_[v][a]; }

  // Places v at `a` with every child below a; `skip` is a child of v that is
  // placed elsewhere by the caller.
  bool place(Vertex v, Vertex a, Vertex skip, std::vector<Vertex>& anchor) const {
    auto partner = match(v, a, skip);
    if (!partner) return false;
    anchor[v] = a;
    auto pc = pattern_.children(v);
    auto hc = host_.children(a);
    std::size_t k = 0;
    for (Vertex c : pc) {
      if (c == skip) continue;
      Vertex y = hc[(*partner)[k++]];
      place(c, below_[c][y], -1, anchor);
    }
    return true;
  }

 private:
  std::optional<std::vector<int>> match(Vertex v, Vertex a, Vertex skip) const {
    std::vector<Vertex> pc;
    for (Vertex c : pattern_.children(v)) {
      if (c != skip) pc.push_back(c);
    }
    auto hc = host_.children(a);
    return saturating_matching(static_cast<int>(pc.size()), static_cast<int>(hc.size()),
                               [&](int i, int j) { return below_[pc[i]][hc[j]] >= 0; });
  }

  const RootedTree& pattern_;
  const RootedTree& host_;
  Table<char> anchors_;
  Table<Vertex> below_;
};

// Turns subdivision anchors into branch sets. The interior of the host path
// realizing pattern edge (p, c) joins c if deg(c) <= 2, else p if
// deg(p) <= 2, else c; the edge to `up_child` always gives its interior to
// the parent (the root), whose branch set then reaches over the top.
MinorModel model_from_anchors(const RootedTree& pattern, const RootedTree& host,
                              const std::vector<Vertex>& anchor, Vertex up_child, bool rooted) {
  MinorModel m = empty_model(pattern, host, rooted);
  const Tree& pt = pattern.tree();
  for (Vertex v = 0; v < pattern.size(); ++v) m.branch_sets[v].push_back(anchor[v]);
  for (Vertex c = 0; c < pattern.size(); ++c) {
    Vertex p = pattern.parent(c);
    if (p < 0) continue;
    auto path = tree_path(host.tree(), anchor[p], anchor[c]);
    Vertex owner = c;
    if (c != up_child && pt.degree(c) > 2 && pt.degree(p) <= 2) owner = p;
    if (c == up_child) owner = p;
    auto& set = m.branch_sets[owner];
    set.insert(set.end(), path.begin() + 1, path.end() - 1);
  }
  for (auto& set : m.branch_sets) std::sort(set.begin(), set.end());
  return m;
}

// ---------------------------------------------------------------------------
// Minor: subset DP over the children of each pattern vertex.
//
// For pattern vertex v with children c_0..c_{k-1} and host vertex y:
//   inside_[v][y]  masks S such that the children in S can be modeled in the
//                  host subtree at y while y itself belongs to mu(v);
//   reach_[v][y]   inside_[v][y] together with {} and {c_i} for every c_i
//                  whose branch set can have its top exactly at y.
// mu(v) can have its top at x iff the full mask is in inside_[v][x].

class MinorSolver {
 public:
  using Mask = std::uint32_t;
  using MaskSet = std::vector<char>;

  MinorSolver(const RootedTree& pattern, const RootedTree& host)
      : pattern_(pattern),
        host_(host),
        inside_(pattern.size(), std::vector<MaskSet>(host.size())),
        reach_(pattern.size(), std::vector<MaskSet>(host.size())) {
    for (Vertex v : postorder(pattern_)) {
      const Mask full = full_mask(v);
      auto pc = pattern_.children(v);
      for (Vertex y : postorder(host_)) {
        MaskSet acc = unit(full);
        for (Vertex z : host_.children(y)) acc = combine(acc, reach_[v][z], full);
        MaskSet reach = acc;
        reach[0] = 1;
        for (std::size_t i = 0; i < pc.size(); ++i) {
          if (top(pc[i], y)) reach[Mask{1} << i] = 1;
        }
        inside_[v][y] = std::move(acc);
        reach_[v][y] = std::move(reach);
      }
    }
  }

  bool top(Vertex v, Vertex x) const { return inside_[v][x][full_mask(v)] != 0; }

  void build_top(Vertex v, Vertex x, MinorModel& m) const {
    m.branch_sets[v].push_back(x);
    split(v, x, full_mask(v), m);
  }

 private:
  Mask full_mask(Vertex v) const {
    return (Mask{1} << pattern_.children(v).size()) - 1;
  }

  static MaskSet unit(Mask full) {
    MaskSet s(std::size_t{full} + 1, 0);
    s[0] = 1;
    return s;
  }

  // {a | b : a in lhs, b in rhs, a & b == 0}
  static MaskSet combine(const MaskSet& lhs, const MaskSet& rhs, Mask full) {
    MaskSet out(lhs.size(), 0);
    for (Mask a = 0; a <= full; ++a) {
      if (!lhs[a]) continue;
      const Mask rest = full & ~a;
      for (Mask b = rest;; b = (b - 1) & rest) {
        if (rhs[b]) out[a | b] = 1;
        if (b == 0) break;
      }
    }
    return out;
  }

  // y is already in mu(v); distributes the children in `target` over the
  // host children of y.
  void split(Vertex v, Vertex y, Mask target, MinorModel& m) const {
    const Mask full = full_mask(v);
    auto hc = host_.children(y);
    std::vector<MaskSet> prefix{unit(full)};
    for (Vertex z : hc) prefix.push_back(combine(prefix.back(), reach_[v][z], full));

    for (std::size_t i = hc.size(); i-- > 0;) {
      const Vertex z = hc[i];
      for (Mask part = 0; part <= target; ++part) {
        if ((part & ~target) || !reach_[v][z][part] || !prefix[i][target & ~part]) continue;
        assign(v, z, part, m);
        target &= ~part;
        break;
      }
    }
  }

  void assign(Vertex v, Vertex z, Mask part, MinorModel& m) const {
    if (part == 0) return;
    if (std::popcount(part) == 1) {
      Vertex c = pattern_.children(v)[std::countr_zero(part)];
      if (top(c, z)) {
        build_top(c, z, m);
        return;
      }
    }
    m.branch_sets[v].push_back(z);
    split(v, z, part, m);
  }

  const RootedTree& pattern_;
  const RootedTree& host_;
  std::vector<std::vector<MaskSet>> inside_;
  std::vector<std::vector<MaskSet>> reach_;
};

MinorModel finish(MinorModel m) {
  for (auto& set : m.branch_sets) std::sort(set.begin(), set.end());
  return m;
}

// Looks for a witness with the pattern root mapped into the host root's
// branch (unrooted search) or anywhere (rooted search).
std::optional<MinorModel> solve(const RootedTree& pattern, const RootedTree& host, Relation r,
                                bool rooted) {
  std::vector<Vertex> candidates;
  if (rooted) {
    for (Vertex x = 0; x < host.size(); ++x) candidates.push_back(x);
  } else {
    candidates.push_back(host.root());
  }
  const Vertex pr = pattern.root();

  switch (r) {
    case Relation::Embed: {
      EmbedSolver solver(pattern, host);
      for (Vertex x : candidates) {
        if (!solver.fits(pr, x)) continue;
        MinorModel m = empty_model(pattern, host, rooted);
        solver.build(pr, x, m);
        return m;
      }
      return std::nullopt;
    }
    case Relation::TopoMinor: {
      TopoSolver solver(pattern, host);
      std::vector<Vertex> anchor(pattern.size(), -1);
      for (Vertex a : candidates) {
        if (solver.anchors(pr, a) && solver.place(pr, a, -1, anchor)) {
          return model_from_anchors(pattern, host, anchor, -1, rooted);
        }
      }
      if (!rooted) return std::nullopt;
      // The root's branch set may reach over its anchor to host one child
      // in a part of the host incomparable with the anchor.
      for (Vertex a : candidates) {
        for (Vertex up : pattern.children(pr)) {
          for (Vertex z = 0; z < host.size(); ++z) {
            if (host.precedes(a, z) || host.precedes(z, a) || !solver.anchors(up, z)) continue;
            std::fill(anchor.begin(), anchor.end(), -1);
            if (!solver.place(pr, a, up, anchor)) continue;
            solver.place(up, z, -1, anchor);
            return model_from_anchors(pattern, host, anchor, up, rooted);
          }
        }
      }
      return std::nullopt;
    }
    case Relation::Minor: {
      MinorSolver solver(pattern, host);
      for (Vertex x : candidates) {
        if (!solver.top(pr, x)) continue;
        MinorModel m = empty_model(pattern, host, rooted);
        solver.build_top(pr, x, m);
        return finish(std::move(m));
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<MinorModel> decide(const Tree& pattern, const Tree& host, Relation r) {
  if (pattern.size() > host.size()) return std::nullopt;
  RootedTree rooted_pattern(pattern, 0);
  for (Vertex h = 0; h < host.size(); ++h) {
    if (auto m = solve(rooted_pattern, RootedTree(host, h), r, false)) return m;
  }
  return std::nullopt;
}

std::optional<MinorModel> decide(const RootedTree& pattern, const RootedTree& host, Relation r) {
  if (pattern.size() > host.size()) return std::nullopt;
  return solve(pattern, host, r, true);
}

bool decide_mutual(const Tree& a, const Tree& b, Relation r) {
  return decide(a, b, r).has_value() && decide(b, a, r).has_value();
}

bool decide_mutual(const RootedTree& a, const RootedTree& b, Relation r) {
  return decide(a, b, r).has_value() && decide(b, a, r).has_value();
}

}  // namespace treeminor
