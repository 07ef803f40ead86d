#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "treeminor/canonical.hpp"
#include "treeminor/tree.hpp"

namespace treeminor {

Tree path_tree(int n);
// K_{1,leaves}; the hub is vertex 0.
Tree star_tree(int leaves);
// Hub 0 with one path of each given length (>= 1) hanging off it.
Tree spider_tree(std::span<const int> legs);
// Spine 0 - 1 - ... - (k-1); spine vertex i carries leaves[i] pendant leaves.
Tree caterpillar_tree(std::span<const int> leaves);
// Uniform labeled tree decoded from a Prufer sequence drawn from mt19937_64.
Tree random_prufer_tree(int n, std::uint64_t seed);
// Decodes an explicit Prufer sequence over {0..n-1}, n = seq.size() + 2.
Tree prufer_decode(std::span<const int> seq);

enum class Family { Path, Star, Spider, Caterpillar, RandomPrufer };

std::optional<Family> parse_family(std::string_view name);

// Parameters per family: Path {n}; Star {leaves}; Spider {legs...};
// Caterpillar {leaves per spine vertex...}; RandomPrufer {n, seed}.
// Throws BadParams.
Tree gen(Family family, std::span<const int> params);

// One representative per isomorphism class, sorted by canonical code. The
// representatives are labeled in preorder from the (lower) center vertex.
// Throws BadParams for n < 1 and SizeLimitExceeded for n > cap.
std::vector<Tree> enumerate_free_trees(int n, int cap = 10);
std::vector<RootedTree> enumerate_rooted_trees(int n, int cap = 10);

// f_T: canonical code of (T_v, v) -> number of root children v with that
// code.
using ChildTypeMultiset = std::map<CanonicalCode, int>;

ChildTypeMultiset child_type_multiset(const RootedTree& rt);

// Joins a copy of `s` to vertex `at` by an edge from s's root. The copy's
// vertices get ids n, n+1, ... in the order of s's ids.
RootedTree graft(const RootedTree& rt, Vertex at, const RootedTree& s);

// Excises (T_v, v) for the root child v and attaches `s` at the root.
// Throws NotAChild.
RootedTree replace_child_subtree(const RootedTree& rt, Vertex v, const RootedTree& s);

// T'_count: removes every root child whose subtree has code `beta`, then
// attaches `count` copies of `k` at the root.
RootedTree attach_copies(const RootedTree& rt, const CanonicalCode& beta, const RootedTree& k,
                         int count);

}  // namespace treeminor
