#pragma once

#include <optional>

#include "treeminor/model.hpp"
#include "treeminor/relation.hpp"
#include "treeminor/tree.hpp"

namespace treeminor {

// Decides pattern <=_r host and returns a witness model when it holds. The
// witness passes check_witness(m, r). Deterministic: all searches run in
// ascending vertex order.
//
// Unrooted deciders root the pattern at vertex 0 and try every host vertex
// as the image (or the top of the branch set) of that root.
std::optional<MinorModel> decide(const Tree& pattern, const Tree& host, Relation r);
std::optional<MinorModel> decide(const RootedTree& pattern, const RootedTree& host, Relation r);

bool decide_mutual(const Tree& a, const Tree& b, Relation r);
bool decide_mutual(const RootedTree& a, const RootedTree& b, Relation r);

}  // namespace treeminor
