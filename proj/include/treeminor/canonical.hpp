#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "treeminor/tree.hpp"

namespace treeminor {

// AHU canonical form: a balanced parenthesis string, one "(...)" per
// vertex, children's codes sorted lexicographically. Rooted trees compare
// equal iff rooted-isomorphic; free-tree codes (rooted at the center, the
// lexicographic minimum over both ends of a central edge) compare equal iff
// the trees are isomorphic.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string text) : text_(std::move(text)) {}

  const std::string& str() const { return text_; }
  // Number of vertices encoded.
  int vertex_count() const { return static_cast<int>(text_.size() / 2); }

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend std::ostream& operator<<(std::ostream& os, const CanonicalCode& c) {
    return os << c.text_;
  }

 private:
  std::string text_;
};

CanonicalCode canonical_code(const Tree& t);
CanonicalCode canonical_code(const RootedTree& rt);

// Code of every rooted subtree (T_v, v), indexed by v.
std::vector<CanonicalCode> subtree_codes(const RootedTree& rt);

bool is_isomorphic(const Tree& a, const Tree& b);
bool is_isomorphic(const RootedTree& a, const RootedTree& b);

// Decodes a well-formed code into a rooted tree labeled in preorder (root 0).
// Throws ParseError on malformed input.
RootedTree tree_from_code(const CanonicalCode& code);

}  // namespace treeminor

template <>
struct std::hash<treeminor::CanonicalCode> {
  std::size_t operator()(const treeminor::CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.str());
  }
};
