#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "treeminor/tree.hpp"

namespace treeminor {

// One record of the text tree format:
//
//   tree <n>            or   rtree <n> <root>
//   <u> <v>             (n-1 edge lines)
//
// Tokens are whitespace separated; `#` starts a comment running to the end
// of the line.
struct TreeRecord {
  Tree tree;
  std::optional<Vertex> root;

  bool rooted() const { return root.has_value(); }
  RootedTree as_rooted() const;
};

std::vector<TreeRecord> parse_records(std::istream& in);
std::vector<TreeRecord> parse_records(const std::string& text);

// Exactly one record, or ParseError.
TreeRecord parse_record(std::istream& in);
TreeRecord parse_record(const std::string& text);

std::string format_tree(const Tree& t);
std::string format_tree(const RootedTree& rt);

}  // namespace treeminor
