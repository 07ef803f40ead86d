#include "treeminor/canonical.hpp"

#include <algorithm>

#include "treeminor/errors.hpp"
#include "treeminor/structure.hpp"

namespace treeminor {

std::vector<CanonicalCode> subtree_codes(const RootedTree& rt) {
  std::vector<std::string> code(rt.size());
  const auto& order = rt.preorder();
  std::vector<const std::string*> parts;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    parts.clear();
    for (Vertex c : rt.children(v)) parts.push_back(&code[c]);
    std::sort(parts.begin(), parts.end(), [](auto* a, auto* b) { return *a < *b; });
    std::string& s = code[v];
    s.push_back('(');
    for (auto* p : parts) s += *p;
    s.push_back(')');
  }
  std::vector<CanonicalCode> out;
  out.reserve(code.size());
  for (auto& s : code) out.emplace_back(std::move(s));
  return out;
}

CanonicalCode canonical_code(const RootedTree& rt) { return subtree_codes(rt)[rt.root()]; }

CanonicalCode canonical_code(const Tree& t) {
  FixedElement c = center(t);
  if (c.kind == FixedElement::Kind::Vertex) return canonical_code(RootedTree(t, c.u));
  return std::min(canonical_code(RootedTree(t, c.u)), canonical_code(RootedTree(t, c.v)));
}

bool is_isomorphic(const Tree& a, const Tree& b) {
  return a.size() == b.size() && a.edges().size() == b.edges().size() &&
         canonical_code(a) == canonical_code(b);
}

bool is_isomorphic(const RootedTree& a, const RootedTree& b) {
  return a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

RootedTree tree_from_code(const CanonicalCode& code) {
  const std::string& s = code.str();
  if (s.empty()) throw ParseError("empty canonical code");
  std::vector<Edge> edges;
  std::vector<Vertex> open;
  Vertex next = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') {
      if (open.empty() && next > 0) throw ParseError("canonical code has more than one root");
      if (!open.empty()) edges.emplace_back(open.back(), next);
      open.push_back(next++);
    } else if (s[i] == ')') {
      if (open.empty()) throw ParseError("unbalanced canonical code");
      open.pop_back();
    } else {
      throw ParseError(std::string("invalid character '") + s[i] + "' in canonical code");
    }
  }
  if (!open.empty()) throw ParseError("unbalanced canonical code");
  return RootedTree(Tree(next, std::move(edges)), 0);
}

}  // namespace treeminor
