#include "treeminor/relation.hpp"

namespace treeminor {

std::string_view relation_name(Relation r) {
  switch (r) {
    case Relation::Embed:
      return "embed";
    case Relation::TopoMinor:
      return "topo";
    case Relation::Minor:
      return "minor";
  }
  return "?";
}

std::optional<Relation> parse_relation(std::string_view name) {
  for (Relation r : kAllRelations) {
    if (relation_name(r) == name) return r;
  }
  return std::nullopt;
}

}  // namespace treeminor
