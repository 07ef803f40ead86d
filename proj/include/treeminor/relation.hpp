#pragma once

#include <optional>
#include <string_view>

namespace treeminor {

// Embed (<=): edge and vertex removal.
// TopoMinor (<=#): edge removal, vertex removal, degree-2 dissolution.
// Minor (<=*): edge removal, edge contraction, vertex removal.
enum class Relation { Embed, TopoMinor, Minor };

struct RelationKind {
  Relation relation = Relation::Minor;
  bool rooted = false;

  friend bool operator==(const RelationKind&, const RelationKind&) = default;
};

inline constexpr Relation kAllRelations[] = {Relation::Embed, Relation::TopoMinor,
                                             Relation::Minor};

// "embed", "topo", "minor"
std::string_view relation_name(Relation r);
std::optional<Relation> parse_relation(std::string_view name);

}  // namespace treeminor
