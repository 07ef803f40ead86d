#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "treeminor/canonical.hpp"
#include "treeminor/constructions.hpp"
#include "treeminor/decide.hpp"
#include "treeminor/errors.hpp"

using namespace treeminor;

TEST_CASE("generators") {
  CHECK(path_tree(5).edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(path_tree(1).size() == 1);
  std::vector<int> ones{1, 1, 1};
  CHECK(spider_tree(ones) == star_tree(3));
  std::vector<int> cat{0, 2, 1};
  Tree c = caterpillar_tree(cat);
  CHECK(c.size() == 6);
  CHECK(c.degree(1) == 4);
  CHECK(random_prufer_tree(8, 42) == random_prufer_tree(8, 42));
  CHECK(random_prufer_tree(8, 42).size() == 8);
  std::vector<int> seq{3, 3, 3};
  CHECK(canonical_code(prufer_decode(seq)) == canonical_code(star_tree(4)));
  std::vector<int> p{1, 2};
  CHECK(prufer_decode(p) == path_tree(4));
}

TEST_CASE("prufer decoding matches the reference decoder") {
  for (int n = 3; n <= 6; ++n) {
    std::vector<int> seq(n - 2, 0);
    while (true) {
      CHECK(prufer_decode(seq) == oracle::decode(seq));
      int i = n - 3;
      while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
      if (i < 0) break;
      ++seq[i];
    }
  }
}

TEST_CASE("gen dispatch and errors") {
  std::vector<int> five{5};
  CHECK(gen(Family::Path, five) == path_tree(5));
  std::vector<int> three{3};
  CHECK(gen(Family::Star, three) == star_tree(3));
  CHECK(parse_family("random-prufer") == Family::RandomPrufer);
  CHECK(parse_family("prufer") == Family::RandomPrufer);
  CHECK_FALSE(parse_family("binary").has_value());

  std::vector<int> none, zero{0}, bad_leg{2, 0}, seeded{6, 1}, negative{-1};
  CHECK_THROWS_AS(gen(Family::Path, none), BadParams);
  CHECK_THROWS_AS(gen(Family::Path, zero), BadParams);
  CHECK_THROWS_AS(gen(Family::Spider, bad_leg), BadParams);
  CHECK_THROWS_AS(gen(Family::Spider, none), BadParams);
  CHECK_THROWS_AS(gen(Family::RandomPrufer, five), BadParams);
  CHECK_THROWS_AS(gen(Family::Star, negative), BadParams);
  CHECK(gen(Family::RandomPrufer, seeded).size() == 6);
}

TEST_CASE("free tree counts") {
  const int expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) {
    auto trees = enumerate_free_trees(n);
    CHECK(static_cast<int>(trees.size()) == expected[n - 1]);
    std::set<CanonicalCode> codes;
    for (const auto& t : trees) {
      CHECK(t.size() == n);
      codes.insert(canonical_code(t));
    }
    CHECK(codes.size() == trees.size());
  }
  CHECK(enumerate_free_trees(1)[0] == Tree());
  CHECK_THROWS_AS(enumerate_free_trees(0), BadParams);
  CHECK_THROWS_AS(enumerate_free_trees(11), SizeLimitExceeded);
}

TEST_CASE("rooted tree counts") {
  const int expected[] = {1, 1, 2, 4, 9, 20, 48, 115};
  for (int n = 1; n <= 8; ++n) {
    auto trees = enumerate_rooted_trees(n);
    CHECK(static_cast<int>(trees.size()) == expected[n - 1]);
    std::set<CanonicalCode> codes;
    for (const auto& t : trees) codes.insert(canonical_code(t));
    CHECK(codes.size() == trees.size());
  }
}

TEST_CASE("enumeration counts agree with brute-force permutation classes") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(oracle::free_class_count(n) == static_cast<int>(enumerate_free_trees(n).size()));
    CHECK(oracle::rooted_class_count(n) == static_cast<int>(enumerate_rooted_trees(n).size()));
  }
}

TEST_CASE("enumeration is deterministic") {
  CHECK(enumerate_free_trees(7) == enumerate_free_trees(7));
  CHECK(enumerate_rooted_trees(6) == enumerate_rooted_trees(6));
}

TEST_CASE("child type multisets") {
  auto k13 = child_type_multiset(RootedTree(star_tree(3), 0));
  REQUIRE(k13.size() == 1);
  CHECK(k13.begin()->first.str() == "()");
  CHECK(k13.begin()->second == 3);

  auto p3 = child_type_multiset(RootedTree(path_tree(3), 0));
  REQUIRE(p3.size() == 1);
  CHECK(p3.begin()->first.str() == "(())");
  CHECK(p3.begin()->second == 1);

  CHECK(child_type_multiset(RootedTree()).empty());

  // Same shape, children listed in a different id order.
  Tree a(5, {{0, 1}, {1, 2}, {0, 3}, {0, 4}});
  Tree b(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  CHECK(child_type_multiset(RootedTree(a, 0)) == child_type_multiset(RootedTree(b, 0)));

  for (int n = 1; n <= 6; ++n) {
    for (const auto& rt : enumerate_rooted_trees(n)) {
      int total = 0;
      for (const auto& [code, count] : child_type_multiset(rt)) total += count;
      CHECK(total == static_cast<int>(rt.children(rt.root()).size()));
    }
  }
}

TEST_CASE("graft") {
  RootedTree p2(path_tree(2), 0);
  RootedTree g = graft(RootedTree(path_tree(3), 0), 2, p2);
  CHECK(g.size() == 5);
  CHECK(g.root() == 0);
  CHECK(g.tree() == path_tree(5));
  CHECK_THROWS_AS(graft(p2, 5, p2), VertexOutOfRange);
}

TEST_CASE("replace_child_subtree") {
  RootedTree k13(star_tree(3), 0);
  RootedTree leaf;
  CHECK(is_isomorphic(replace_child_subtree(k13, 1, leaf), k13));

  RootedTree p2(path_tree(2), 0);
  RootedTree replaced = replace_child_subtree(k13, 2, p2);
  std::vector<int> legs{1, 1, 2};
  CHECK(canonical_code(replaced) == canonical_code(RootedTree(spider_tree(legs), 0)));

  // Round trip: find the new child and swap the leaf back.
  Vertex grown = -1;
  for (Vertex c : replaced.children(replaced.root())) {
    if (!replaced.children(c).empty()) grown = c;
  }
  REQUIRE(grown >= 0);
  CHECK(is_isomorphic(replace_child_subtree(replaced, grown, leaf), k13));

  CHECK_THROWS_AS(replace_child_subtree(k13, 0, leaf), NotAChild);
  RootedTree p3(path_tree(3), 0);
  CHECK_THROWS_AS(replace_child_subtree(p3, 2, leaf), NotAChild);
}

TEST_CASE("attach_copies") {
  RootedTree k13(star_tree(3), 0);
  CanonicalCode leaf_code("()");
  RootedTree leaf;
  CHECK(is_isomorphic(attach_copies(k13, leaf_code, leaf, 3), k13));
  CHECK(attach_copies(k13, leaf_code, leaf, 0).size() == 1);
  CHECK(canonical_code(attach_copies(k13, leaf_code, leaf, 5)) ==
        canonical_code(RootedTree(star_tree(5), 0)));
  CHECK(canonical_code(attach_copies(k13, leaf_code, leaf, 1)) == CanonicalCode("(())"));
}

TEST_CASE("attach_copies fidelity on all rooted trees up to six vertices") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& rt : enumerate_rooted_trees(n)) {
      for (const auto& [beta, eta] : child_type_multiset(rt)) {
        RootedTree k = tree_from_code(beta);
        CHECK(oracle::isomorphic(attach_copies(rt, beta, k, eta), rt));
        std::set<CanonicalCode> seen;
        for (int lambda = 0; lambda <= eta + 3; ++lambda) {
          RootedTree t = attach_copies(rt, beta, k, lambda);
          CHECK(child_type_multiset(t).count(beta) == (lambda > 0 ? 1u : 0u));
          seen.insert(canonical_code(t));
        }
        CHECK(seen.size() == static_cast<std::size_t>(eta + 4));
      }
    }
  }
}

TEST_CASE("attach_copies gives a monotone family under rooted minors") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& rt : enumerate_rooted_trees(n)) {
      for (const auto& [beta, eta] : child_type_multiset(rt)) {
        RootedTree k = tree_from_code(beta);
        for (int lambda = 0; lambda < eta + 2; ++lambda) {
          RootedTree small = attach_copies(rt, beta, k, lambda);
          RootedTree big = attach_copies(rt, beta, k, lambda + 1);
          CHECK(decide(small, big, Relation::Minor).has_value());
          CHECK_FALSE(decide(big, small, Relation::Minor).has_value());
        }
      }
    }
  }
}
