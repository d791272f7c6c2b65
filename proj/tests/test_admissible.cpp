#include <doctest.h>

#include <set>

#include "admissible.hpp"

using namespace treespace;

namespace {
Node N(std::initializer_list<int> bits) { return Node::from_bits(bits); }
}  // namespace

TEST_CASE("maximal admissible sets at depth one, modified tree") {
  auto sets = enumerate_admissible_sets(TreeKind::ModifiedBinary, 1);
  std::set<NodeSet> got;
  for (const auto& a : sets) got.insert(a.nodes);
  std::set<NodeSet> expected{{N({0})}, {N({1})}, {N({0}), N({1})}};
  CHECK(got == expected);
}

TEST_CASE("rooted tree truncated branch count is 2^d") {
  for (std::uint32_t d : {1u, 2u, 3u, 4u}) {
    auto sets = enumerate_admissible_sets(TreeKind::RootedBinary, d);
    CHECK(sets.size() == (1u << d));
    for (const auto& a : sets) {
      CHECK(a.kind == AdmissibleKind::BranchSubset);
      CHECK(a.nodes.size() == d + 1);  // root included
      CHECK(is_chain(a.nodes));
    }
  }
}

TEST_CASE("lambda segment count at depth two") {
  auto sets = enumerate_admissible_sets(TreeKind::ModifiedBinary, 2);
  std::vector<NodeSet> lambdas;
  for (const auto& a : sets)
    if (a.kind == AdmissibleKind::LambdaSegmentSubset) lambdas.push_back(a.nodes);
  REQUIRE(lambdas.size() == 3);
  std::set<NodeSet> got(lambdas.begin(), lambdas.end());
  std::set<NodeSet> expected{{N({0}), N({1})},
                             {N({0}), N({0, 0}), N({0, 1})},
                             {N({1}), N({1, 0}), N({1, 1})}};
  CHECK(got == expected);
}

TEST_CASE("lambda segment membership") {
  CHECK(is_lambda_segment_subset({N({0}), N({1})}));
  CHECK(is_lambda_segment_subset({N({0}), N({0, 0}), N({0, 1})}));
  CHECK(is_lambda_segment_subset({N({0}), N({0, 0, 1})}));
  CHECK_FALSE(is_lambda_segment_subset({N({0}), N({1}), N({1, 0})}));
  CHECK_FALSE(is_lambda_segment_subset({N({0, 0}), N({0, 1, 0})}));
  CHECK_FALSE(is_lambda_segment_subset({N({0, 0}), N({0, 1}), N({1, 0})}));
}

TEST_CASE("antichain checks") {
  CHECK(is_antichain({N({0}), N({1, 0})}));
  CHECK_FALSE(is_antichain({N({0}), N({0, 1})}));
  CHECK(is_antichain({}));
}

TEST_CASE("unit antichains") {
  // Any non-empty antichain works in the rooted tree.
  auto rooted = enumerate_unit_antichains(TreeKind::RootedBinary, 1);
  std::set<NodeSet> got(rooted.begin(), rooted.end());
  std::set<NodeSet> expected{{Node::root()}, {N({0})}, {N({1})}, {N({0}), N({1})}};
  CHECK(got == expected);

  // The sibling pair is excluded in the modified tree.
  auto modified = enumerate_unit_antichains(TreeKind::ModifiedBinary, 1);
  std::set<NodeSet> got_m(modified.begin(), modified.end());
  std::set<NodeSet> expected_m{{N({0})}, {N({1})}};
  CHECK(got_m == expected_m);
  CHECK(is_unit_antichain(TreeKind::ModifiedBinary, {N({0}), N({1, 0})}));
  CHECK_FALSE(is_unit_antichain(TreeKind::ModifiedBinary, {N({0}), N({1})}));

  // Deeper: every enumerated set passes the antichain predicate and the
  // sibling rule, and the closed-form count matches.
  for (std::uint32_t d : {2u, 3u}) {
    auto sets = enumerate_unit_antichains(TreeKind::ModifiedBinary, d);
    for (const auto& e : sets) {
      CHECK(is_antichain(e));
      CHECK_FALSE(has_sibling_pair(e));
    }
    CHECK(mpz_class(static_cast<unsigned long>(sets.size())) ==
          count_unit_antichains(TreeKind::ModifiedBinary, d));
    auto rsets = enumerate_unit_antichains(TreeKind::RootedBinary, d);
    CHECK(mpz_class(static_cast<unsigned long>(rsets.size())) ==
          count_unit_antichains(TreeKind::RootedBinary, d));
  }
}

TEST_CASE("a finite unit antichain always misses a branch") {
  auto sets = enumerate_unit_antichains(TreeKind::ModifiedBinary, 3);
  for (const auto& e : sets) {
    for (int top : {0, 1}) {
      Node start(1, static_cast<std::uint64_t>(top));
      bool blocked = false;
      for (const Node& n : e)
        if (is_ancestor_or_self(n, start)) blocked = true;
      if (blocked) continue;
      Node leaf = branch_node_avoiding(e, start, 5);
      CHECK(leaf.depth() == 5);
      for (const Node& n : e) CHECK_FALSE(is_ancestor_or_self(n, leaf));
    }
  }
}
