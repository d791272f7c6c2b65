#pragma once

#include <vector>

#include "node.hpp"

namespace treespace {

using NodeSet = std::vector<Node>;  // kept sorted by rank, no duplicates

NodeSet sorted_unique(NodeSet nodes);
bool contains(const NodeSet& set, const Node& t);

enum class AdmissibleKind { BranchSubset, LambdaSegmentSubset };

// An index set the norm sums over. BranchSubset nodes form a chain;
// LambdaSegmentSubset nodes fit inside some [s,t] ∪ t⁺.
struct AdmissibleSet {
  AdmissibleKind kind;
  NodeSet nodes;
};

bool is_chain(const NodeSet& nodes);
bool is_lambda_segment_subset(const NodeSet& nodes);
bool is_admissible(TreeKind kind, const NodeSet& nodes);

// Maximal admissible sets at finite depth: every truncated branch
// (the depth-d prefix standing in for the infinite branch), and for
// the modified tree every full lambda segment [s,t] ∪ t⁺ with s at
// depth one and |t| <= d-1, plus the segmentless pair {(0),(1)}.
std::vector<AdmissibleSet> enumerate_admissible_sets(TreeKind kind, std::uint32_t d);

bool is_antichain(const NodeSet& nodes);
// No two nodes of the set share a parent.
bool has_sibling_pair(const NodeSet& nodes);

// E is a unit antichain when the ±1 indicator of E has norm exactly one:
// all non-empty antichains in the rooted tree; antichains without
// sibling pairs in the modified tree (a sibling pair sits inside one
// lambda segment and would sum to two).
bool is_unit_antichain(TreeKind kind, const NodeSet& nodes);
std::vector<NodeSet> enumerate_unit_antichains(TreeKind kind, std::uint32_t d);
mpz_class count_unit_antichains(TreeKind kind, std::uint32_t d);

// A finite unit antichain never covers all branches: walk down from
// `from` picking a child outside E at every step.
Node branch_node_avoiding(const NodeSet& antichain, const Node& from, std::uint32_t depth);

}  // namespace treespace
