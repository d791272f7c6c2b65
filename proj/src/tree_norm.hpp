#pragma once

#include "admissible.hpp"
#include "tree_vector.hpp"

namespace treespace {

// sup over admissible sets of the ℓ1 sum of |coefficients|, tails
// included. Computed by one sweep over the support closure: best
// descending chain per node, lambda segments as best path plus both
// children, a tail anchor adding its amplitude to any chain through it.
Rat tree_norm(const TreeVector& v);

// One entry per class of infinite branches with constant sum: a branch
// either enters the tail region at an anchor, leaves the support
// closure at (node, dir), or lives in an untouched top-level subtree.
struct FrontierBranch {
  enum class Exit { Tail, Open, EmptySubtree };
  Exit exit;
  Node at;
  int dir = 0;  // Open only: closure-free child direction
  Rat sum;
};
std::vector<FrontierBranch> frontier_branches(const TreeVector& v);

// True iff every infinite branch sums exactly to `target`.
bool all_branches_sum_to(const TreeVector& v, const Rat& target);

struct NormingReport {
  Rat norm;
  std::vector<AdmissibleSet> sets;    // maximal attaining sets, no strict subsets
  std::vector<Node> norming_anchors;  // tail vectors: anchors whose branches attain
};
NormingReport norming_sets(const TreeVector& v);

// Exact distance in the space.
Rat distance(const TreeVector& x, const TreeVector& y);

}  // namespace treespace
