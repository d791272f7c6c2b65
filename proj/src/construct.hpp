#pragma once

#include "functional.hpp"
#include "points.hpp"
#include "tree_vector.hpp"

namespace treespace {

// z with coefficients in {0,±1} and unit norm (support a unit
// antichain), or the zero vector.
bool is_f_element(const TreeVector& z);

struct ConvexTerm {
  Rat weight;
  TreeVector vector;
};

struct ConvexDecomposition {
  std::vector<ConvexTerm> terms;
  TreeVector target;

  // Weights positive summing to one, recombination coefficientwise exact.
  void validate() const;
};

// Lambda-segment heart of the ball: every finitely supported ball
// vector is an exact convex combination of sign patterns on unit
// antichains inside its support. Runs the sibling-pair induction over
// shortlex ranks.
ConvexDecomposition decompose_into_f(const TreeVector& y);

// Root shift: coefficient at t0⌢t = input coefficient at t.
TreeVector shift(const Node& t0, const TreeVector& v);

enum class StandardVector { RootedDyadic, ModifiedDyadic, ShiftedDyadic };
// RootedDyadic: 2^{-|t|} on the rooted tree, depth-d explicit part;
// ModifiedDyadic: same on the modified tree; ShiftedDyadic: the image
// under the subtree reshuffle that frees the node (1).
TreeVector standard_vector(StandardVector name, std::uint32_t depth, bool with_tails = true);

// The reshuffle: the (0)-subtree stays, the (1)-subtree moves below (1,0).
TreeVector reshuffle_left(const TreeVector& v);

struct Daugavetified {
  TreeVector x;
  std::vector<Node> anchors;      // b_t per active depth-m node
  std::vector<Rat> amplitudes;    // mu_t
  DaugavetCheck certificate;
};
// Moves y to a Daugavet-point inside the weak neighborhood
// { x : |phi_i(y - x)| < eps }: grafts shifted dyadic tails below
// functional-invisible successors.
Daugavetified daugavetify(const TreeVector& y, const std::vector<NormedFunctional>& phis,
                          const Rat& eps, std::uint32_t depth_budget);

struct DaugavetHullTerm {
  Rat weight;          // lambda_k / 2 each for the ± pair
  TreeVector plus;     // z_k + x_k
  TreeVector minus;    // z_k - x_k
  DaugavetCheck plus_cert;
  DaugavetCheck minus_cert;
};
struct DaugavetHullDecomposition {
  std::vector<DaugavetHullTerm> terms;
  TreeVector target;
};
// Writes a finitely supported ball vector as a convex combination of
// certified Daugavet-points that attain their norm on every branch.
DaugavetHullDecomposition decompose_into_db(const TreeVector& y);

}  // namespace treespace
