#pragma once

// Independent oracles for the test suites. Everything here recomputes
// values by plain enumeration, never through the production code paths
// it is checking.

#include "admissible.hpp"
#include "backend.hpp"
#include "tree_vector.hpp"

namespace treespace::oracle {

// Norm by brute force: max of the |coefficient| sums over every
// enumerated maximal admissible set. Finite support only.
Rat brute_norm(const TreeVector& v, std::uint32_t depth);

// min over all unit antichains within `depth` of ||x - P_E x||,
// by literal enumeration.
struct BruteGame {
  Rat min_value;
  NodeSet minimizer;
};
BruteGame brute_min_drop(const TreeVector& x, std::uint32_t depth);

// All minimal norm-attaining subsets of the support, by scanning every
// subset and filtering minimal elements.
std::vector<std::vector<int>> brute_minimal_sets(const SeqVector& x, const BackendNorm& b);
std::vector<NodeSet> brute_minimal_sets_tree(const TreeVector& x);

// Brute-force sup of ||x-y|| over dyadic grid points of the depth-d
// ball satisfying phi(y) >= threshold; a lower bound for LP answers.
Rat grid_slice_sup(const TreeVector& x, const CoeffMap& phi, const Rat& threshold,
                   std::uint32_t depth, int denom_pow);

}  // namespace treespace::oracle
