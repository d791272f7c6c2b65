#pragma once

#include <map>
#include <optional>

#include "ball_lp.hpp"
#include "functional.hpp"
#include "minimal_sets.hpp"
#include "tree_norm.hpp"

namespace treespace {

// Membership in Δ_ε(x): y in the ball at distance >= 2-ε from x.
bool delta_member(const TreeVector& x, const TreeVector& y, const Rat& eps);

// Exact minimum of ||x - P_E x|| over all finite unit antichains E of
// the modified tree, any depth. A finite antichain without sibling
// pairs always misses a full branch, so nodes inside tail regions never
// help and the game closes over the explicit support.
struct AntichainGame {
  Rat min_value;
  NodeSet minimizer;  // empty iff the minimum is ||x|| itself
};
AntichainGame min_drop_over_unit_antichains(const TreeVector& x);

struct DaugavetCheck {
  enum class Method { AllBranchesNorm, AllUnitAntichains };
  bool is_daugavet = false;
  Method method = Method::AllBranchesNorm;
  std::uint32_t depth = 1;       // depth covering the decision
  mpz_class checked;             // number of unit antichains the claim quantifies over
  std::vector<FrontierBranch> branch_detail;  // AllBranchesNorm
  NodeSet refuting_e;            // refutation only
  Rat refuting_value;
};
// Modified tree only; requires ||x|| = 1.
DaugavetCheck daugavet_check(const TreeVector& x);

struct RootedRefutation {
  NodeSet e;   // first elements of the minimal norming sets; an antichain
  Rat value;   // ||x - P_E x|| < 1
};
// Rooted tree; requires ||x|| = 1. Always succeeds.
RootedRefutation daugavet_refute_rooted(const TreeVector& x);

struct SliceSup {
  Rat value;               // sup of ||x-y|| over the closed slice, depth-d ball
  TreeVector maximizer;
  AdmissibleSet argmax;
  std::uint32_t depth;
  bool boundary;           // maximizer sits on the slice boundary
  std::optional<TreeVector> interior_witness;  // nudged into the open slice
  Rat interior_value;      // its exact distance
};
SliceSup slice_sup_distance(const TreeVector& x, const NormedFunctional& phi, const Rat& eps,
                            std::uint32_t depth);

struct DeltaWitness {
  TreeVector y;        // z_{t0} - e_{tn}
  Node t0;
  Node tn;
  int level = 0;       // N
  Rat functional_value;
  Rat distance;        // exactly 2
};
// The rooted-tree construction: x is the dyadic unit vector with tails,
// phi a certified functional whose slice of width delta contains x.
DeltaWitness delta_witness_rooted(const NormedFunctional& phi, const Rat& delta,
                                  std::uint32_t depth_budget);

// z_t plus a copy of the dyadic unit vector grafted at t.
TreeVector z_vector(const Node& t);
TreeVector dyadic_tree_element(const Node& t);

struct DyadicCheck {
  bool is_dyadic = false;
  std::optional<Node> violation;
  Rat min_level_distance;
  bool averaging_identity = false;  // x_root = 2^{-n} sum over level n
};
DyadicCheck dyadic_check(const std::map<Node, TreeVector, NodeLess>& tree, std::uint32_t levels);

}  // namespace treespace
