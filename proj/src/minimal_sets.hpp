#pragma once

#include <optional>

#include "backend.hpp"
#include "tree_norm.hpp"
#include "tree_vector.hpp"

namespace treespace {

enum class SearchMode { Auto, Exhaustive, Pruned };

// ---- sequence backends ----------------------------------------------

// Greedy member of M(x): sweep the support from the largest rank down,
// dropping every index whose removal keeps the norm. What survives is
// minimal and keeps the smallest-rank norming indices.
std::vector<int> minimal_norming_set(const SeqVector& x, const BackendNorm& b);

struct SeqMinimalReport {
  std::vector<std::vector<int>> finite;  // M(x), all members minimal
};
SeqMinimalReport all_minimal_sets(const SeqVector& x, const BackendNorm& b,
                                  SearchMode mode = SearchMode::Auto);

struct SeqFamilyReport {
  int n = 1;
  std::vector<std::vector<int>> f_n;
  std::vector<std::vector<int>> g_n;
  std::vector<std::vector<int>> e_n;  // all hitting sets, or minimal ones
  bool e_n_materialized = true;
  Rat gamma;
};
SeqFamilyReport families(const SeqVector& x, const BackendNorm& b, int n);

struct SeqWeakNbhdBound {
  std::vector<int> e;
  Rat tolerance;  // per-coordinate weak-neighborhood half-width
  Rat delta;
  Rat bound;         // 2 - delta
  Rat verified_sup;  // exact sup of ||x-y|| over the closed neighborhood
};
SeqWeakNbhdBound weak_nbhd_bound(const SeqVector& x, const BackendNorm& b);

struct SeqDeltaRefutation {
  enum class Verdict { Refuted, NotApplicable };
  Verdict verdict = Verdict::NotApplicable;
  BackendNorm backend;
  SeqVector x;
  int s = 0;  // largest index attaining the maximal coordinate
  Rat delta;
  Rat eta;
  int n = 1;
  Rat gamma;
  SeqVector functional;     // z*, dual norm <= 1 under the backend
  Rat slice_threshold;      // slice = { y : z*(y) >= threshold }
  Rat bound;                // 2 - eta * gamma
  Rat verified_max;         // exact sup of ||x-y|| over the slice window
  SeqVector maximizer;
  int fresh_slots = 1;
  std::vector<std::vector<int>> f_n;
};
SeqDeltaRefutation delta_refutation(const SeqVector& x, const BackendNorm& b);

// ---- tree spaces ------------------------------------------------------

NodeSet minimal_norming_set(const TreeVector& x);

struct SymbolicBranch {
  NodeSet prefix;  // explicit nonzero coefficients along the branch
  Node anchor;     // geometric tail below this node
};

struct TreeMinimalReport {
  std::vector<NodeSet> finite;
  std::vector<SymbolicBranch> infinite;  // norming branches of tail vectors
};
TreeMinimalReport all_minimal_sets(const TreeVector& x, SearchMode mode = SearchMode::Auto);

struct TreeFamilyReport {
  int n = 1;
  std::vector<NodeSet> f_n;
  std::vector<NodeSet> g_n;
  std::vector<NodeSet> e_n;
  bool e_n_materialized = true;
  Rat gamma;
};
TreeFamilyReport families(const TreeVector& x, int n);

struct TreeWeakNbhdBound {
  NodeSet e;
  Rat tolerance;
  Rat delta;
  Rat bound;
  Rat verified_sup;
  std::uint32_t depth = 1;
};
TreeWeakNbhdBound weak_nbhd_bound(const TreeVector& x);

struct TreeDeltaRefutation {
  enum class Verdict { Refuted, NotApplicable };
  Verdict verdict = Verdict::NotApplicable;
  std::string reason;  // NotApplicable only
  TreeVector x{TreeKind::RootedBinary};
  Node s;
  Rat delta;
  Rat eta;
  int n = 1;
  Rat gamma;
  CoeffMap functional;
  Rat slice_threshold;
  Rat bound;
  Rat verified_max;
  TreeVector maximizer{TreeKind::RootedBinary};
  std::uint32_t depth = 1;
  std::vector<NodeSet> f_n;
};
TreeDeltaRefutation delta_refutation(const TreeVector& x);

}  // namespace treespace
