#pragma once

#include <string>
#include <vector>

#include "admissible.hpp"
#include "tree_norm.hpp"
#include "tree_vector.hpp"

namespace treespace {

// One generator of the dual ball: signs on an admissible set.
struct FunctionalPart {
  Rat weight;
  AdmissibleSet set;
  std::vector<int> signs;  // ±1, aligned with set.nodes
};

// A functional carried with its own proof of membership in the dual
// ball (a convex combination of admissible sign indicators) and a unit
// vector attaining the claimed norm. Dual norms are never computed
// blind; they are certified by these two halves.
class NormedFunctional {
 public:
  NormedFunctional(TreeKind kind, CoeffMap coeffs, std::vector<FunctionalPart> parts,
                   Rat claimed_norm, TreeVector witness);

  static NormedFunctional zero(TreeKind kind);

  TreeKind kind() const { return kind_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  const std::vector<FunctionalPart>& decomposition() const { return parts_; }
  const Rat& claimed_norm() const { return claimed_; }
  const TreeVector& witness() const { return witness_; }
  std::uint32_t support_depth() const;

  // Exact evaluation; tail-annotated vectors are fine since the
  // functional has finite support.
  Rat operator()(const TreeVector& v) const;

  // Throws DomainError when any certificate piece fails.
  void validate() const;

  std::string format() const;
  static NormedFunctional parse_block(const std::vector<std::string>& lines);
  static std::vector<NormedFunctional> parse_file_text(const std::string& text);

 private:
  TreeKind kind_;
  CoeffMap coeffs_;
  std::vector<FunctionalPart> parts_;
  Rat claimed_;
  TreeVector witness_;
};

// Heaviest unit antichain of |weights|: the polyhedral dual norm of a
// finitely supported functional, with the attaining antichain.
struct AntichainOptimum {
  Rat value;
  NodeSet antichain;
};
AntichainOptimum max_unit_antichain_weight(TreeKind kind, const CoeffMap& weights);

// Convex mixture of branch indicators with positive signs, certified:
// claimed norm from the antichain optimum, witness the ±1 indicator of
// the attaining antichain.
NormedFunctional branch_mixture_functional(TreeKind kind,
                                           const std::vector<NodeSet>& branches,
                                           const std::vector<Rat>& weights);

}  // namespace treespace
