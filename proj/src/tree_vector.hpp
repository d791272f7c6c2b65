#pragma once

#include <map>
#include <optional>
#include <string>

#include "admissible.hpp"
#include "node.hpp"
#include "rational.hpp"

namespace treespace {

using CoeffMap = std::map<Node, Rat, NodeLess>;
using SignMap = std::map<Node, int, NodeLess>;

// A finitely presented vector: explicit rational coefficients plus
// geometric-half tail annotations. An anchor u with amplitude a means
// every strict descendant v of u carries a * 2^{-(|v|-|u|)}, all with
// the sign of a. The ℓ1 mass below u along any branch is then exactly
// |a|, which is what makes the norm of these vectors computable.
class TreeVector {
 public:
  explicit TreeVector(TreeKind kind = TreeKind::RootedBinary) : kind_(kind) {}

  TreeKind kind() const { return kind_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  const CoeffMap& tails() const { return tails_; }

  Rat coeff(const Node& t) const;
  Rat tail_amplitude(const Node& t) const;
  // Coefficient at t including tail-implied values below anchors.
  Rat value_at(const Node& t) const;

  void set_coeff(const Node& t, const Rat& v);
  void set_tail(const Node& t, const Rat& amplitude);

  bool is_zero() const { return coeffs_.empty() && tails_.empty(); }
  bool has_tails() const { return !tails_.empty(); }
  std::uint32_t support_depth() const;
  std::uint32_t anchor_depth() const;
  NodeSet support() const;

  // Structure check: nodes valid for the kind, anchors pairwise
  // incomparable, no explicit coefficient strictly below an anchor.
  void validate() const;

  TreeVector& operator+=(const TreeVector& o);
  TreeVector& operator-=(const TreeVector& o);
  TreeVector operator-() const;
  friend TreeVector operator+(TreeVector a, const TreeVector& b) { return a += b; }
  friend TreeVector operator-(TreeVector a, const TreeVector& b) { return a -= b; }
  TreeVector scaled(const Rat& r) const;

  // Exact equality as elements of the space (alignment-insensitive).
  bool same_vector(const TreeVector& o) const;

  // Anchors above `depth` expanded into explicit coefficients with new
  // anchors on the depth-`depth` frontier.
  TreeVector deepened(std::uint32_t depth) const;

  // P_A: coefficients kept on `keep`; anchors kept only when listed in
  // `keep_subtrees` (projecting onto a whole subtree below the anchor).
  TreeVector restricted(const NodeSet& keep, const NodeSet& keep_subtrees = {}) const;

  // x - P_E x: explicit coefficients zeroed on E, tails untouched.
  // E nodes inside a tail region force a deepening first.
  TreeVector without_coeffs(const NodeSet& zeroed) const;

  // T_theta: signs applied coefficientwise; an anchor flips with the
  // sign assigned to its node (the whole tail has one sign).
  TreeVector with_signs(const SignMap& theta) const;

  std::string format() const;
  static TreeVector parse(const std::string& text);
  static TreeVector read_file(const std::string& path);

 private:
  TreeKind kind_;
  CoeffMap coeffs_;
  CoeffMap tails_;

  // Pushes anchors down until neither vector has mass strictly below an
  // anchor of the other.
  static void align(TreeVector& a, TreeVector& b);
  void deepen_anchor(const Node& u, std::uint32_t depth);
};

TreeVector basis_vector(TreeKind kind, const Node& t);

}  // namespace treespace
