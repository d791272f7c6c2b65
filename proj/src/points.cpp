#include "points.hpp"

#include <algorithm>

namespace treespace {

bool delta_member(const TreeVector& x, const TreeVector& y, const Rat& eps) {
  return tree_norm(y) <= 1 && distance(x, y) >= 2 - eps;
}

namespace {

// Game over the explicit support: the remover picks a unit antichain,
// the norm picks a surviving admissible set. Per subtree, with the
// parent chain free of remover nodes:
//   in_value:  value below u when u itself is removed (everything under
//              u survives, the tail included);
//   out_value: minimized value when u stays, siblings rule respected.
struct GameNode {
  Rat coeff;      // |x_u|
  Rat tail;       // |amplitude| at u
  Rat full;       // chain value from u with no removals
  Rat in_value;   // u in E
  Rat out_value;  // u not in E, subtree minimized
  NodeSet out_pick;
  bool present = false;
};

struct Game {
  const TreeVector& x;
  std::map<Node, GameNode, NodeLess> nodes;

  explicit Game(const TreeVector& v) : x(v) {
    auto touch = [&](Node t) {
      for (;;) {
        nodes.try_emplace(t);
        if (t.depth() <= 1) break;
        t = t.parent();
      }
    };
    for (const auto& [t, val] : v.coeffs()) {
      touch(t);
      nodes[t].coeff = abs(val);
    }
    for (const auto& [t, amp] : v.tails()) {
      touch(t);
      nodes[t].tail = abs(amp);
    }
    for (auto& [t, g] : nodes) g.present = true;
    // Reverse rank order: children first.
    for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) solve(it->first, it->second);
  }

  const GameNode* find(const Node& t) const {
    auto it = nodes.find(t);
    return it == nodes.end() ? nullptr : &it->second;
  }

  Rat full_of(const Node& t) const {
    const GameNode* g = find(t);
    return g ? g->full : Rat(0);
  }
  Rat coeff_of(const Node& t) const {
    const GameNode* g = find(t);
    return g ? g->coeff : Rat(0);
  }

  void solve(const Node& t, GameNode& g) {
    const GameNode* c0 = find(t.child(0));
    const GameNode* c1 = find(t.child(1));
    Rat below_full = g.tail;
    if (c0) below_full = std::max(below_full, c0->full);
    if (c1) below_full = std::max(below_full, c1->full);
    Rat pair_full = coeff_of(t.child(0)) + coeff_of(t.child(1));
    below_full = std::max(below_full, pair_full);
    g.full = g.coeff + below_full;

    // u removed: its subtree is antichain-free; only the coefficient at
    // u goes. Tail regions always keep one full branch, so `tail`
    // stands whatever happens deeper.
    g.in_value = std::max(Rat(0), below_full);

    // u kept: choose the best pattern over the children. Patterns:
    // none, left in E, right in E (both is a sibling pair).
    struct Pattern {
      Rat value;
      NodeSet pick;
    };
    auto child_out = [&](const GameNode* c) { return c ? c->out_value : Rat(0); };
    auto child_pick = [&](const GameNode* c) { return c ? c->out_pick : NodeSet{}; };
    std::vector<Pattern> patterns;
    {
      Rat v = std::max({g.tail, child_out(c0), child_out(c1),
                        Rat(coeff_of(t.child(0)) + coeff_of(t.child(1)))});
      NodeSet pick = child_pick(c0);
      NodeSet right = child_pick(c1);
      pick.insert(pick.end(), right.begin(), right.end());
      patterns.push_back({v, std::move(pick)});
    }
    if (c0 && c0->coeff != 0) {
      Rat v = std::max({g.tail, c0->in_value, child_out(c1), coeff_of(t.child(1))});
      NodeSet pick{t.child(0)};
      NodeSet right = child_pick(c1);
      pick.insert(pick.end(), right.begin(), right.end());
      patterns.push_back({v, std::move(pick)});
    }
    if (c1 && c1->coeff != 0) {
      Rat v = std::max({g.tail, child_out(c0), c1->in_value, coeff_of(t.child(0))});
      NodeSet pick = child_pick(c0);
      pick.push_back(t.child(1));
      patterns.push_back({v, std::move(pick)});
    }
    g.out_value = patterns.front().value;
    g.out_pick = patterns.front().pick;
    for (Pattern& p : patterns) {
      if (p.value < g.out_value ||
          (p.value == g.out_value && p.pick.size() < g.out_pick.size())) {
        g.out_value = p.value;
        g.out_pick = std::move(p.pick);
      }
    }
    g.out_value += g.coeff;
  }
};

}  // namespace

AntichainGame min_drop_over_unit_antichains(const TreeVector& x) {
  if (x.kind() != TreeKind::ModifiedBinary)
    throw DomainError("unit-antichain game runs on the modified tree");
  x.validate();
  Game game(x);
  Node n0 = Node::from_bits({0}), n1 = Node::from_bits({1});
  const GameNode* g0 = game.find(n0);
  const GameNode* g1 = game.find(n1);
  auto out_v = [&](const GameNode* g) { return g ? g->out_value : Rat(0); };
  auto in_v = [&](const GameNode* g) { return g ? g->in_value : Rat(0); };
  auto out_p = [&](const GameNode* g) { return g ? g->out_pick : NodeSet{}; };
  Rat c0 = game.coeff_of(n0), c1 = game.coeff_of(n1);

  struct Top {
    Rat value;
    NodeSet pick;
  };
  std::vector<Top> tops;
  {
    NodeSet pick = out_p(g0);
    NodeSet right = out_p(g1);
    pick.insert(pick.end(), right.begin(), right.end());
    tops.push_back({std::max({out_v(g0), out_v(g1), Rat(c0 + c1)}), std::move(pick)});
  }
  if (g0 && g0->coeff != 0) {
    NodeSet pick{n0};
    NodeSet right = out_p(g1);
    pick.insert(pick.end(), right.begin(), right.end());
    tops.push_back({std::max({in_v(g0), out_v(g1), c1}), std::move(pick)});
  }
  if (g1 && g1->coeff != 0) {
    NodeSet pick = out_p(g0);
    pick.push_back(n1);
    tops.push_back({std::max({out_v(g0), in_v(g1), c0}), std::move(pick)});
  }
  AntichainGame out;
  out.min_value = tops.front().value;
  out.minimizer = tops.front().pick;
  for (Top& t : tops) {
    if (t.value < out.min_value ||
        (t.value == out.min_value && t.pick.size() < out.minimizer.size())) {
      out.min_value = t.value;
      out.minimizer = std::move(t.pick);
    }
  }
  out.minimizer = sorted_unique(std::move(out.minimizer));
  return out;
}

DaugavetCheck daugavet_check(const TreeVector& x) {
  if (x.kind() != TreeKind::ModifiedBinary)
    throw DomainError("full certification runs on the modified tree");
  if (tree_norm(x) != 1) throw DomainError("certification requires a unit vector");
  DaugavetCheck out;
  out.depth = std::max<std::uint32_t>(
      {1u, x.support_depth(), x.has_tails() ? x.anchor_depth() + 1 : 0u});
  if (all_branches_sum_to(x, Rat(1))) {
    out.is_daugavet = true;
    out.method = DaugavetCheck::Method::AllBranchesNorm;
    out.branch_detail = frontier_branches(x);
    out.checked = 0;
    return out;
  }
  AntichainGame game = min_drop_over_unit_antichains(x);
  out.method = DaugavetCheck::Method::AllUnitAntichains;
  out.checked = count_unit_antichains(TreeKind::ModifiedBinary, out.depth);
  if (game.min_value == 1) {
    out.is_daugavet = true;
    return out;
  }
  out.is_daugavet = false;
  out.refuting_e = game.minimizer;
  out.refuting_value = game.min_value;
  // Re-derive the claimed drop directly.
  if (tree_norm(x.without_coeffs(out.refuting_e)) != out.refuting_value)
    throw std::logic_error("game value mismatch");
  return out;
}

RootedRefutation daugavet_refute_rooted(const TreeVector& x) {
  if (x.kind() != TreeKind::RootedBinary)
    throw DomainError("this refutation is for the rooted tree");
  if (tree_norm(x) != 1) throw DomainError("refutation requires a unit vector");
  TreeMinimalReport m = all_minimal_sets(x);
  RootedRefutation out;
  NodeSet e;
  for (const NodeSet& a : m.finite)
    if (!a.empty()) e.push_back(a.front());
  for (const SymbolicBranch& sb : m.infinite) {
    if (!sb.prefix.empty()) {
      e.push_back(sb.prefix.front());
    } else {
      e.push_back(sb.anchor.child(0));
      e.push_back(sb.anchor.child(1));
    }
  }
  out.e = sorted_unique(std::move(e));
  if (!is_antichain(out.e))
    throw std::logic_error("first elements of the minimal sets must form an antichain");
  out.value = tree_norm(x.without_coeffs(out.e));
  if (out.value >= 1) throw std::logic_error("refutation failed; the drop must be strict");
  return out;
}

SliceSup slice_sup_distance(const TreeVector& x, const NormedFunctional& phi, const Rat& eps,
                            std::uint32_t depth) {
  if (x.kind() != phi.kind()) throw DomainError("mixed tree kinds");
  phi.validate();
  if (phi.support_depth() > depth)
    throw CapacityError("functional support exceeds the working depth");
  if (eps <= 0) throw DomainError("slice width must be positive");
  Rat threshold = phi.claimed_norm() - eps;
  std::vector<TreeSideConstraint> side;
  if (!phi.coeffs().empty() || threshold > 0) {
    TreeSideConstraint slice;
    slice.coeffs = phi.coeffs();
    slice.lo = threshold;
    side.push_back(std::move(slice));
  }
  TreeMaxResult max = tree_max_distance(x, depth, side);
  SliceSup out;
  out.value = max.value;
  out.maximizer = max.maximizer;
  out.argmax = max.argmax;
  out.depth = depth;
  out.boundary = !phi.coeffs().empty() && phi(out.maximizer) == threshold;
  if (out.boundary) {
    // Nudge toward the witness to re-enter the open slice; the witness
    // satisfies phi(w) = claimed > threshold.
    if (phi.witness().support_depth() <= depth) {
      Rat lambda(1, 1024);
      TreeVector w = phi.witness();
      TreeVector nudged = out.maximizer.scaled(1 - lambda) + w.scaled(lambda);
      out.interior_witness = nudged;
      out.interior_value = distance(x.deepened(depth), nudged);
    }
  }
  return out;
}

TreeVector z_vector(const Node& t) {
  // z at the root is 0; stepping to child b adds the basis vector at
  // the sibling of that child.
  TreeVector z(TreeKind::RootedBinary);
  Node u;
  for (std::uint32_t i = 0; i < t.depth(); ++i) {
    Node next = u.child(t.bit(i));
    z.set_coeff(next.sibling(), Rat(1));
    u = next;
  }
  return z;
}

TreeVector dyadic_tree_element(const Node& t) {
  TreeVector v = z_vector(t);
  v.set_tail(t, v.tail_amplitude(t) + 1);  // a copy of the dyadic unit vector below t
  return v;
}

DeltaWitness delta_witness_rooted(const NormedFunctional& phi, const Rat& delta,
                                  std::uint32_t depth_budget) {
  if (phi.kind() != TreeKind::RootedBinary)
    throw DomainError("the witness construction lives in the rooted tree");
  phi.validate();
  if (delta <= 0) throw DomainError("slice width must be positive");
  TreeVector x(TreeKind::RootedBinary);  // the dyadic unit vector, all tails
  x.set_tail(Node::root(), Rat(1));
  Rat at_x = phi(x);
  Rat threshold = phi.claimed_norm() - delta;
  if (at_x <= threshold) throw DomainError("x does not lie in the given slice");

  // phi(y_N) climbs to phi(x) once N passes the support depth.
  std::uint32_t level = 0;
  for (;; ++level) {
    if (level > depth_budget) throw CapacityError("depth budget exhausted before y_N entered the slice");
    Rat value = 0;
    for (const auto& [t, c] : phi.coeffs())
      if (t.depth() <= level && !t.is_root()) value += c * pow2(-static_cast<long>(t.depth()));
    if (value > threshold) break;
  }
  // Smallest-rank level node whose z value clears the threshold; the
  // average over the level equals phi(y_N), so one exists.
  std::optional<Node> t0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << level); ++bits) {
    Node cand(level, bits);
    if (phi(z_vector(cand)) > threshold) {
      Node c = cand;
      if (!t0 || c.rank() < t0->rank()) t0 = c;
    }
  }
  if (!t0) throw std::logic_error("no level node clears the slice threshold");
  TreeVector z = z_vector(*t0);
  Rat z_value = phi(z);

  // Scan the antichain t0^1, t0^01, t0^001, … for a successor whose
  // basis vector barely moves the functional.
  Node walk = *t0;
  std::optional<Node> tn;
  while (walk.depth() + 1 <= depth_budget) {
    Node cand = walk.child(1);
    auto it = phi.coeffs().find(cand);
    Rat at_cand = it == phi.coeffs().end() ? Rat(0) : it->second;
    if (z_value - at_cand > threshold) {
      tn = cand;
      break;
    }
    walk = walk.child(0);
  }
  if (!tn) throw CapacityError("depth budget exhausted scanning for the witness successor");

  DeltaWitness out;
  out.t0 = *t0;
  out.tn = *tn;
  out.level = static_cast<int>(level);
  out.y = z;
  out.y.set_coeff(*tn, out.y.coeff(*tn) - 1);
  out.functional_value = phi(out.y);
  if (out.functional_value <= threshold) throw std::logic_error("witness left the slice");
  if (tree_norm(out.y) != 1) throw std::logic_error("witness must be a unit vector");
  out.distance = distance(x, out.y);
  if (out.distance != 2) throw std::logic_error("witness must sit at distance exactly two");
  return out;
}

DyadicCheck dyadic_check(const std::map<Node, TreeVector, NodeLess>& tree,
                         std::uint32_t levels) {
  DyadicCheck out;
  const TreeVector* root = nullptr;
  for (const auto& [t, v] : tree) {
    if (tree_norm(v) > 1) throw DomainError("dyadic tree vectors must stay in the ball");
    if (t.is_root()) root = &v;
  }
  if (!root) throw DomainError("missing root element");
  out.is_dyadic = true;
  for (const auto& [t, v] : tree) {
    if (t.depth() >= levels) continue;
    auto c0 = tree.find(t.child(0));
    auto c1 = tree.find(t.child(1));
    if (c0 == tree.end() || c1 == tree.end()) throw DomainError("dyadic tree has a hole");
    TreeVector mid = (c0->second + c1->second).scaled(Rat(1, 2));
    if (!mid.same_vector(v)) {
      out.is_dyadic = false;
      out.violation = t;
      break;
    }
  }
  bool first = true;
  TreeVector avg(root->kind());
  for (const auto& [t, v] : tree) {
    if (t.depth() != levels) continue;
    Rat d = distance(*root, v);
    if (first || d < out.min_level_distance) out.min_level_distance = d;
    first = false;
    avg += v;
  }
  if (first) throw DomainError("dyadic tree missing its deepest level");
  avg = avg.scaled(pow2(-static_cast<long>(levels)));
  out.averaging_identity = avg.same_vector(*root);
  return out;
}

}  // namespace treespace
