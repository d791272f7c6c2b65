#include "tree_norm.hpp"

#include <algorithm>
#include <map>

namespace treespace {

namespace {

struct ClosureEntry {
  Rat abs_coeff = 0;
  Rat abs_tail = 0;
  Rat down = 0;  // best chain mass from here downward, tail included
  Rat path = 0;  // mass of the full chain from the top to here
};

using Closure = std::map<Node, ClosureEntry, NodeLess>;

std::uint32_t top_depth(TreeKind kind) { return kind == TreeKind::RootedBinary ? 0u : 1u; }

// Support nodes, anchors, and all their ancestors up to the kind's top
// level, with the chain DP filled in.
Closure build_closure(const TreeVector& v) {
  Closure c;
  auto insert_with_ancestors = [&](Node t) {
    for (;;) {
      c.try_emplace(t);
      if (t.depth() <= top_depth(v.kind())) break;
      t = t.parent();
    }
  };
  if (v.kind() == TreeKind::RootedBinary) c.try_emplace(Node::root());
  for (const auto& [t, val] : v.coeffs()) {
    insert_with_ancestors(t);
    c[t].abs_coeff = abs(val);
  }
  for (const auto& [t, amp] : v.tails()) {
    insert_with_ancestors(t);
    c[t].abs_tail = abs(amp);
  }
  // Children have strictly larger rank, so a reverse sweep sees them first.
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    const Node& t = it->first;
    Rat best = it->second.abs_tail;  // 0 when not an anchor
    for (int b : {0, 1}) {
      auto ch = c.find(t.child(b));
      if (ch != c.end()) best = std::max(best, ch->second.down);
    }
    it->second.down = it->second.abs_coeff + best;
  }
  for (auto& [t, e] : c) {
    Rat above = 0;
    if (t.depth() > top_depth(v.kind())) above = c.at(t.parent()).path;
    e.path = above + e.abs_coeff;
  }
  return c;
}

Rat abs_coeff_of(const Closure& c, const Node& t) {
  auto it = c.find(t);
  return it == c.end() ? Rat(0) : it->second.abs_coeff;
}

}  // namespace

Rat tree_norm(const TreeVector& v) {
  v.validate();
  if (v.is_zero()) return Rat(0);
  Closure c = build_closure(v);
  Rat best = 0;
  if (v.kind() == TreeKind::RootedBinary) {
    best = c.at(Node::root()).down;
  } else {
    for (int b : {0, 1}) {
      auto it = c.find(Node(1, static_cast<std::uint64_t>(b)));
      if (it != c.end()) best = std::max(best, it->second.down);
    }
    // Lambda segments: full path to t plus both successors. Segments
    // that dive into a tail region never beat the branch through it.
    for (const auto& [t, e] : c) {
      Rat seg = e.path + abs_coeff_of(c, t.child(0)) + abs_coeff_of(c, t.child(1));
      best = std::max(best, seg);
    }
    // The segmentless pair {(0),(1)}.
    Rat pair = abs_coeff_of(c, Node(1, 0)) + abs_coeff_of(c, Node(1, 1));
    best = std::max(best, pair);
  }
  return best;
}

std::vector<FrontierBranch> frontier_branches(const TreeVector& v) {
  v.validate();
  Closure c = build_closure(v);
  std::vector<FrontierBranch> out;
  if (v.kind() == TreeKind::ModifiedBinary) {
    for (int b : {0, 1}) {
      Node top(1, static_cast<std::uint64_t>(b));
      if (!c.count(top)) out.push_back({FrontierBranch::Exit::EmptySubtree, top, 0, Rat(0)});
    }
  }
  for (const auto& [t, e] : c) {
    if (e.abs_tail != 0) {
      out.push_back({FrontierBranch::Exit::Tail, t, 0, e.path + e.abs_tail});
      continue;  // anchors have no closure children
    }
    for (int b : {0, 1})
      if (!c.count(t.child(b))) out.push_back({FrontierBranch::Exit::Open, t, b, e.path});
  }
  return out;
}

bool all_branches_sum_to(const TreeVector& v, const Rat& target) {
  for (const FrontierBranch& fb : frontier_branches(v))
    if (fb.sum != target) return false;
  return true;
}

NormingReport norming_sets(const TreeVector& v) {
  NormingReport report;
  report.norm = tree_norm(v);
  if (v.is_zero()) return report;
  std::uint32_t d = std::max<std::uint32_t>(1, v.support_depth());
  TreeVector w = v.deepened(d);
  std::vector<AdmissibleSet> attaining;
  for (const AdmissibleSet& a : enumerate_admissible_sets(v.kind(), d)) {
    Rat sum = 0;
    for (const Node& t : a.nodes) sum += abs(w.coeff(t));
    if (a.kind == AdmissibleKind::BranchSubset) {
      // The truncated branch stands for the infinite branch; its
      // deepest node may be an anchor carrying the tail mass.
      sum += abs(w.tail_amplitude(a.nodes.back()));
    }
    if (sum == report.norm) attaining.push_back(a);
  }
  // Drop sets that are strict subsets of other attaining sets.
  for (std::size_t i = 0; i < attaining.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < attaining.size() && maximal; ++j) {
      if (i == j || attaining[i].nodes.size() >= attaining[j].nodes.size()) continue;
      bool subset = true;
      for (const Node& t : attaining[i].nodes)
        if (!contains(attaining[j].nodes, t)) {
          subset = false;
          break;
        }
      if (subset) maximal = false;
    }
    if (maximal) report.sets.push_back(attaining[i]);
  }
  for (const FrontierBranch& fb : frontier_branches(v))
    if (fb.exit == FrontierBranch::Exit::Tail && fb.sum == report.norm)
      report.norming_anchors.push_back(fb.at);
  return report;
}

Rat distance(const TreeVector& x, const TreeVector& y) {
  if (x.kind() != y.kind()) throw DomainError("mixed tree kinds");
  return tree_norm(x - y);
}

}  // namespace treespace
