#include "admissible.hpp"

#include <algorithm>

namespace treespace {

NodeSet sorted_unique(NodeSet nodes) {
  std::sort(nodes.begin(), nodes.end(), NodeLess{});
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

bool contains(const NodeSet& set, const Node& t) {
  return std::find(set.begin(), set.end(), t) != set.end();
}

bool is_chain(const NodeSet& nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (!comparable(nodes[i], nodes[j])) return false;
  return true;
}

bool is_lambda_segment_subset(const NodeSet& nodes) {
  if (nodes.empty()) return true;
  for (const Node& t : nodes)
    if (t.is_root()) return false;
  // Split into the chain part and at most one incomparable pair of
  // siblings hanging below the chain's bottom.
  NodeSet sorted = sorted_unique(nodes);
  // Find deepest node(s).
  std::uint32_t maxd = 0;
  for (const Node& t : sorted) maxd = std::max(maxd, t.depth());
  NodeSet deepest;
  for (const Node& t : sorted)
    if (t.depth() == maxd) deepest.push_back(t);
  if (deepest.size() > 2) return false;
  Node anchor;  // the node whose successors close the segment
  if (deepest.size() == 2) {
    if (deepest[0].sibling() != deepest[1]) return false;
    anchor = deepest[0].parent();
  } else {
    // Single deepest node u: it can serve as a member of t⁺ (then all
    // others lie on the chain to its parent) or as the segment bottom.
    anchor = deepest[0];
  }
  // Everything else must lie on one chain ending at or above `anchor`,
  // or be the other successor. Accept if all remaining nodes are
  // ancestors-or-self of `anchor` or its parent chain.
  for (const Node& t : sorted) {
    if (t.depth() == maxd) continue;
    if (deepest.size() == 2) {
      if (!is_ancestor_or_self(t, anchor)) return false;
    } else {
      // t must be an ancestor of the single deepest node, or its
      // sibling's ancestor... a chain through parent(u) suffices:
      if (!is_ancestor_or_self(t, deepest[0])) return false;
    }
  }
  return true;
}

bool is_admissible(TreeKind kind, const NodeSet& nodes) {
  if (kind == TreeKind::RootedBinary) return is_chain(nodes);
  for (const Node& t : nodes)
    if (t.is_root()) return false;
  return is_chain(nodes) || is_lambda_segment_subset(nodes);
}

namespace {

void push_branches(TreeKind kind, std::uint32_t d, std::vector<AdmissibleSet>& out) {
  std::uint64_t leaves = std::uint64_t{1} << d;
  for (std::uint64_t leaf = 0; leaf < leaves; ++leaf) {
    NodeSet branch;
    Node t;
    if (kind == TreeKind::RootedBinary) branch.push_back(t);
    for (std::uint32_t i = 0; i < d; ++i) {
      t = t.child((leaf >> i) & 1u);
      branch.push_back(t);
    }
    out.push_back({AdmissibleKind::BranchSubset, std::move(branch)});
  }
}

}  // namespace

std::vector<AdmissibleSet> enumerate_admissible_sets(TreeKind kind, std::uint32_t d) {
  if (d < 1) throw DomainError("depth must be at least 1");
  std::vector<AdmissibleSet> out;
  push_branches(kind, d, out);
  if (kind == TreeKind::ModifiedBinary) {
    // Segmentless pair.
    out.push_back({AdmissibleKind::LambdaSegmentSubset,
                   {Node::from_bits({0}), Node::from_bits({1})}});
    // Full segments from depth one down to t, closed by both successors.
    for (const Node& t : nodes_to_depth(TreeKind::ModifiedBinary, d - 1)) {
      NodeSet seg;
      for (std::uint32_t k = 1; k <= t.depth(); ++k) seg.push_back(t.ancestor(k));
      seg.push_back(t.child(0));
      seg.push_back(t.child(1));
      out.push_back({AdmissibleKind::LambdaSegmentSubset, sorted_unique(seg)});
    }
  }
  return out;
}

bool is_antichain(const NodeSet& nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (comparable(nodes[i], nodes[j])) return false;
  return true;
}

bool has_sibling_pair(const NodeSet& nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (!nodes[i].is_root() && !nodes[j].is_root() && nodes[i].sibling() == nodes[j])
        return true;
  return false;
}

bool is_unit_antichain(TreeKind kind, const NodeSet& nodes) {
  if (nodes.empty() || !is_antichain(nodes)) return false;
  for (const Node& t : nodes)
    if (!valid_for(t, kind)) return false;
  if (kind == TreeKind::ModifiedBinary && has_sibling_pair(nodes)) return false;
  return true;
}

namespace {

// Antichain subsets of the depth-`levels` subtree rooted at `root`,
// including the empty set; `no_siblings` forbids same-parent pairs.
void subtree_antichains(const Node& root, std::uint32_t levels, bool no_siblings,
                        std::vector<NodeSet>& out) {
  out.push_back({});
  if (levels == 0) return;
  out.push_back({root});
  if (levels == 1) return;
  std::vector<NodeSet> left, right;
  subtree_antichains(root.child(0), levels - 1, no_siblings, left);
  subtree_antichains(root.child(1), levels - 1, no_siblings, right);
  for (const NodeSet& a : left)
    for (const NodeSet& b : right) {
      if (a.empty() && b.empty()) continue;
      if (no_siblings && a.size() == 1 && b.size() == 1 && a[0] == root.child(0) &&
          b[0] == root.child(1))
        continue;
      NodeSet merged = a;
      merged.insert(merged.end(), b.begin(), b.end());
      out.push_back(std::move(merged));
    }
}

}  // namespace

std::vector<NodeSet> enumerate_unit_antichains(TreeKind kind, std::uint32_t d) {
  if (d < 1) throw DomainError("depth must be at least 1");
  std::vector<NodeSet> out;
  if (kind == TreeKind::RootedBinary) {
    subtree_antichains(Node::root(), d + 1, false, out);
  } else {
    std::vector<NodeSet> left, right;
    subtree_antichains(Node::from_bits({0}), d, true, left);
    subtree_antichains(Node::from_bits({1}), d, true, right);
    for (const NodeSet& a : left)
      for (const NodeSet& b : right) {
        if (a.size() == 1 && b.size() == 1 && a[0] == Node::from_bits({0}) &&
            b[0] == Node::from_bits({1}))
          continue;  // the segmentless pair is itself a lambda segment
        NodeSet merged = a;
        merged.insert(merged.end(), b.begin(), b.end());
        out.push_back(std::move(merged));
      }
  }
  std::vector<NodeSet> nonempty;
  for (auto& e : out)
    if (!e.empty()) nonempty.push_back(sorted_unique(std::move(e)));
  return nonempty;
}

namespace {

mpz_class subtree_count(std::uint32_t levels, bool no_siblings) {
  // Sets including the empty one.
  if (levels == 0) return 1;
  mpz_class prev = subtree_count(levels - 1, no_siblings);
  mpz_class total = 1 + prev * prev - (no_siblings && levels >= 2 ? 1 : 0);
  return total;
}

}  // namespace

mpz_class count_unit_antichains(TreeKind kind, std::uint32_t d) {
  if (kind == TreeKind::RootedBinary) return subtree_count(d + 1, false) - 1;
  mpz_class per = subtree_count(d, true);
  return per * per - 2;  // minus the sibling pair {(0),(1)} and the empty set
}

Node branch_node_avoiding(const NodeSet& antichain, const Node& from, std::uint32_t depth) {
  Node t = from;
  for (const Node& e : antichain)
    if (is_ancestor_or_self(e, t)) throw DomainError("start node is blocked by the antichain");
  while (t.depth() < depth) {
    Node c0 = t.child(0);
    if (!contains(antichain, c0)) {
      t = c0;
    } else {
      t = t.child(1);  // siblings cannot both be members of an antichain's ... both may in B
    }
    // In the rooted tree both children can be antichain members; step past.
    if (contains(antichain, t)) throw DomainError("antichain blocks both children");
  }
  return t;
}

}  // namespace treespace
