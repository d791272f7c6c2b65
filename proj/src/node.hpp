#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rational.hpp"

namespace treespace {

// The two index trees. The rooted tree admits the empty address; the
// modified tree starts at depth one and supports lambda segments.
enum class TreeKind { RootedBinary, ModifiedBinary };

char kind_letter(TreeKind kind);
TreeKind kind_from_letter(char c);

// A tree address: a finite 0/1 word, root-first. Packed into a word,
// which caps the depth at 62; the library never needs more than ~16.
class Node {
 public:
  Node() : depth_(0), bits_(0) {}
  Node(std::uint32_t depth, std::uint64_t bits);

  static Node root() { return Node(); }
  static Node from_bits(std::initializer_list<int> bits);

  std::uint32_t depth() const { return depth_; }
  bool is_root() const { return depth_ == 0; }
  int bit(std::uint32_t i) const { return (bits_ >> i) & 1u; }

  Node child(int b) const;
  Node parent() const;
  Node sibling() const;
  // Ancestor at the given depth; requires d <= depth().
  Node ancestor(std::uint32_t d) const;
  Node concat(const Node& suffix) const;
  // Strips a prefix; requires prefix to be an ancestor-or-self.
  Node strip_prefix(const Node& prefix) const;

  bool operator==(const Node& o) const { return depth_ == o.depth_ && bits_ == o.bits_; }
  bool operator!=(const Node& o) const { return !(*this == o); }
  bool operator<(const Node& o) const { return rank() < o.rank(); }

  // Heap numbering: root -> 0, t0 -> 2r+1, t1 -> 2r+2. Level order on
  // the tree, and the rank used everywhere "smallest index" appears.
  std::uint64_t rank() const;
  static Node unrank(std::uint64_t r);

  std::string str() const;           // "ε" for the root, else the 0/1 word
  static Node parse(const std::string& s);

 private:
  std::uint32_t depth_;
  std::uint64_t bits_;  // bit i = step taken at depth i
};

// Shortlex == heap-rank order.
struct NodeLess {
  bool operator()(const Node& a, const Node& b) const { return a.rank() < b.rank(); }
};

enum class Relation { Equal, Ancestor, Descendant, Incomparable };

Relation compare(const Node& s, const Node& t);
bool is_ancestor_or_self(const Node& s, const Node& t);
bool comparable(const Node& s, const Node& t);

bool valid_for(const Node& t, TreeKind kind);
void require_valid(const Node& t, TreeKind kind);

// Rank restricted to the kind: the modified tree simply excludes rank 0.
std::uint64_t rank_in(const Node& t, TreeKind kind);
Node unrank_in(std::uint64_t r, TreeKind kind);

// All nodes valid for the kind with depth <= d, in rank order.
std::vector<Node> nodes_to_depth(TreeKind kind, std::uint32_t d);

}  // namespace treespace
