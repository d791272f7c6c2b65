#include "node.hpp"

#include <stdexcept>

namespace treespace {

char kind_letter(TreeKind kind) { return kind == TreeKind::RootedBinary ? 'B' : 'M'; }

TreeKind kind_from_letter(char c) {
  if (c == 'B') return TreeKind::RootedBinary;
  if (c == 'M') return TreeKind::ModifiedBinary;
  throw ParseError(std::string("unknown tree kind '") + c + "'");
}

Node::Node(std::uint32_t depth, std::uint64_t bits) : depth_(depth), bits_(bits) {
  if (depth > 62) throw CapacityError("node depth exceeds 62");
  if (depth < 64 && (bits >> depth) != 0) throw DomainError("node bits exceed depth");
}

Node Node::from_bits(std::initializer_list<int> bits) {
  Node n;
  for (int b : bits) n = n.child(b);
  return n;
}

Node Node::child(int b) const {
  if (depth_ >= 62) throw CapacityError("node depth exceeds 62");
  return Node(depth_ + 1, bits_ | (static_cast<std::uint64_t>(b & 1) << depth_));
}

Node Node::parent() const {
  if (is_root()) throw DomainError("root has no parent");
  return Node(depth_ - 1, bits_ & ((std::uint64_t{1} << (depth_ - 1)) - 1));
}

Node Node::sibling() const {
  if (is_root()) throw DomainError("root has no sibling");
  return Node(depth_, bits_ ^ (std::uint64_t{1} << (depth_ - 1)));
}

Node Node::ancestor(std::uint32_t d) const {
  if (d > depth_) throw DomainError("ancestor depth exceeds node depth");
  std::uint64_t mask = (d >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << d) - 1);
  return Node(d, bits_ & mask);
}

Node Node::concat(const Node& suffix) const {
  Node n = *this;
  for (std::uint32_t i = 0; i < suffix.depth_; ++i) n = n.child(suffix.bit(i));
  return n;
}

Node Node::strip_prefix(const Node& prefix) const {
  if (!is_ancestor_or_self(prefix, *this)) throw DomainError("not a prefix");
  Node n;
  for (std::uint32_t i = prefix.depth_; i < depth_; ++i) n = n.child(bit(i));
  return n;
}

std::uint64_t Node::rank() const {
  std::uint64_t r = 0;
  for (std::uint32_t i = 0; i < depth_; ++i) r = 2 * r + 1 + bit(i);
  return r;
}

Node Node::unrank(std::uint64_t r) {
  std::vector<int> rev;
  while (r > 0) {
    // r = 2p+1 (bit 0) or 2p+2 (bit 1)
    int b = (r % 2 == 0) ? 1 : 0;
    rev.push_back(b);
    r = (r - 1 - b) / 2;
  }
  Node n;
  for (auto it = rev.rbegin(); it != rev.rend(); ++it) n = n.child(*it);
  return n;
}

std::string Node::str() const {
  if (is_root()) return "\xce\xb5";  // ε
  std::string s;
  for (std::uint32_t i = 0; i < depth_; ++i) s += static_cast<char>('0' + bit(i));
  return s;
}

Node Node::parse(const std::string& s) {
  if (s == "\xce\xb5") return root();
  Node n;
  for (char c : s) {
    if (c != '0' && c != '1') throw ParseError("invalid node '" + s + "'");
    n = n.child(c - '0');
  }
  if (s.empty()) throw ParseError("empty node string");
  return n;
}

Relation compare(const Node& s, const Node& t) {
  std::uint32_t common = std::min(s.depth(), t.depth());
  for (std::uint32_t i = 0; i < common; ++i) {
    if (s.bit(i) != t.bit(i)) return Relation::Incomparable;
  }
  if (s.depth() == t.depth()) return Relation::Equal;
  return s.depth() < t.depth() ? Relation::Ancestor : Relation::Descendant;
}

bool is_ancestor_or_self(const Node& s, const Node& t) {
  Relation r = compare(s, t);
  return r == Relation::Equal || r == Relation::Ancestor;
}

bool comparable(const Node& s, const Node& t) { return compare(s, t) != Relation::Incomparable; }

bool valid_for(const Node& t, TreeKind kind) {
  return kind == TreeKind::RootedBinary || !t.is_root();
}

void require_valid(const Node& t, TreeKind kind) {
  if (!valid_for(t, kind)) throw DomainError("root node is not valid in the modified tree");
}

std::uint64_t rank_in(const Node& t, TreeKind kind) {
  require_valid(t, kind);
  return t.rank();
}

Node unrank_in(std::uint64_t r, TreeKind kind) {
  if (kind == TreeKind::ModifiedBinary && r == 0)
    throw DomainError("rank 0 is the root, not valid in the modified tree");
  return Node::unrank(r);
}

std::vector<Node> nodes_to_depth(TreeKind kind, std::uint32_t d) {
  std::vector<Node> out;
  std::uint64_t first = (kind == TreeKind::RootedBinary) ? 0 : 1;
  std::uint64_t count = (std::uint64_t{1} << (d + 1)) - 1;  // ranks 0..2^{d+1}-2
  for (std::uint64_t r = first; r < count; ++r) out.push_back(Node::unrank(r));
  return out;
}

}  // namespace treespace
