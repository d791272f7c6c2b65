#include "tree_vector.hpp"

#include <fstream>
#include <sstream>

namespace treespace {

Rat TreeVector::coeff(const Node& t) const {
  auto it = coeffs_.find(t);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

Rat TreeVector::tail_amplitude(const Node& t) const {
  auto it = tails_.find(t);
  return it == tails_.end() ? Rat(0) : it->second;
}

Rat TreeVector::value_at(const Node& t) const {
  auto it = coeffs_.find(t);
  if (it != coeffs_.end()) return it->second;
  for (const auto& [u, amp] : tails_) {
    if (u.depth() < t.depth() && compare(u, t) == Relation::Ancestor)
      return amp * pow2(-static_cast<long>(t.depth() - u.depth()));
  }
  return Rat(0);
}

void TreeVector::set_coeff(const Node& t, const Rat& v) {
  if (v == 0)
    coeffs_.erase(t);
  else
    coeffs_[t] = v;
}

void TreeVector::set_tail(const Node& t, const Rat& amplitude) {
  if (amplitude == 0)
    tails_.erase(t);
  else
    tails_[t] = amplitude;
}

std::uint32_t TreeVector::support_depth() const {
  std::uint32_t d = 0;
  for (const auto& [t, v] : coeffs_) d = std::max(d, t.depth());
  for (const auto& [t, v] : tails_) d = std::max(d, t.depth());
  return d;
}

std::uint32_t TreeVector::anchor_depth() const {
  std::uint32_t d = 0;
  for (const auto& [t, v] : tails_) d = std::max(d, t.depth());
  return d;
}

NodeSet TreeVector::support() const {
  NodeSet out;
  for (const auto& [t, v] : coeffs_) out.push_back(t);
  return out;
}

void TreeVector::validate() const {
  for (const auto& [t, v] : coeffs_) require_valid(t, kind_);
  for (const auto& [u, a] : tails_) require_valid(u, kind_);
  for (auto it = tails_.begin(); it != tails_.end(); ++it) {
    for (auto jt = std::next(it); jt != tails_.end(); ++jt) {
      if (comparable(it->first, jt->first))
        throw DomainError("tail anchors must be pairwise incomparable");
    }
    for (const auto& [t, v] : coeffs_) {
      if (compare(it->first, t) == Relation::Ancestor)
        throw DomainError("explicit coefficient inside a tail region");
    }
  }
}

void TreeVector::deepen_anchor(const Node& u, std::uint32_t depth) {
  auto it = tails_.find(u);
  if (it == tails_.end() || u.depth() >= depth) return;
  Rat amp = it->second;
  tails_.erase(it);
  std::vector<Node> level{u};
  Rat value = amp;
  for (std::uint32_t d = u.depth(); d < depth; ++d) {
    value /= 2;
    std::vector<Node> next;
    next.reserve(level.size() * 2);
    for (const Node& t : level) {
      next.push_back(t.child(0));
      next.push_back(t.child(1));
    }
    for (const Node& t : next) coeffs_[t] += value;  // region was empty below u
    level = std::move(next);
  }
  for (const Node& t : level) tails_[t] += value;
  // Clean zeros that could appear if a coefficient cancelled.
  for (auto c = coeffs_.begin(); c != coeffs_.end();) {
    if (c->second == 0)
      c = coeffs_.erase(c);
    else
      ++c;
  }
}

TreeVector TreeVector::deepened(std::uint32_t depth) const {
  TreeVector out = *this;
  NodeSet anchors;
  for (const auto& [u, a] : tails_) anchors.push_back(u);
  for (const Node& u : anchors) out.deepen_anchor(u, depth);
  return out;
}

void TreeVector::align(TreeVector& a, TreeVector& b) {
  for (bool changed = true; changed;) {
    changed = false;
    for (TreeVector* first : {&a, &b}) {
      TreeVector* second = (first == &a) ? &b : &a;
      for (const auto& [u, amp] : first->tails_) {
        std::uint32_t need = u.depth();
        for (const auto& [t, v] : second->coeffs_)
          if (compare(u, t) == Relation::Ancestor) need = std::max(need, t.depth());
        for (const auto& [t, v] : second->tails_)
          if (compare(u, t) == Relation::Ancestor) need = std::max(need, t.depth());
        if (need > u.depth()) {
          first->deepen_anchor(u, need);
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
  }
}

TreeVector& TreeVector::operator+=(const TreeVector& o) {
  if (kind_ != o.kind_) throw DomainError("mixed tree kinds");
  TreeVector rhs = o;
  align(*this, rhs);
  for (const auto& [t, v] : rhs.coeffs_) {
    Rat s = coeff(t) + v;
    set_coeff(t, s);
  }
  for (const auto& [t, v] : rhs.tails_) {
    Rat s = tail_amplitude(t) + v;
    set_tail(t, s);
  }
  return *this;
}

TreeVector& TreeVector::operator-=(const TreeVector& o) { return *this += -o; }

TreeVector TreeVector::operator-() const { return scaled(Rat(-1)); }

TreeVector TreeVector::scaled(const Rat& r) const {
  TreeVector out(kind_);
  if (r == 0) return out;
  for (const auto& [t, v] : coeffs_) out.coeffs_[t] = v * r;
  for (const auto& [t, v] : tails_) out.tails_[t] = v * r;
  return out;
}

bool TreeVector::same_vector(const TreeVector& o) const {
  if (kind_ != o.kind_) return false;
  TreeVector a = *this, b = o;
  align(a, b);
  return a.coeffs_ == b.coeffs_ && a.tails_ == b.tails_;
}

TreeVector TreeVector::restricted(const NodeSet& keep, const NodeSet& keep_subtrees) const {
  TreeVector out(kind_);
  for (const auto& [t, v] : coeffs_)
    if (contains(keep, t)) out.coeffs_[t] = v;
  for (const auto& [u, a] : tails_)
    if (contains(keep_subtrees, u)) out.tails_[u] = a;
  return out;
}

TreeVector TreeVector::without_coeffs(const NodeSet& zeroed) const {
  std::uint32_t need = 0;
  for (const Node& e : zeroed)
    for (const auto& [u, a] : tails_)
      if (compare(u, e) == Relation::Ancestor) need = std::max(need, e.depth());
  TreeVector out = (need > 0) ? deepened(need) : *this;
  for (const Node& e : zeroed) out.coeffs_.erase(e);
  return out;
}

TreeVector TreeVector::with_signs(const SignMap& theta) const {
  auto sign_of = [&theta](const Node& t) {
    auto it = theta.find(t);
    if (it == theta.end()) return 1;
    if (it->second != 1 && it->second != -1) throw DomainError("signs must be ±1");
    return it->second;
  };
  TreeVector out(kind_);
  for (const auto& [t, v] : coeffs_) out.coeffs_[t] = v * sign_of(t);
  for (const auto& [u, a] : tails_) out.tails_[u] = a * sign_of(u);
  return out;
}

std::string TreeVector::format() const {
  std::ostringstream os;
  os << "kind=" << kind_letter(kind_) << " depth=" << support_depth() << "\n";
  for (const auto& [t, v] : coeffs_) os << t.str() << " " << rat_string(v) << "\n";
  for (const auto& [t, v] : tails_) os << "tail " << t.str() << " " << rat_string(v) << "\n";
  return os.str();
}

TreeVector TreeVector::parse(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::optional<TreeVector> out;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    if (!out) {
      if (tok.rfind("kind=", 0) != 0 || tok.size() != 6)
        throw ParseError("vector file must start with kind=B|M");
      out = TreeVector(kind_from_letter(tok[5]));
      continue;  // remaining header fields (depth=...) are informational
    }
    bool tail = (tok == "tail");
    if (tail && !(ls >> tok)) throw ParseError("tail line missing node");
    Node t = Node::parse(tok);
    std::string val;
    if (!(ls >> val)) throw ParseError("missing coefficient for node " + tok);
    Rat v = parse_rat(val);
    if (tail)
      out->set_tail(t, out->tail_amplitude(t) + v);
    else
      out->set_coeff(t, out->coeff(t) + v);
  }
  if (!out) throw ParseError("empty vector file");
  out->validate();
  return *out;
}

TreeVector TreeVector::read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return parse(os.str());
}

TreeVector basis_vector(TreeKind kind, const Node& t) {
  require_valid(t, kind);
  TreeVector v(kind);
  v.set_coeff(t, Rat(1));
  return v;
}

}  // namespace treespace
