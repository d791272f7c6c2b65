#include "construct.hpp"

#include <algorithm>
#include <map>

namespace treespace {

bool is_f_element(const TreeVector& z) {
  if (z.has_tails()) return false;
  if (z.is_zero()) return true;
  NodeSet supp;
  for (const auto& [t, v] : z.coeffs()) {
    if (v != 1 && v != -1) return false;
    supp.push_back(t);
  }
  return is_unit_antichain(z.kind(), supp);
}

void ConvexDecomposition::validate() const {
  Rat total = 0;
  TreeVector sum(target.kind());
  for (const ConvexTerm& term : terms) {
    if (term.weight <= 0) throw DomainError("convex weights must be positive");
    total += term.weight;
    sum += term.vector.scaled(term.weight);
  }
  if (total != 1) throw DomainError("convex weights must sum to one");
  if (!sum.same_vector(target)) throw DomainError("decomposition does not recombine");
}

namespace {

struct WeightedF {
  Rat weight;
  CoeffMap coeffs;  // values in {±1}
};

// Positive-cone core of the sibling-pair induction. `pairs` holds the
// deepest-first shortlex sibling pairs meeting the support.
std::vector<WeightedF> decompose_positive(const TreeVector& y) {
  std::vector<std::pair<Node, Node>> pairs;
  {
    std::map<Node, bool, NodeLess> seen;
    for (const auto& [t, v] : y.coeffs()) {
      if (t.depth() < 2) continue;  // the base pair {(0),(1)} is handled separately
      Node left = t.bit(t.depth() - 1) == 0 ? t : t.sibling();
      if (!seen.count(left)) {
        seen[left] = true;
        pairs.emplace_back(left, left.sibling());
      }
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.first.rank() > b.first.rank(); });
  }
  TreeVector work = y;
  std::vector<std::pair<std::pair<Node, Node>, std::pair<Rat, Rat>>> stripped;
  for (const auto& pr : pairs) {
    Rat a0 = work.coeff(pr.first), a1 = work.coeff(pr.second);
    stripped.push_back({pr, {a0, a1}});
    work.set_coeff(pr.first, Rat(0));
    work.set_coeff(pr.second, Rat(0));
  }
  // Base: support inside {(0),(1)}.
  std::vector<WeightedF> terms;
  {
    Rat a0 = work.coeff(Node::from_bits({0})), a1 = work.coeff(Node::from_bits({1}));
    Rat c = Rat(1) - a0 - a1;
    if (c < 0) throw DomainError("vector leaves the unit ball");
    if (c > 0) terms.push_back({c, {}});
    if (a0 > 0) terms.push_back({a0, {{Node::from_bits({0}), Rat(1)}}});
    if (a1 > 0) terms.push_back({a1, {{Node::from_bits({1}), Rat(1)}}});
  }
  // Reattach pairs shallowest-first, splitting the terms that vanish on
  // the ancestor segment of the pair.
  for (auto it = stripped.rbegin(); it != stripped.rend(); ++it) {
    const auto& [pr, vals] = *it;
    const auto& [a0, a1] = vals;
    if (a0 == 0 && a1 == 0) continue;
    Node t = pr.first.parent();
    Rat m = 0;
    std::vector<WeightedF> in, out;
    for (WeightedF& term : terms) {
      bool vanishes = true;
      for (std::uint32_t d = 1; d <= t.depth(); ++d)
        if (term.coeffs.count(t.ancestor(d))) {
          vanishes = false;
          break;
        }
      if (vanishes) {
        m += term.weight;
        in.push_back(std::move(term));
      } else {
        out.push_back(std::move(term));
      }
    }
    Rat c = m - a0 - a1;
    if (c < 0) throw DomainError("vector leaves the unit ball");
    std::vector<WeightedF> next = std::move(out);
    for (const WeightedF& term : in) {
      if (a0 > 0) {
        WeightedF plus = term;
        plus.weight = term.weight * a0 / m;
        plus.coeffs[pr.first] = 1;
        next.push_back(std::move(plus));
      }
      if (a1 > 0) {
        WeightedF plus = term;
        plus.weight = term.weight * a1 / m;
        plus.coeffs[pr.second] = 1;
        next.push_back(std::move(plus));
      }
      if (c > 0) {
        WeightedF keep = term;
        keep.weight = term.weight * c / m;
        next.push_back(std::move(keep));
      }
    }
    // Merge identical supports to keep the term count in check.
    std::map<std::vector<std::pair<Node, Rat>>, Rat> merged;
    for (WeightedF& term : next) {
      std::vector<std::pair<Node, Rat>> key(term.coeffs.begin(), term.coeffs.end());
      merged[key] += term.weight;
    }
    terms.clear();
    for (auto& [key, weight] : merged) {
      WeightedF term;
      term.weight = weight;
      for (auto& [n, v] : key) term.coeffs[n] = v;
      terms.push_back(std::move(term));
    }
  }
  return terms;
}

}  // namespace

ConvexDecomposition decompose_into_f(const TreeVector& y) {
  if (y.kind() != TreeKind::ModifiedBinary)
    throw DomainError("the decomposition runs on the modified tree");
  if (y.has_tails()) throw CapacityError("finite support required");
  if (tree_norm(y) > 1) throw DomainError("vector leaves the unit ball");

  SignMap theta;
  for (const auto& [t, v] : y.coeffs())
    if (v < 0) theta[t] = -1;
  TreeVector positive = y.with_signs(theta);

  ConvexDecomposition out;
  out.target = y;
  for (WeightedF& wf : decompose_positive(positive)) {
    TreeVector z(TreeKind::ModifiedBinary);
    for (const auto& [t, v] : wf.coeffs) z.set_coeff(t, v);
    out.terms.push_back({wf.weight, z.with_signs(theta)});
  }
  out.validate();
  for (const ConvexTerm& term : out.terms)
    if (!is_f_element(term.vector))
      throw std::logic_error("decomposition produced a non-extreme term");
  return out;
}

TreeVector shift(const Node& t0, const TreeVector& v) {
  require_valid(t0, v.kind());
  TreeVector out(v.kind());
  for (const auto& [t, val] : v.coeffs()) out.set_coeff(t0.concat(t), val);
  for (const auto& [t, amp] : v.tails()) out.set_tail(t0.concat(t), amp);
  return out;
}

TreeVector standard_vector(StandardVector name, std::uint32_t depth, bool with_tails) {
  if (depth < (name == StandardVector::ShiftedDyadic ? 2u : 1u))
    throw DomainError("depth too small for this vector");
  TreeKind kind = name == StandardVector::RootedDyadic ? TreeKind::RootedBinary
                                                       : TreeKind::ModifiedBinary;
  TreeVector v(kind);
  for (std::uint32_t d = 1; d <= depth; ++d) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << d); ++bits) {
      Node t(d, bits);
      v.set_coeff(t, pow2(-static_cast<long>(d)));
    }
  }
  if (with_tails) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << depth); ++bits)
      v.set_tail(Node(depth, bits), pow2(-static_cast<long>(depth)));
  }
  if (name == StandardVector::ShiftedDyadic) return reshuffle_left(v);
  return v;
}

TreeVector reshuffle_left(const TreeVector& v) {
  if (v.kind() != TreeKind::ModifiedBinary) throw DomainError("modified tree expected");
  Node n1 = Node::from_bits({1});
  Node n10 = Node::from_bits({1, 0});
  auto move_node = [&](const Node& t) {
    if (t.bit(0) == 0) return t;  // the (0)-subtree stays put
    return n10.concat(t.strip_prefix(n1));
  };
  TreeVector out(v.kind());
  for (const auto& [t, val] : v.coeffs()) out.set_coeff(move_node(t), val);
  for (const auto& [t, amp] : v.tails()) out.set_tail(move_node(t), amp);
  return out;
}

namespace {

// Shifted dyadic tail below b: all the mass of the dyadic unit vector,
// exactly one anchor.
TreeVector shifted_dyadic_tail(const Node& b, const Rat& amplitude) {
  TreeVector g(TreeKind::ModifiedBinary);
  g.set_tail(b, amplitude);
  return g;
}

}  // namespace

Daugavetified daugavetify(const TreeVector& y, const std::vector<NormedFunctional>& phis,
                          const Rat& eps, std::uint32_t depth_budget) {
  if (y.kind() != TreeKind::ModifiedBinary) throw DomainError("modified tree expected");
  if (y.has_tails()) throw CapacityError("finite support required");
  if (eps <= 0) throw DomainError("eps must be positive");
  if (tree_norm(y) > 1) throw DomainError("vector leaves the unit ball");
  for (const NormedFunctional& phi : phis) phi.validate();

  Daugavetified out;
  out.x = y;
  // First strict successor of t on the leftmost antichain t^1, t^01,
  // t^001, … whose shifted dyadic tail every functional barely sees.
  auto scan_invisible = [&](const Node& t, const Rat& budget) {
    Node walk = t;
    while (walk.depth() + 1 <= depth_budget) {
      Node cand = walk.child(1);
      bool ok = true;
      for (const NormedFunctional& phi : phis) {
        Rat val = 0;
        for (const auto& [u, c] : phi.coeffs())
          if (compare(cand, u) == Relation::Ancestor)
            val += c * pow2(-static_cast<long>(u.depth() - cand.depth()));
        if (abs(val) >= budget) ok = false;
      }
      if (ok) return cand;
      walk = walk.child(0);
    }
    throw CapacityError("depth budget exhausted scanning for an invisible subtree");
  };

  if (y.is_zero()) {
    // Degenerate case: one shifted dyadic tail is the whole output.
    Node b = scan_invisible(Node::from_bits({0}), eps);
    out.x = shifted_dyadic_tail(b, Rat(1));
    out.anchors = {b};
    out.amplitudes = {Rat(1)};
  } else {
    std::uint32_t m = y.support_depth();
    Rat budget = eps * pow2(-static_cast<long>(m));
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
      Node t(m, bits);
      Rat path = 0;
      for (std::uint32_t d = 1; d <= m; ++d) path += abs(y.coeff(t.ancestor(d)));
      Rat mu = Rat(1) - path;
      if (mu <= 0) continue;
      Node b = scan_invisible(t, budget);
      out.x += shifted_dyadic_tail(b, mu);
      out.anchors.push_back(b);
      out.amplitudes.push_back(mu);
    }
  }
  if (tree_norm(out.x) != 1) throw std::logic_error("daugavetify must land on the sphere");
  for (const NormedFunctional& phi : phis) {
    Rat moved = abs(phi(out.x - y));
    if (moved >= eps) throw std::logic_error("left the weak neighborhood");
  }
  out.certificate = daugavet_check(out.x);
  if (!out.certificate.is_daugavet)
    throw std::logic_error("daugavetify output failed certification");
  return out;
}

DaugavetHullDecomposition decompose_into_db(const TreeVector& y) {
  ConvexDecomposition f = decompose_into_f(y);
  DaugavetHullDecomposition out;
  out.target = y;
  for (const ConvexTerm& term : f.terms) {
    const TreeVector& z = term.vector;
    std::uint32_t m = std::max<std::uint32_t>(1, z.support_depth());
    TreeVector graft(TreeKind::ModifiedBinary);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
      Node t(m, bits);
      Rat path = 0;
      for (std::uint32_t d = 1; d <= m; ++d) path += abs(z.coeff(t.ancestor(d)));
      if (path == 0) graft.set_tail(t, Rat(1));
    }
    DaugavetHullTerm ht;
    ht.weight = term.weight / 2;
    ht.plus = z + graft;
    ht.minus = z - graft;
    ht.plus_cert = daugavet_check(ht.plus);
    ht.minus_cert = daugavet_check(ht.minus);
    if (!ht.plus_cert.is_daugavet || !ht.minus_cert.is_daugavet)
      throw std::logic_error("hull term failed certification");
    out.terms.push_back(std::move(ht));
  }
  // Exact recombination of the ± pairs.
  TreeVector sum(TreeKind::ModifiedBinary);
  Rat total = 0;
  for (const DaugavetHullTerm& ht : out.terms) {
    sum += ht.plus.scaled(ht.weight) + ht.minus.scaled(ht.weight);
    total += 2 * ht.weight;
  }
  if (total != 1 || !sum.same_vector(y)) throw std::logic_error("hull recombination failed");
  return out;
}

}  // namespace treespace
