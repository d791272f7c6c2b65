#include "minimal_sets.hpp"

#include <algorithm>
#include <set>

#include "ball_lp.hpp"
#include "seq_lp.hpp"

namespace treespace {

namespace {

// Both index universes run through one engine: a norm oracle over
// finite index sets plus a rank order. The predicate "P_A x attains the
// norm" is monotone in A, so M(x) is exactly its set of minimal models.
template <class Index, class Less>
struct Engine {
  std::vector<Index> supp;  // rank ascending
  std::function<Rat(const std::vector<Index>&)> norm_of;  // norm of P_A x
  Rat full_norm;

  bool attains(const std::vector<Index>& a) const { return norm_of(a) == full_norm; }

  std::vector<Index> greedy_shrink(std::vector<Index> base) const {
    // Largest rank first, so the smallest-rank norming indices survive.
    // Once an index resists removal it resists forever: dropping more
    // elements only lowers projected norms.
    for (int k = static_cast<int>(base.size()) - 1; k >= 0; --k) {
      std::vector<Index> trial;
      trial.reserve(base.size() - 1);
      for (int j = 0; j < static_cast<int>(base.size()); ++j)
        if (j != k) trial.push_back(base[j]);
      if (attains(trial)) base = std::move(trial);
    }
    return base;
  }

  void minimal_models(std::set<std::vector<Index>>& out, std::set<Index, Less> forbidden) const {
    std::vector<Index> base;
    for (const Index& i : supp)
      if (!forbidden.count(i)) base.push_back(i);
    if (!attains(base)) return;
    std::vector<Index> a = greedy_shrink(base);
    if (out.count(a)) return;
    out.insert(a);
    for (const Index& i : a) {
      auto f = forbidden;
      f.insert(i);
      minimal_models(out, std::move(f));
    }
  }

  std::vector<std::vector<Index>> all_minimal() const {
    std::set<std::vector<Index>> out;
    minimal_models(out, {});
    return {out.begin(), out.end()};
  }

  std::vector<std::vector<Index>> exhaustive_minimal() const {
    if (supp.size() > 20) throw CapacityError("support too large for exhaustive search");
    std::vector<std::vector<Index>> attaining;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << supp.size()); ++mask) {
      std::vector<Index> a;
      for (std::size_t k = 0; k < supp.size(); ++k)
        if ((mask >> k) & 1) a.push_back(supp[k]);
      if (attains(a)) attaining.push_back(std::move(a));
    }
    std::vector<std::vector<Index>> minimal;
    for (const auto& a : attaining) {
      bool is_min = true;
      for (const auto& b : attaining) {
        if (b.size() >= a.size() || !std::includes(a.begin(), a.end(), b.begin(), b.end(),
                                                   Less{}))
          continue;
        is_min = false;
        break;
      }
      if (is_min) minimal.push_back(a);
    }
    return minimal;
  }
};

// All subsets of `universe` meeting every member of `family`.
template <class Index>
std::vector<std::vector<Index>> hitting_subsets(const std::vector<Index>& universe,
                                                const std::vector<std::vector<Index>>& family) {
  std::vector<std::vector<Index>> out;
  if (universe.size() > 20) throw CapacityError("hitting-set universe too large");
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << universe.size()); ++mask) {
    std::vector<Index> e;
    for (std::size_t k = 0; k < universe.size(); ++k)
      if ((mask >> k) & 1) e.push_back(universe[k]);
    bool hits_all = true;
    for (const auto& a : family) {
      bool hit = false;
      for (const Index& i : e)
        if (std::find(a.begin(), a.end(), i) != a.end()) {
          hit = true;
          break;
        }
      if (!hit) {
        hits_all = false;
        break;
      }
    }
    if (hits_all) out.push_back(std::move(e));
  }
  return out;
}

// Minimal hitting sets of `family`, branch-and-prune.
template <class Index>
void minimal_hitting(const std::vector<std::vector<Index>>& family, std::vector<Index>& acc,
                     std::size_t next, std::vector<std::vector<Index>>& out) {
  // find first member not hit
  std::size_t miss = family.size();
  for (std::size_t k = 0; k < family.size(); ++k) {
    bool hit = false;
    for (const Index& i : acc)
      if (std::find(family[k].begin(), family[k].end(), i) != family[k].end()) hit = true;
    if (!hit) {
      miss = k;
      break;
    }
  }
  (void)next;
  if (miss == family.size()) {
    // prune to minimal: check no element removable
    for (std::size_t j = 0; j < acc.size(); ++j) {
      std::vector<Index> trial;
      for (std::size_t k = 0; k < acc.size(); ++k)
        if (k != j) trial.push_back(acc[k]);
      bool still = true;
      for (const auto& a : family) {
        bool hit = false;
        for (const Index& i : trial)
          if (std::find(a.begin(), a.end(), i) != a.end()) hit = true;
        if (!hit) {
          still = false;
          break;
        }
      }
      if (still) return;  // not minimal; a smaller one is found elsewhere
    }
    if (std::find(out.begin(), out.end(), acc) == out.end()) out.push_back(acc);
    return;
  }
  for (const Index& i : family[miss]) {
    if (std::find(acc.begin(), acc.end(), i) != acc.end()) continue;
    acc.push_back(i);
    minimal_hitting(family, acc, next, out);
    acc.pop_back();
  }
}

struct IntLess {
  bool operator()(int a, int b) const { return a < b; }
};

Engine<int, IntLess> seq_engine(const SeqVector& x, const BackendNorm& b) {
  Engine<int, IntLess> e;
  e.supp = seq_support(x);
  e.norm_of = [x, b](const std::vector<int>& a) { return backend_norm(seq_project(x, a), b); };
  e.full_norm = backend_norm(x, b);
  return e;
}

Engine<Node, NodeLess> tree_engine(const TreeVector& x) {
  Engine<Node, NodeLess> e;
  e.supp = x.support();
  e.norm_of = [x](const NodeSet& a) { return tree_norm(x.restricted(a)); };
  e.full_norm = tree_norm(x);
  return e;
}

}  // namespace

std::vector<int> minimal_norming_set(const SeqVector& x, const BackendNorm& b) {
  if (x.empty()) throw DomainError("minimal norming set of the zero vector is undefined");
  auto e = seq_engine(x, b);
  return e.greedy_shrink(e.supp);
}

SeqMinimalReport all_minimal_sets(const SeqVector& x, const BackendNorm& b, SearchMode mode) {
  if (x.empty()) throw DomainError("zero vector");
  auto e = seq_engine(x, b);
  SeqMinimalReport r;
  if (mode == SearchMode::Exhaustive)
    r.finite = e.exhaustive_minimal();
  else
    r.finite = e.all_minimal();
  return r;
}

NodeSet minimal_norming_set(const TreeVector& x) {
  if (x.is_zero()) throw DomainError("minimal norming set of the zero vector is undefined");
  if (x.has_tails()) throw DomainError("greedy sweep requires finite support");
  auto e = tree_engine(x);
  return e.greedy_shrink(e.supp);
}

TreeMinimalReport all_minimal_sets(const TreeVector& x, SearchMode mode) {
  if (x.is_zero()) throw DomainError("zero vector");
  TreeMinimalReport r;
  auto e = tree_engine(x);
  if (mode == SearchMode::Exhaustive)
    r.finite = e.exhaustive_minimal();
  else
    r.finite = e.all_minimal();
  if (x.has_tails()) {
    // Norming branches, one symbolic member per anchor whose branch
    // attains the norm; coefficients along a branch are all critical
    // once zeros are dropped, the tail below is strictly positive.
    Rat norm = tree_norm(x);
    for (const FrontierBranch& fb : frontier_branches(x)) {
      if (fb.exit != FrontierBranch::Exit::Tail || fb.sum != norm) continue;
      SymbolicBranch sb;
      sb.anchor = fb.at;
      for (std::uint32_t d = x.kind() == TreeKind::RootedBinary ? 0 : 1; d <= fb.at.depth();
           ++d) {
        Node u = fb.at.ancestor(d);
        if (x.coeff(u) != 0) sb.prefix.push_back(u);
      }
      r.infinite.push_back(std::move(sb));
    }
  }
  return r;
}

namespace {

// D(n): the first n elements of a symbolic branch in rank order. Past
// the anchor the branch fans out; all depth-(n-|prefix|) continuations
// are enumerated.
std::vector<NodeSet> branch_prefixes(const SymbolicBranch& sb, int n) {
  if (n <= static_cast<int>(sb.prefix.size())) {
    return {NodeSet(sb.prefix.begin(), sb.prefix.begin() + n)};
  }
  int extra = n - static_cast<int>(sb.prefix.size());
  if (extra > 16) throw CapacityError("branch prefix expansion too deep");
  std::vector<NodeSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << extra); ++mask) {
    NodeSet s = sb.prefix;
    Node t = sb.anchor;
    for (int k = 0; k < extra; ++k) {
      t = t.child((mask >> k) & 1u);
      s.push_back(t);
    }
    out.push_back(std::move(s));
  }
  return out;
}

template <class Index, class Vec, class NormOf, class RemoveOf>
Rat gamma_from_families(const Vec& x, const std::vector<std::vector<Index>>& g_n,
                        std::vector<std::vector<Index>>& e_n, bool& materialized,
                        NormOf&& norm_of, RemoveOf&& remove_of) {
  std::set<Index> universe_set;
  for (const auto& a : g_n)
    for (const Index& i : a) universe_set.insert(i);
  std::vector<Index> universe(universe_set.begin(), universe_set.end());
  if (universe.size() <= 12) {
    e_n = hitting_subsets(universe, g_n);
    materialized = true;
  } else {
    std::vector<Index> acc;
    minimal_hitting(g_n, acc, 0, e_n);
    materialized = false;  // removing more only shrinks the norm, so the
                           // max over all hitting sets is over minimal ones
  }
  if (e_n.empty()) throw DomainError("no hitting sets; G_n is empty");
  Rat worst = -1;
  for (const auto& e : e_n) worst = std::max(worst, norm_of(remove_of(x, e)));
  return Rat(1) - worst;
}

}  // namespace

SeqFamilyReport families(const SeqVector& x, const BackendNorm& b, int n) {
  if (backend_norm(x, b) != 1) throw DomainError("families require a unit vector");
  SeqFamilyReport r;
  r.n = n;
  r.f_n = all_minimal_sets(x, b).finite;  // M^inf is empty for finite support
  r.g_n = r.f_n;
  r.gamma = gamma_from_families<int>(
      x, r.g_n, r.e_n, r.e_n_materialized,
      [&](const SeqVector& v) { return backend_norm(v, b); },
      [](const SeqVector& v, const std::vector<int>& e) { return seq_remove(v, e); });
  if (r.gamma <= 0) throw std::logic_error("gamma_n must be positive");
  return r;
}

TreeFamilyReport families(const TreeVector& x, int n) {
  if (tree_norm(x) != 1) throw DomainError("families require a unit vector");
  TreeFamilyReport r;
  r.n = n;
  TreeMinimalReport m = all_minimal_sets(x);
  // F_n keeps the finite members containing no D(n).
  std::vector<NodeSet> dn_all;
  for (const SymbolicBranch& sb : m.infinite)
    for (NodeSet& s : branch_prefixes(sb, n)) dn_all.push_back(sorted_unique(std::move(s)));
  for (const NodeSet& a : m.finite) {
    bool keeps = true;
    for (const NodeSet& dn : dn_all) {
      if (std::includes(a.begin(), a.end(), dn.begin(), dn.end(), NodeLess{})) {
        keeps = false;
        break;
      }
    }
    if (keeps) r.f_n.push_back(a);
  }
  r.g_n = r.f_n;
  for (const NodeSet& dn : dn_all)
    if (std::find(r.g_n.begin(), r.g_n.end(), dn) == r.g_n.end()) r.g_n.push_back(dn);
  r.gamma = gamma_from_families<Node>(
      x, r.g_n, r.e_n, r.e_n_materialized,
      [](const TreeVector& v) { return tree_norm(v); },
      [](const TreeVector& v, const NodeSet& e) { return v.without_coeffs(e); });
  if (r.gamma <= 0) throw std::logic_error("gamma_n must be positive");
  return r;
}

SeqWeakNbhdBound weak_nbhd_bound(const SeqVector& x, const BackendNorm& b) {
  for (const auto& [i, v] : x)
    if (v < 0) throw DomainError("positive cone expected; apply signs first");
  SeqFamilyReport fam = families(x, b, 1);
  SeqWeakNbhdBound out;
  std::set<int> e;
  for (const auto& a : all_minimal_sets(x, b).finite)
    if (!a.empty()) e.insert(a.front());
  out.e.assign(e.begin(), e.end());
  Rat min_x;
  bool first = true;
  for (int i : out.e) {
    Rat xi = x.count(i) ? x.at(i) : Rat(0);
    if (first || xi < min_x) min_x = xi;
    first = false;
  }
  out.tolerance = min_x / 2;
  out.delta = fam.gamma / 2;
  out.bound = 2 - out.delta;
  std::vector<SeqConstraint> side;
  for (int i : out.e) {
    SeqConstraint c;
    c.coeffs[i] = 1;
    Rat xi = x.count(i) ? x.at(i) : Rat(0);
    c.lo = xi - out.tolerance;
    c.hi = xi + out.tolerance;
    side.push_back(std::move(c));
  }
  out.verified_sup = seq_max_distance(x, b, side).value;
  if (out.verified_sup > out.bound)
    throw std::logic_error("weak neighborhood bound violated");
  return out;
}

TreeWeakNbhdBound weak_nbhd_bound(const TreeVector& x) {
  for (const auto& [t, v] : x.coeffs())
    if (v < 0) throw DomainError("positive cone expected; apply signs first");
  for (const auto& [t, v] : x.tails())
    if (v < 0) throw DomainError("positive cone expected; apply signs first");
  TreeFamilyReport fam = families(x, 1);
  TreeMinimalReport m = all_minimal_sets(x);
  TreeWeakNbhdBound out;
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
  Rat min_x;
  bool first = true;
  for (const Node& t : out.e) {
    Rat xt = abs(x.value_at(t));
    if (first || xt < min_x) min_x = xt;
    first = false;
  }
  out.tolerance = min_x / 2;
  out.delta = fam.gamma / 2;
  out.bound = 2 - out.delta;
  out.depth = std::max<std::uint32_t>(x.support_depth(), 1) + 1;
  std::vector<TreeSideConstraint> side;
  for (const Node& t : out.e) {
    TreeSideConstraint c;
    c.coeffs[t] = 1;
    c.lo = x.value_at(t) - out.tolerance;
    c.hi = x.value_at(t) + out.tolerance;
    side.push_back(std::move(c));
  }
  out.verified_sup = tree_max_distance(x, out.depth, side).value;
  if (out.verified_sup > out.bound)
    throw std::logic_error("weak neighborhood bound violated");
  return out;
}

SeqDeltaRefutation delta_refutation(const SeqVector& x_in, const BackendNorm& b) {
  SeqDeltaRefutation out;
  out.backend = b;
  SeqVector x;
  for (const auto& [i, v] : x_in)
    if (v != 0) x[i] = abs(v);  // sign changes are isometries
  if (backend_norm(x, b) != 1) throw DomainError("delta refutation requires a unit vector");
  out.x = x;

  // s: largest index attaining the maximal coordinate.
  Rat maxc = 0;
  for (const auto& [i, v] : x) maxc = std::max(maxc, v);
  for (const auto& [i, v] : x)
    if (v == maxc) out.s = i;

  out.delta = 1 - maxc / 2;
  out.eta = Rat(1, 2);
  out.n = 1;
  SeqFamilyReport fam = families(x, b, 1);
  out.gamma = fam.gamma;
  out.f_n = fam.f_n;

  // z* = average of the norming functionals over F_n and e*_s.
  SeqVector zstar;
  for (const auto& a : fam.f_n) {
    SeqVector psi = norming_functional(x, a, b);
    for (const auto& [i, v] : psi) zstar[i] += v;
  }
  zstar[out.s] += 1;
  Rat m1 = Rat(static_cast<long>(fam.f_n.size()) + 1);
  for (auto& [i, v] : zstar) v /= m1;
  if (backend_dual_norm(zstar, b) > 1) throw std::logic_error("z* must lie in the dual ball");
  out.functional = zstar;
  out.slice_threshold = 1 - out.delta / m1;
  if (seq_apply(zstar, x) <= out.slice_threshold)
    throw std::logic_error("x must lie in its own slice");

  out.bound = 2 - out.eta * out.gamma;
  SeqConstraint slice;
  slice.coeffs = zstar;
  slice.lo = out.slice_threshold;
  SeqMaxResult max = seq_max_distance(x, b, {slice});
  out.verified_max = max.value;
  out.maximizer = max.maximizer;
  out.fresh_slots = static_cast<int>(max.window.size() - x.size());
  if (out.verified_max > out.bound) throw std::logic_error("slice bound violated");
  out.verdict = SeqDeltaRefutation::Verdict::Refuted;
  return out;
}

TreeDeltaRefutation delta_refutation(const TreeVector& x_in) {
  TreeDeltaRefutation out;
  out.x = TreeVector(x_in.kind());
  if (x_in.has_tails()) {
    out.verdict = TreeDeltaRefutation::Verdict::NotApplicable;
    out.reason = "norming branches present; the finite-set criterion does not apply";
    return out;
  }
  SignMap theta;
  for (const auto& [t, v] : x_in.coeffs())
    if (v < 0) theta[t] = -1;
  TreeVector x = x_in.with_signs(theta);
  if (tree_norm(x) != 1) throw DomainError("delta refutation requires a unit vector");
  out.x = x;

  Rat maxc = 0;
  for (const auto& [t, v] : x.coeffs()) maxc = std::max(maxc, v);
  for (const auto& [t, v] : x.coeffs())
    if (v == maxc) out.s = t;  // map order = rank order, last wins

  out.delta = 1 - maxc / 2;
  out.eta = Rat(1, 2);
  out.n = 1;
  TreeFamilyReport fam = families(x, 1);
  out.gamma = fam.gamma;
  out.f_n = fam.f_n;

  CoeffMap zstar;
  for (const NodeSet& a : fam.f_n)
    for (const Node& t : a) zstar[t] += 1;  // positive cone: signs are +
  zstar[out.s] += 1;
  Rat m1 = Rat(static_cast<long>(fam.f_n.size()) + 1);
  for (auto& [t, v] : zstar) v /= m1;
  out.functional = zstar;
  out.slice_threshold = 1 - out.delta / m1;

  Rat at_x = 0;
  for (const auto& [t, v] : zstar) at_x += v * x.coeff(t);
  if (at_x <= out.slice_threshold) throw std::logic_error("x must lie in its own slice");

  out.bound = 2 - out.eta * out.gamma;
  out.depth = std::max<std::uint32_t>(x.support_depth(), 1) + 1;
  TreeSideConstraint slice;
  slice.coeffs = zstar;
  slice.lo = out.slice_threshold;
  TreeMaxResult max = tree_max_distance(x, out.depth, {slice});
  out.verified_max = max.value;
  out.maximizer = max.maximizer;
  if (out.verified_max > out.bound) throw std::logic_error("slice bound violated");
  out.verdict = TreeDeltaRefutation::Verdict::Refuted;
  return out;
}

}  // namespace treespace
