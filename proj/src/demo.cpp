#include "demo.hpp"

#include <functional>
#include <sstream>

#include "certificates.hpp"
#include "construct.hpp"
#include "dot.hpp"
#include "geometry.hpp"
#include "minimal_sets.hpp"
#include "points.hpp"

namespace treespace {

namespace {

struct Table {
  std::ostringstream os;
  bool ok = true;

  void line(const std::string& name, const std::string& expected, const std::string& got) {
    bool pass = expected == got;
    ok = ok && pass;
    os << (pass ? "  ok  " : " FAIL ") << name << ": expected " << expected << ", got " << got
       << "\n";
  }
  void claim(const std::string& name, bool pass) {
    ok = ok && pass;
    os << (pass ? "  ok  " : " FAIL ") << name << "\n";
  }
};

}  // namespace

std::string demo_report(bool& ok) {
  Table t;
  t.os << "exact reproduction of the worked examples\n";
  t.os << "=========================================\n\n";

  // Tree combinatorics.
  t.line("rank of (1,0) in the modified tree", "5",
         std::to_string(rank_in(Node::from_bits({1, 0}), TreeKind::ModifiedBinary)));
  t.claim("{(0),(1,0)} is an antichain",
          is_antichain({Node::from_bits({0}), Node::from_bits({1, 0})}));
  t.claim("{(0),(1,0)} is a unit antichain of the modified tree",
          is_unit_antichain(TreeKind::ModifiedBinary,
                            {Node::from_bits({0}), Node::from_bits({1, 0})}));

  // Norms of the dyadic vectors.
  for (std::uint32_t d : {2u, 3u, 4u}) {
    TreeVector x = standard_vector(StandardVector::RootedDyadic, d, true);
    t.line("rooted dyadic vector with tails, depth " + std::to_string(d), "1/1",
           rat_string(tree_norm(x)));
    TreeVector xf = standard_vector(StandardVector::RootedDyadic, d, false);
    t.line("rooted dyadic vector truncated at depth " + std::to_string(d),
           rat_string(1 - pow2(-static_cast<long>(d))), rat_string(tree_norm(xf)));
  }
  TreeVector g = standard_vector(StandardVector::ModifiedDyadic, 3, true);
  t.line("modified dyadic vector norm", "1/1", rat_string(tree_norm(g)));
  TreeVector w = standard_vector(StandardVector::ShiftedDyadic, 3, true);
  t.line("shifted dyadic vector norm", "1/1", rat_string(tree_norm(w)));
  t.line("shifted vector at (1)", "0/1", rat_string(w.coeff(Node::from_bits({1}))));
  t.line("shifted vector at (1,0)", "1/2", rat_string(w.coeff(Node::from_bits({1, 0}))));

  // The drop at E = {(0),(1,0)}.
  NodeSet e{Node::from_bits({0}), Node::from_bits({1, 0})};
  t.line("||w - P_E w|| for E = {(0),(1,0)}", "1/2",
         rat_string(tree_norm(w.without_coeffs(e))));

  // Certification.
  DaugavetCheck cg = daugavet_check(g);
  t.claim("modified dyadic vector certified (all branches norm)",
          cg.is_daugavet && cg.method == DaugavetCheck::Method::AllBranchesNorm);
  DaugavetCheck cw = daugavet_check(w);
  t.claim("shifted point refuted with E = {(0),(1,0)} and value 1/2",
          !cw.is_daugavet && cw.refuting_e == e && cw.refuting_value == Rat(1, 2));

  // Delta witness at distance exactly two.
  NodeSet branch;
  for (std::uint32_t d = 1; d <= 4; ++d) branch.push_back(Node(d, 0));
  NormedFunctional phi = branch_mixture_functional(TreeKind::RootedBinary, {branch}, {Rat(1)});
  DeltaWitness dw = delta_witness_rooted(phi, Rat(1, 4), 10);
  t.line("delta witness distance", "2/1", rat_string(dw.distance));
  t.claim("delta witness stays in the slice", dw.functional_value > phi.claimed_norm() - Rat(1, 4));

  // Midpoint and level identities of the z construction.
  bool midpoints = true;
  for (std::uint32_t d = 0; d < 4 && midpoints; ++d)
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << d) && midpoints; ++bits) {
      Node u(d, bits);
      TreeVector pair = basis_vector(TreeKind::RootedBinary, u.child(0)) +
                        basis_vector(TreeKind::RootedBinary, u.child(1));
      TreeVector lhs = (z_vector(u.child(0)) + z_vector(u.child(1))).scaled(Rat(1, 2));
      TreeVector rhs = z_vector(u) + pair.scaled(Rat(1, 2));
      midpoints = lhs.same_vector(rhs);
    }
  t.claim("midpoint identity of the z vectors to level 4", midpoints);
  {
    TreeVector x = standard_vector(StandardVector::RootedDyadic, 4, true);
    TreeVector yn = standard_vector(StandardVector::RootedDyadic, 2, false);
    TreeVector tail(TreeKind::RootedBinary);
    for (const Node& u : nodes_to_depth(TreeKind::RootedBinary, 3))
      if (u.depth() == 3) {
        tail.set_coeff(u, Rat(1, 8));
        tail.set_tail(u, Rat(1, 8));
      }
    t.claim("level identity: truncation plus the tail equals the dyadic vector",
            (yn + tail).same_vector(x));
  }

  // Dyadic tree of copies.
  {
    std::map<Node, TreeVector, NodeLess> tree;
    for (std::uint32_t d = 0; d <= 2; ++d)
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << d); ++bits) {
        Node u(d, bits);
        tree.emplace(u, dyadic_tree_element(u));
      }
    DyadicCheck dc = dyadic_check(tree, 2);
    t.claim("the dyadic vector roots a dyadic tree", dc.is_dyadic && dc.averaging_identity);
    t.line("level-2 distance in the dyadic tree", "3/2", rat_string(dc.min_level_distance));
  }

  // Convex decompositions.
  {
    TreeVector y(TreeKind::ModifiedBinary);
    y.set_coeff(Node::from_bits({0}), Rat(1, 2));
    y.set_coeff(Node::from_bits({1, 0}), Rat(1, 2));
    ConvexDecomposition f = decompose_into_f(y);
    f.validate();
    t.claim("sibling-pair decomposition recombines exactly", true);
    DaugavetHullDecomposition db = decompose_into_db(y);
    t.claim("hull decomposition: every term certified on all branches", !db.terms.empty());
  }

  // daugavetify into a weak neighborhood.
  {
    TreeVector y(TreeKind::ModifiedBinary);
    y.set_coeff(Node::from_bits({0}), Rat(1, 2));
    NodeSet mbranch{Node::from_bits({0}), Node::from_bits({0, 0})};
    NormedFunctional psi =
        branch_mixture_functional(TreeKind::ModifiedBinary, {mbranch}, {Rat(1)});
    Daugavetified dg = daugavetify(y, {psi}, Rat(1, 4), 12);
    t.claim("daugavetify lands on a certified point inside the neighborhood",
            dg.certificate.is_daugavet && abs(psi(dg.x - y)) < Rat(1, 4));
  }

  // Minimal sets on the classical backends.
  {
    SeqVector x{{1, Rat(1)}, {2, Rat(1, 2)}, {3, Rat(1)}};
    auto greedy = minimal_norming_set(x, BackendNorm::c0());
    t.claim("sup-norm greedy minimal set is {1}", greedy == std::vector<int>{1});
    SeqVector y{{1, Rat(1, 4)}, {2, Rat(3, 4)}};
    auto all = all_minimal_sets(y, BackendNorm::l1());
    t.claim("absolute-sum minimal sets equal the support",
            all.finite == std::vector<std::vector<int>>{{1, 2}});
    SeqFamilyReport fam = families(SeqVector{{1, Rat(1, 2)}, {2, Rat(1, 2)}},
                                   BackendNorm::l1(), 1);
    t.line("gamma_1 for the balanced two-point vector", "1/2", rat_string(fam.gamma));
  }

  // Subsymmetric refutations.
  {
    SeqDeltaRefutation r = delta_refutation(SeqVector{{1, Rat(1, 4)}, {2, Rat(3, 4)}},
                                            BackendNorm::l1());
    t.line("slice parameter for the weighted two-point vector", "5/8", rat_string(r.delta));
    t.claim("refutation bound strictly below two",
            r.verified_max <= r.bound && r.bound < 2 && r.s == 2);
    SeqDeltaRefutation rc = delta_refutation(SeqVector{{1, Rat(1)}}, BackendNorm::c0());
    t.claim("sup-norm basis vector refuted", rc.bound < 2);
    SeqDeltaRefutation rl = delta_refutation(
        SeqVector{{1, Rat(1)}},
        BackendNorm::lorentz({Rat(1), Rat(1, 2), Rat(1, 4)}));
    t.claim("Lorentz basis vector refuted with bound at most 3/2", rl.bound <= Rat(3, 2));
  }

  // Geometry.
  {
    ProbeReport lasq = lasq_probe(200, 3, 7);
    t.claim("no locally-almost-square direction below 5/4", !lasq.counterexample);
    TreeVector y00 = basis_vector(TreeKind::ModifiedBinary, Node::from_bits({0, 0}));
    t.line("octahedral value at e_(0,0)", "3/2", rat_string(octahedral_value(y00)));
    WeakDiameter wd = weak_nbhd_diameter_db(g, Rat(1, 2));
    t.claim("weak neighborhood of the certified point has diameter below 1/2",
            wd.diameter_bound < Rat(1, 2));
  }

  ok = t.ok;
  t.os << "\n" << (t.ok ? "all demo lines passed" : "DEMO FAILURES PRESENT") << "\n";
  return t.os.str();
}

}  // namespace treespace
