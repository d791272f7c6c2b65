#include <doctest.h>

#include "construct.hpp"
#include "points.hpp"
#include "rng.hpp"
#include "support/oracles.hpp"

using namespace treespace;

namespace {
Node N(std::initializer_list<int> bits) { return Node::from_bits(bits); }
}  // namespace

TEST_CASE("delta membership") {
  TreeVector x = standard_vector(StandardVector::ModifiedDyadic, 3, true);
  CHECK(delta_member(x, -x, Rat(1, 100)));
  CHECK_FALSE(delta_member(x, x.scaled(Rat(1, 2)), Rat(1, 2)));
}

TEST_CASE("antichain game equals brute enumeration") {
  Rng rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    TreeVector x(TreeKind::ModifiedBinary);
    auto nodes = nodes_to_depth(TreeKind::ModifiedBinary, 3);
    for (int k = 0; k < 7; ++k)
      x.set_coeff(nodes[rng.below(nodes.size())], rng.signed_dyadic(4));
    AntichainGame game = min_drop_over_unit_antichains(x);
    auto brute = oracle::brute_min_drop(x, 3);
    CHECK(game.min_value == brute.min_value);
    if (!game.minimizer.empty()) {
      CHECK(is_unit_antichain(TreeKind::ModifiedBinary, game.minimizer));
      CHECK(tree_norm(x.without_coeffs(game.minimizer)) == game.min_value);
    }
  }
}

TEST_CASE("antichain game with tails is stable under deeper enumeration") {
  Rng rng(67);
  for (int trial = 0; trial < 12; ++trial) {
    TreeVector x(TreeKind::ModifiedBinary);
    auto nodes = nodes_to_depth(TreeKind::ModifiedBinary, 2);
    for (int k = 0; k < 3; ++k)
      x.set_coeff(nodes[rng.below(nodes.size())], rng.unit_dyadic(3));
    // attach a tail below a free depth-2 node
    Node anchor = N({1, 1});
    if (x.coeff(anchor) == 0 && x.coeff(N({1})) == 0) {
      x.set_tail(anchor, Rat(1, 2));
    } else {
      continue;
    }
    AntichainGame game = min_drop_over_unit_antichains(x);
    for (std::uint32_t depth : {3u, 4u}) {
      auto brute = oracle::brute_min_drop(x, depth);
      CHECK(game.min_value == brute.min_value);
    }
  }
}

TEST_CASE("certification of the dyadic point and refutation of the shifted point") {
  TreeVector g = standard_vector(StandardVector::ModifiedDyadic, 3, true);
  DaugavetCheck cg = daugavet_check(g);
  CHECK(cg.is_daugavet);
  CHECK(cg.method == DaugavetCheck::Method::AllBranchesNorm);

  TreeVector w = standard_vector(StandardVector::ShiftedDyadic, 3, true);
  DaugavetCheck cw = daugavet_check(w);
  CHECK_FALSE(cw.is_daugavet);
  CHECK(cw.refuting_e == NodeSet{N({0}), N({1, 0})});
  CHECK(cw.refuting_value == Rat(1, 2));

  TreeVector e0 = basis_vector(TreeKind::ModifiedBinary, N({0}));
  DaugavetCheck ce = daugavet_check(e0);
  CHECK_FALSE(ce.is_daugavet);
  CHECK(ce.refuting_e == NodeSet{N({0})});
  CHECK(ce.refuting_value == 0);

  CHECK_THROWS_AS(daugavet_check(e0.scaled(Rat(1, 2))), DomainError);
  CHECK_THROWS_AS(daugavet_check(basis_vector(TreeKind::RootedBinary, Node::root())),
                  DomainError);
}

TEST_CASE("certified points stay certified at deeper antichain enumeration") {
  TreeVector g = standard_vector(StandardVector::ModifiedDyadic, 2, true);
  for (std::uint32_t depth : {3u, 4u}) {
    auto brute = oracle::brute_min_drop(g, depth);
    CHECK(brute.min_value == 1);
  }
}

TEST_CASE("rooted refutations") {
  TreeVector xb = standard_vector(StandardVector::RootedDyadic, 4, true);
  RootedRefutation r = daugavet_refute_rooted(xb);
  CHECK(r.e == NodeSet{N({0}), N({1})});
  CHECK(r.value == Rat(1, 2));

  TreeVector eroot = basis_vector(TreeKind::RootedBinary, Node::root());
  RootedRefutation re = daugavet_refute_rooted(eroot);
  CHECK(re.e == NodeSet{Node::root()});
  CHECK(re.value == 0);

  Rng rng(71);
  int done = 0;
  for (int trial = 0; done < 100; ++trial) {
    TreeVector x(TreeKind::RootedBinary);
    auto nodes = nodes_to_depth(TreeKind::RootedBinary, 3);
    for (int k = 0; k < 6; ++k)
      x.set_coeff(nodes[rng.below(nodes.size())], rng.unit_dyadic(4));
    Rat norm = tree_norm(x);
    if (norm == 0) continue;
    x = x.scaled(1 / norm);
    RootedRefutation rr = daugavet_refute_rooted(x);
    CHECK(rr.value < 1);
    CHECK(is_antichain(rr.e));
    ++done;
  }
}

TEST_CASE("slice suprema") {
  TreeVector x = standard_vector(StandardVector::ModifiedDyadic, 2, true);
  // Whole ball: phi = 0 with eps = 2.
  SliceSup whole = slice_sup_distance(x, NormedFunctional::zero(TreeKind::ModifiedBinary),
                                      Rat(2), 3);
  CHECK(whole.value == 1 + tree_norm(x));

  // Unit slice around a basis functional: pinned near e_(0).
  TreeVector e0 = basis_vector(TreeKind::ModifiedBinary, N({0}));
  NormedFunctional phi =
      branch_mixture_functional(TreeKind::ModifiedBinary, {NodeSet{N({0})}}, {Rat(1)});
  SliceSup s = slice_sup_distance(e0, phi, Rat(1, 2), 2);
  CHECK(s.value == 1);
  // Grid oracle at quarter resolution reaches the same optimum.
  Rat grid = oracle::grid_slice_sup(e0, phi.coeffs(), Rat(1, 2), 2, 2);
  CHECK(grid == 1);

  // For a certified point every branch-slice keeps far points at reach.
  NodeSet branch{N({1}), N({1, 1})};
  NormedFunctional psi =
      branch_mixture_functional(TreeKind::ModifiedBinary, {branch}, {Rat(1)});
  SliceSup far = slice_sup_distance(x, psi, Rat(1, 4), 3);
  CHECK(far.value == 2);

  CHECK_THROWS_AS(slice_sup_distance(e0, phi, Rat(0), 2), DomainError);
}

TEST_CASE("z vectors and the delta witness") {
  CHECK(z_vector(N({0, 0})).coeffs() ==
        CoeffMap{{N({1}), Rat(1)}, {N({0, 1}), Rat(1)}});
  CHECK(z_vector(N({0, 1})).coeffs() ==
        CoeffMap{{N({1}), Rat(1)}, {N({0, 0}), Rat(1)}});

  NodeSet branch;
  for (std::uint32_t d = 1; d <= 4; ++d) branch.push_back(Node(d, 0));
  NormedFunctional phi =
      branch_mixture_functional(TreeKind::RootedBinary, {branch}, {Rat(1)});
  DeltaWitness w = delta_witness_rooted(phi, Rat(1, 4), 10);
  CHECK(w.distance == 2);
  CHECK(w.functional_value > phi.claimed_norm() - Rat(1, 4));
  CHECK(tree_norm(w.y) == 1);

  // Depth budget too small to scan a successor.
  CHECK_THROWS_AS(delta_witness_rooted(phi, Rat(1, 4), 1), CapacityError);
  // A slice the dyadic vector misses: claimed 1, width too small around
  // a single deep node.
  NormedFunctional narrow = branch_mixture_functional(
      TreeKind::RootedBinary, {NodeSet{N({0, 0, 0})}}, {Rat(1)});
  CHECK_THROWS_AS(delta_witness_rooted(narrow, Rat(1, 4), 10), DomainError);
}

TEST_CASE("dyadic trees") {
  std::map<Node, TreeVector, NodeLess> tree;
  for (std::uint32_t d = 0; d <= 3; ++d)
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << d); ++bits) {
      Node u(d, bits);
      tree.emplace(u, dyadic_tree_element(u));
    }
  DyadicCheck c = dyadic_check(tree, 3);
  CHECK(c.is_dyadic);
  CHECK(c.averaging_identity);
  CHECK(c.min_level_distance == 2 - pow2(-2));

  // Constant tree: trivially dyadic with distance zero.
  std::map<Node, TreeVector, NodeLess> constant;
  TreeVector x = standard_vector(StandardVector::RootedDyadic, 2, true);
  for (std::uint32_t d = 0; d <= 2; ++d)
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << d); ++bits)
      constant.emplace(Node(d, bits), x);
  DyadicCheck cc = dyadic_check(constant, 2);
  CHECK(cc.is_dyadic);
  CHECK(cc.min_level_distance == 0);

  // Perturbed tree: the violating node is reported.
  auto broken = tree;
  broken.at(N({0})).set_coeff(N({1}), Rat(1, 3));
  DyadicCheck cb = dyadic_check(broken, 3);
  CHECK_FALSE(cb.is_dyadic);
  REQUIRE(cb.violation.has_value());
  CHECK((*cb.violation == Node::root() || *cb.violation == N({0})));
}
