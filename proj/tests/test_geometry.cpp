#include <doctest.h>

#include "construct.hpp"
#include "geometry.hpp"

using namespace treespace;

namespace {
Node N(std::initializer_list<int> bits) { return Node::from_bits(bits); }
}  // namespace

TEST_CASE("weak neighborhood diameter of the certified point") {
  TreeVector g = standard_vector(StandardVector::ModifiedDyadic, 2, true);
  WeakDiameter d = weak_nbhd_diameter_db(g, Rat(1, 2));
  CHECK(d.level == 5);  // 2^-5 < 1/16, strictly
  CHECK(d.tail_bound == Rat(1, 32));
  CHECK(d.diameter_bound < Rat(1, 2));
  CHECK(d.lp_count > 0);

  WeakDiameter tiny = weak_nbhd_diameter_db(g, Rat(1, 8));
  CHECK(tiny.level == 7);
  CHECK(tiny.diameter_bound < Rat(1, 8));

  // Whole-ball widths are trivially consistent.
  WeakDiameter wide = weak_nbhd_diameter_db(g, Rat(4));
  CHECK(wide.diameter_bound < 4);

  TreeVector w = standard_vector(StandardVector::ShiftedDyadic, 2, true);
  CHECK_THROWS_AS(weak_nbhd_diameter_db(w, Rat(1, 2)), DomainError);
}

TEST_CASE("locally almost square fails at exactly 5/4") {
  TreeVector x(TreeKind::ModifiedBinary);
  x.set_coeff(N({0}), Rat(1, 4));
  x.set_coeff(N({1}), Rat(3, 4));

  TreeVector e1 = basis_vector(TreeKind::ModifiedBinary, N({1}));
  CHECK(std::max(tree_norm(x + e1), tree_norm(x - e1)) == Rat(7, 4));
  TreeVector e00 = basis_vector(TreeKind::ModifiedBinary, N({0, 0}));
  CHECK(std::max(tree_norm(x + e00), tree_norm(x - e00)) == Rat(5, 4));

  ProbeReport r = lasq_probe(500, 3, 42);
  CHECK_FALSE(r.counterexample);
  REQUIRE(r.sphere_lp_min.has_value());
  CHECK(*r.sphere_lp_min == Rat(5, 4));
  CHECK(r.worst_value >= Rat(5, 4));
}

TEST_CASE("local octahedrality fails at 3/2") {
  TreeVector e0 = basis_vector(TreeKind::ModifiedBinary, N({0}));
  CHECK(octahedral_value(e0) == 1);
  TreeVector e00 = basis_vector(TreeKind::ModifiedBinary, N({0, 0}));
  CHECK(octahedral_value(e00) == Rat(3, 2));
  CHECK_THROWS_AS(octahedral_value(e0.scaled(Rat(1, 2))), DomainError);

  ProbeReport r = octahedral_probe(500, 3, 43);
  CHECK_FALSE(r.counterexample);
  CHECK(r.worst_value <= Rat(3, 2));
}

TEST_CASE("sphere sampling is deterministic and exact") {
  Rng a(99), b(99);
  for (int i = 0; i < 20; ++i) {
    TreeVector va = random_sphere_vector(a, TreeKind::ModifiedBinary, 3);
    TreeVector vb = random_sphere_vector(b, TreeKind::ModifiedBinary, 3);
    CHECK(va.same_vector(vb));
    CHECK(tree_norm(va) == 1);
  }
}

TEST_CASE("slice diameter two at certified points") {
  // daugavetify into a random slice, then check the slice still holds
  // points nearly opposite the certified point.
  TreeVector y(TreeKind::ModifiedBinary);
  y.set_coeff(N({0}), Rat(1, 4));
  NodeSet branch{N({1}), N({1, 0})};
  NormedFunctional phi =
      branch_mixture_functional(TreeKind::ModifiedBinary, {branch}, {Rat(1)});
  Daugavetified d = daugavetify(y, {phi}, Rat(1, 4), 10);
  SliceSup sup = slice_sup_distance(d.x, phi, Rat(1, 4), d.x.support_depth() + 1);
  CHECK(sup.value >= 2 - Rat(1, 4));
}
