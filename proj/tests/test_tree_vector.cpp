#include <doctest.h>

#include "rng.hpp"
#include "tree_norm.hpp"
#include "tree_vector.hpp"

using namespace treespace;

namespace {
Node N(std::initializer_list<int> bits) { return Node::from_bits(bits); }
}  // namespace

TEST_CASE("parse and format round trip") {
  std::string text = "kind=M depth=2\n0 1/2\n10 -1/4\ntail 11 1/8\n";
  TreeVector v = TreeVector::parse(text);
  CHECK(v.coeff(N({0})) == Rat(1, 2));
  CHECK(v.coeff(N({1, 0})) == Rat(-1, 4));
  CHECK(v.tail_amplitude(N({1, 1})) == Rat(1, 8));
  TreeVector again = TreeVector::parse(v.format());
  CHECK(again.same_vector(v));
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(TreeVector::parse("0 1/2\n"), ParseError);
  CHECK_THROWS_AS(TreeVector::parse("kind=Q depth=1\n"), ParseError);
  CHECK_THROWS_AS(TreeVector::parse("kind=M depth=1\n0 x\n"), ParseError);
  // root node is rejected under the modified tree by validation
  CHECK_THROWS_AS(TreeVector::parse("kind=M depth=1\n\xce\xb5 1\n"), DomainError);
}

TEST_CASE("structure validation") {
  TreeVector v(TreeKind::ModifiedBinary);
  v.set_tail(N({0}), Rat(1));
  v.set_coeff(N({0, 1}), Rat(1, 2));  // explicit below an anchor
  CHECK_THROWS_AS(v.validate(), DomainError);

  TreeVector w(TreeKind::ModifiedBinary);
  w.set_tail(N({0}), Rat(1));
  w.set_tail(N({0, 1}), Rat(1));  // nested anchors
  CHECK_THROWS_AS(w.validate(), DomainError);
}

TEST_CASE("tail value_at") {
  TreeVector v(TreeKind::ModifiedBinary);
  v.set_coeff(N({0}), Rat(1, 2));
  v.set_tail(N({0}), Rat(1, 2));
  CHECK(v.value_at(N({0})) == Rat(1, 2));
  CHECK(v.value_at(N({0, 1})) == Rat(1, 4));
  CHECK(v.value_at(N({0, 1, 1})) == Rat(1, 8));
  CHECK(v.value_at(N({1})) == 0);
}

TEST_CASE("deepening preserves the vector") {
  TreeVector v(TreeKind::ModifiedBinary);
  v.set_coeff(N({0}), Rat(1, 2));
  v.set_tail(N({0}), Rat(1, 2));
  TreeVector d = v.deepened(3);
  CHECK(d.same_vector(v));
  CHECK(d.coeff(N({0, 1})) == Rat(1, 4));
  CHECK(d.tail_amplitude(N({0, 1, 1})) == Rat(1, 16));
  CHECK(tree_norm(d) == tree_norm(v));
}

TEST_CASE("arithmetic aligns tails exactly") {
  TreeVector a(TreeKind::ModifiedBinary);
  a.set_tail(N({0}), Rat(1));
  TreeVector b(TreeKind::ModifiedBinary);
  b.set_coeff(N({0, 0, 1}), Rat(1, 4));
  TreeVector sum = a + b;
  sum.validate();
  CHECK(sum.value_at(N({0, 0, 1})) == Rat(1, 8) + Rat(1, 4));
  CHECK(sum.value_at(N({0, 1})) == Rat(1, 4));
  TreeVector back = sum - b;
  CHECK(back.same_vector(a));
  CHECK((a - a).is_zero());
}

TEST_CASE("projection and removal") {
  TreeVector v(TreeKind::ModifiedBinary);
  v.set_coeff(N({0}), Rat(1, 2));
  v.set_coeff(N({1}), Rat(1, 3));
  v.set_tail(N({1, 0}), Rat(1, 5));

  TreeVector p = v.restricted({N({0})});
  CHECK(p.coeff(N({0})) == Rat(1, 2));
  CHECK(p.coeff(N({1})) == 0);
  CHECK_FALSE(p.has_tails());

  TreeVector q = v.restricted({N({0})}, {N({1, 0})});
  CHECK(q.tail_amplitude(N({1, 0})) == Rat(1, 5));

  TreeVector r = v.without_coeffs({N({0})});
  CHECK(r.coeff(N({0})) == 0);
  CHECK(r.tail_amplitude(N({1, 0})) == Rat(1, 5));

  // removal inside a tail region deepens first
  TreeVector s = v.without_coeffs({N({1, 0, 1})});
  CHECK(s.value_at(N({1, 0, 1})) == 0);
  CHECK(s.value_at(N({1, 0, 0})) == Rat(1, 10));

  CHECK(v.restricted({}).is_zero());
  TreeVector fin(TreeKind::ModifiedBinary);
  fin.set_coeff(N({0}), Rat(2, 7));
  CHECK(fin.restricted(fin.support()).same_vector(fin));
}

TEST_CASE("sign flips are involutive and act on tails") {
  TreeVector v(TreeKind::ModifiedBinary);
  v.set_coeff(N({0}), Rat(1, 2));
  v.set_tail(N({1}), Rat(1, 3));
  SignMap theta{{N({0}), -1}, {N({1}), -1}};
  TreeVector f = v.with_signs(theta);
  CHECK(f.coeff(N({0})) == Rat(-1, 2));
  CHECK(f.tail_amplitude(N({1})) == Rat(-1, 3));
  CHECK(f.with_signs(theta).same_vector(v));
  SignMap bad{{N({0}), 2}};
  CHECK_THROWS_AS(v.with_signs(bad), DomainError);
}

TEST_CASE("norm invariance under random sign flips") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    TreeVector v(TreeKind::ModifiedBinary);
    for (const Node& t : nodes_to_depth(TreeKind::ModifiedBinary, 3))
      if (rng.coin()) v.set_coeff(t, rng.signed_dyadic());
    SignMap theta;
    for (const Node& t : v.support())
      if (rng.coin()) theta[t] = -1;
    CHECK(tree_norm(v.with_signs(theta)) == tree_norm(v));
  }
}
