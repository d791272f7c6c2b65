#include <doctest.h>

#include "backend.hpp"

using namespace treespace;

TEST_CASE("backend norms") {
  SeqVector x{{1, Rat(1, 4)}, {2, Rat(3, 4)}};
  CHECK(backend_norm(x, BackendNorm::l1()) == 1);

  BackendNorm lorentz = BackendNorm::lorentz({Rat(1), Rat(1, 2)});
  SeqVector y{{1, Rat(3, 4)}, {3, Rat(3, 4)}};
  CHECK(backend_norm(y, lorentz) == Rat(9, 8));  // 3/4 + 3/8

  CHECK(backend_norm({}, BackendNorm::c0()) == 0);
  CHECK(backend_norm(SeqVector{{2, Rat(-5, 4)}}, BackendNorm::c0()) == Rat(5, 4));
}

TEST_CASE("lorentz validation") {
  CHECK_THROWS_AS(BackendNorm::lorentz({Rat(1, 2)}), DomainError);
  CHECK_THROWS_AS(BackendNorm::lorentz({Rat(1), Rat(5, 4)}), DomainError);
  CHECK_THROWS_AS(BackendNorm::lorentz({Rat(1), Rat(0)}), DomainError);
  CHECK_NOTHROW(BackendNorm::lorentz({Rat(1), Rat(1, 2), Rat(1, 4), Rat(1, 8)}));
}

TEST_CASE("backend parsing") {
  CHECK(BackendNorm::parse("l1").tag == BackendNorm::Tag::L1);
  CHECK(BackendNorm::parse("c0").tag == BackendNorm::Tag::C0);
  BackendNorm b = BackendNorm::parse("lorentz:1,1/2,1/4");
  CHECK(b.weights.size() == 3);
  CHECK(b.str() == "lorentz:1/1,1/2,1/4");
  CHECK_THROWS_AS(BackendNorm::parse("lp2"), ParseError);
}

TEST_CASE("dual norms") {
  SeqVector f{{1, Rat(1, 2)}, {2, Rat(-1, 2)}};
  CHECK(backend_dual_norm(f, BackendNorm::c0()) == 1);        // l1 of f
  CHECK(backend_dual_norm(f, BackendNorm::l1()) == Rat(1, 2));  // sup of f
  BackendNorm lor = BackendNorm::lorentz({Rat(1), Rat(1, 2)});
  // top-1: (1/2)/1; top-2: 1/(3/2) = 2/3
  CHECK(backend_dual_norm(f, lor) == Rat(2, 3));
}

TEST_CASE("norming functionals attain and stay dual-unit") {
  BackendNorm lor = BackendNorm::lorentz({Rat(1), Rat(1, 2), Rat(1, 4)});
  SeqVector x{{1, Rat(1, 2)}, {2, Rat(3, 4)}, {5, Rat(-1, 2)}};
  std::vector<int> a{1, 2, 5};
  SeqVector psi = norming_functional(x, a, lor);
  CHECK(seq_apply(psi, x) == backend_norm(seq_project(x, a), lor));
  CHECK(backend_dual_norm(psi, lor) == 1);

  SeqVector e2 = norming_functional(x, {2}, BackendNorm::c0());
  CHECK(seq_apply(e2, x) == Rat(3, 4));
  CHECK_THROWS_AS(norming_functional(x, a, BackendNorm::c0()), DomainError);

  SeqVector sgn = norming_functional(x, a, BackendNorm::l1());
  CHECK(seq_apply(sgn, x) == backend_norm(seq_project(x, a), BackendNorm::l1()));
  CHECK(backend_dual_norm(sgn, BackendNorm::l1()) == 1);
}
