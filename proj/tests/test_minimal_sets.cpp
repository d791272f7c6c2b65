#include <doctest.h>

#include <set>

#include "construct.hpp"
#include "minimal_sets.hpp"
#include "rng.hpp"
#include "support/oracles.hpp"

using namespace treespace;

namespace {
Node N(std::initializer_list<int> bits) { return Node::from_bits(bits); }

SeqVector random_seq(Rng& rng, int max_index, int max_support) {
  SeqVector x;
  int count = 1 + static_cast<int>(rng.below(max_support));
  for (int k = 0; k < count; ++k) {
    int i = 1 + static_cast<int>(rng.below(max_index));
    Rat v = rng.signed_dyadic(4);
    if (v != 0) x[i] = v;
  }
  return x;
}
}  // namespace

TEST_CASE("greedy minimal norming sets keep the smallest ranks") {
  SeqVector x{{1, Rat(1)}, {2, Rat(1, 2)}, {3, Rat(1)}};
  CHECK(minimal_norming_set(x, BackendNorm::c0()) == std::vector<int>{1});

  SeqVector y{{1, Rat(1, 3)}, {4, Rat(1, 5)}, {9, Rat(2, 7)}};
  CHECK(minimal_norming_set(y, BackendNorm::l1()) == seq_support(y));

  TreeVector pair(TreeKind::RootedBinary);
  pair.set_coeff(N({0}), Rat(1));
  pair.set_coeff(N({1}), Rat(1));
  CHECK(minimal_norming_set(pair) == NodeSet{N({0})});

  CHECK_THROWS_AS(minimal_norming_set(SeqVector{}, BackendNorm::l1()), DomainError);
}

TEST_CASE("all minimal sets on the worked examples") {
  SeqVector x{{1, Rat(1, 4)}, {2, Rat(3, 4)}};
  auto l1 = all_minimal_sets(x, BackendNorm::l1());
  CHECK(l1.finite == std::vector<std::vector<int>>{{1, 2}});

  SeqVector ones{{1, Rat(1)}, {2, Rat(1)}};
  auto c0 = all_minimal_sets(ones, BackendNorm::c0());
  CHECK(c0.finite == std::vector<std::vector<int>>{{1}, {2}});

  // The full dyadic vector: every branch norming, no finite member.
  TreeVector xb = standard_vector(StandardVector::RootedDyadic, 4, true);
  TreeMinimalReport tr = all_minimal_sets(xb);
  CHECK(tr.finite.empty());
  CHECK(tr.infinite.size() == 16);
  for (const SymbolicBranch& sb : tr.infinite) {
    CHECK(sb.anchor.depth() == 4);
    CHECK(sb.prefix.size() == 4);  // root coefficient is zero, dropped
  }
}

TEST_CASE("minimal sets match brute force") {
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    SeqVector x = random_seq(rng, 6, 5);
    if (x.empty()) continue;
    for (const BackendNorm& b :
         {BackendNorm::l1(), BackendNorm::c0(),
          BackendNorm::lorentz({Rat(1), Rat(1, 2), Rat(1, 4), Rat(1, 8)})}) {
      auto fast = all_minimal_sets(x, b).finite;
      auto brute = oracle::brute_minimal_sets(x, b);
      std::set<std::vector<int>> a(fast.begin(), fast.end()), o(brute.begin(), brute.end());
      CHECK(a == o);
      auto exhaustive = all_minimal_sets(x, b, SearchMode::Exhaustive).finite;
      std::set<std::vector<int>> e(exhaustive.begin(), exhaustive.end());
      CHECK(e == o);
      // greedy output is one of the minimal sets
      auto greedy = minimal_norming_set(x, b);
      CHECK(o.count(greedy) == 1);
    }
  }
}

TEST_CASE("tree minimal sets match brute force") {
  Rng rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    TreeKind kind = trial % 2 ? TreeKind::RootedBinary : TreeKind::ModifiedBinary;
    TreeVector x(kind);
    auto nodes = nodes_to_depth(kind, 3);
    for (int k = 0; k < 5; ++k) x.set_coeff(nodes[rng.below(nodes.size())], rng.signed_dyadic(4));
    if (x.is_zero()) continue;
    auto fast = all_minimal_sets(x).finite;
    auto brute = oracle::brute_minimal_sets_tree(x);
    std::set<NodeSet> a(fast.begin(), fast.end()), o(brute.begin(), brute.end());
    CHECK(a == o);
    CHECK(o.count(minimal_norming_set(x)) == 1);
  }
}

TEST_CASE("minimal sets are never empty and have nonzero critical coordinates") {
  Rng rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    SeqVector x = random_seq(rng, 6, 4);
    if (x.empty()) continue;
    for (const BackendNorm& b : {BackendNorm::l1(), BackendNorm::c0()}) {
      auto report = all_minimal_sets(x, b);
      CHECK(!report.finite.empty());
      Rat norm = backend_norm(x, b);
      for (const auto& a : report.finite) {
        CHECK(backend_norm(seq_project(x, a), b) == norm);
        for (int i : a) {
          CHECK(x.at(i) != 0);
          auto dropped = a;
          dropped.erase(std::find(dropped.begin(), dropped.end(), i));
          CHECK(backend_norm(seq_project(x, dropped), b) < norm);
        }
        // no member strictly inside another
        for (const auto& other : report.finite)
          if (a.size() < other.size())
            CHECK_FALSE(std::includes(other.begin(), other.end(), a.begin(), a.end()));
      }
    }
  }
}

TEST_CASE("adding mass on a minimal set grows the norm strictly") {
  Rng rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    SeqVector x = random_seq(rng, 5, 4);
    for (auto& [i, v] : x) v = abs(v);
    if (x.empty()) continue;
    for (const BackendNorm& b : {BackendNorm::l1(), BackendNorm::c0()}) {
      Rat norm = backend_norm(x, b);
      for (const auto& a : all_minimal_sets(x, b).finite) {
        int i = a[rng.below(a.size())];
        for (const Rat& t : {Rat(1, 4), Rat(1, 2), Rat(1)}) {
          SeqVector grown = seq_project(x, a);
          grown[i] += t;
          CHECK(backend_norm(grown, b) > norm);
        }
      }
    }
  }
}

TEST_CASE("families on finite support collapse to the minimal sets") {
  SeqVector x{{1, Rat(1, 2)}, {2, Rat(1, 2)}};
  SeqFamilyReport fam = families(x, BackendNorm::l1(), 1);
  CHECK(fam.f_n == all_minimal_sets(x, BackendNorm::l1()).finite);
  CHECK(fam.g_n == fam.f_n);
  std::set<std::vector<int>> e(fam.e_n.begin(), fam.e_n.end());
  CHECK(e == std::set<std::vector<int>>{{1}, {2}, {1, 2}});
  CHECK(fam.gamma == Rat(1, 2));
  for (int n : {2, 3}) CHECK(families(x, BackendNorm::l1(), n).f_n == fam.f_n);
  CHECK_THROWS_AS(families(SeqVector{{1, Rat(1, 3)}}, BackendNorm::l1(), 1), DomainError);
}

TEST_CASE("families of the dyadic tail vector") {
  TreeVector x = standard_vector(StandardVector::RootedDyadic, 4, true);
  TreeFamilyReport fam = families(x, 1);
  CHECK(fam.f_n.empty());
  std::set<NodeSet> g(fam.g_n.begin(), fam.g_n.end());
  CHECK(g == std::set<NodeSet>{{N({0})}, {N({1})}});
  REQUIRE(fam.e_n.size() == 1);
  CHECK(fam.e_n.front() == NodeSet{N({0}), N({1})});
  CHECK(fam.gamma == Rat(1, 2));
}

TEST_CASE("hitting sets drop the norm strictly") {
  Rng rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    SeqVector x = random_seq(rng, 5, 4);
    if (x.empty()) continue;
    Rat norm = backend_norm(x, BackendNorm::l1());
    for (auto& [i, v] : x) v /= norm;
    SeqFamilyReport fam = families(x, BackendNorm::l1(), 1);
    for (const auto& e : fam.e_n)
      CHECK(backend_norm(seq_remove(x, e), BackendNorm::l1()) < 1);
    CHECK(fam.gamma > 0);
  }
}

TEST_CASE("weak neighborhood bounds") {
  SeqVector x{{1, Rat(1, 2)}, {2, Rat(1, 2)}};
  SeqWeakNbhdBound b = weak_nbhd_bound(x, BackendNorm::l1());
  CHECK(b.e == std::vector<int>{1, 2});
  CHECK(b.delta == Rat(1, 4));
  CHECK(b.tolerance == Rat(1, 4));
  CHECK(b.bound == Rat(7, 4));
  CHECK(b.verified_sup <= b.bound);

  SeqVector one{{1, Rat(1)}};
  SeqWeakNbhdBound bc = weak_nbhd_bound(one, BackendNorm::c0());
  CHECK(bc.e == std::vector<int>{1});
  CHECK(bc.bound < 2);
  CHECK(bc.verified_sup <= bc.bound);

  TreeVector e0 = basis_vector(TreeKind::ModifiedBinary, N({0}));
  TreeWeakNbhdBound bt = weak_nbhd_bound(e0);
  CHECK(bt.e == NodeSet{N({0})});
  CHECK(bt.delta == Rat(1, 2));  // gamma_1 = 1
  CHECK(bt.bound == Rat(3, 2));
  CHECK(bt.verified_sup <= bt.bound);
}

TEST_CASE("1-symmetric structure of the minimal sets") {
  // On the absolute-sum and Lorentz grids every pair of members has
  // equal size and the vector is constant on the symmetric difference.
  std::vector<Rat> levels{Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1)};
  for (const BackendNorm& b :
       {BackendNorm::l1(), BackendNorm::lorentz({Rat(1), Rat(1, 2), Rat(1, 4)})}) {
    for (std::size_t c0 = 0; c0 < levels.size(); ++c0)
      for (std::size_t c1 = 0; c1 < levels.size(); ++c1)
        for (std::size_t c2 = 0; c2 < levels.size(); ++c2) {
          SeqVector x;
          if (levels[c0] != 0) x[1] = levels[c0];
          if (levels[c1] != 0) x[2] = levels[c1];
          if (levels[c2] != 0) x[3] = levels[c2];
          if (x.empty()) continue;
          auto report = all_minimal_sets(x, b);
          for (const auto& a : report.finite)
            for (const auto& c : report.finite) {
              CHECK(a.size() == c.size());
              std::set<int> sym;
              for (int i : a)
                if (std::find(c.begin(), c.end(), i) == c.end()) sym.insert(i);
              for (int i : c)
                if (std::find(a.begin(), a.end(), i) == a.end()) sym.insert(i);
              std::set<Rat> values;
              for (int i : sym) values.insert(abs(x.at(i)));
              CHECK(values.size() <= 1);
            }
        }
  }
}

TEST_CASE("delta refutations on the worked examples") {
  SeqDeltaRefutation r =
      delta_refutation(SeqVector{{1, Rat(1, 4)}, {2, Rat(3, 4)}}, BackendNorm::l1());
  CHECK(r.verdict == SeqDeltaRefutation::Verdict::Refuted);
  CHECK(r.s == 2);
  CHECK(r.delta == Rat(5, 8));
  CHECK(r.eta == Rat(1, 2));
  CHECK(r.gamma == Rat(1, 4));
  CHECK(r.bound == Rat(15, 8));
  CHECK(r.verified_max <= r.bound);

  SeqDeltaRefutation rc = delta_refutation(SeqVector{{1, Rat(1)}}, BackendNorm::c0());
  CHECK(rc.gamma == 1);
  CHECK(rc.bound == Rat(3, 2));
  CHECK(rc.verified_max <= rc.bound);

  SeqDeltaRefutation rl = delta_refutation(
      SeqVector{{1, Rat(1)}}, BackendNorm::lorentz({Rat(1), Rat(1, 2), Rat(1, 4)}));
  CHECK(rl.bound <= Rat(3, 2));

  CHECK_THROWS_AS(delta_refutation(SeqVector{{1, Rat(1, 2)}}, BackendNorm::l1()),
                  DomainError);
}

TEST_CASE("tree delta refutation and the not-applicable verdict") {
  TreeVector x(TreeKind::ModifiedBinary);
  x.set_coeff(N({0}), Rat(1, 4));
  x.set_coeff(N({1}), Rat(3, 4));
  TreeDeltaRefutation r = delta_refutation(x);
  CHECK(r.verdict == TreeDeltaRefutation::Verdict::Refuted);
  CHECK(r.verified_max <= r.bound);
  CHECK(r.bound < 2);
  CHECK(r.s == N({1}));

  TreeVector g = standard_vector(StandardVector::ModifiedDyadic, 3, true);
  TreeDeltaRefutation rg = delta_refutation(g);
  CHECK(rg.verdict == TreeDeltaRefutation::Verdict::NotApplicable);
}
