#include <doctest.h>

#include "certificates.hpp"

using namespace treespace;

namespace {
Node N(std::initializer_list<int> bits) { return Node::from_bits(bits); }

void expect_roundtrip(const std::string& cert) {
  CHECK_NOTHROW(verify_certificate(cert));
}

void expect_tamper_detected(std::string cert, const std::string& from,
                            const std::string& to) {
  auto pos = cert.find(from);
  REQUIRE(pos != std::string::npos);
  cert.replace(pos, from.size(), to);
  CHECK_THROWS(verify_certificate(cert));
}
}  // namespace

TEST_CASE("daugavet certificates round trip and resist tampering") {
  TreeVector g = standard_vector(StandardVector::ModifiedDyadic, 2, true);
  std::string cert = daugavet_certificate(g, daugavet_check(g));
  expect_roundtrip(cert);
  expect_tamper_detected(cert, "sum 1/1", "sum 3/4");

  TreeVector w = standard_vector(StandardVector::ShiftedDyadic, 2, true);
  std::string refut = daugavet_certificate(w, daugavet_check(w));
  expect_roundtrip(refut);
  expect_tamper_detected(refut, "drop-value 1/2", "drop-value 1/4");
  expect_tamper_detected(refut, "refuting-e 0,10", "refuting-e 0,1");
}

TEST_CASE("rooted refutation certificates") {
  TreeVector xb = standard_vector(StandardVector::RootedDyadic, 3, true);
  std::string cert = rooted_refutation_certificate(xb, daugavet_refute_rooted(xb));
  expect_roundtrip(cert);
  expect_tamper_detected(cert, "drop-value 1/2", "drop-value 1/3");
}

TEST_CASE("delta witness certificates") {
  NodeSet branch;
  for (std::uint32_t d = 1; d <= 4; ++d) branch.push_back(Node(d, 0));
  NormedFunctional phi =
      branch_mixture_functional(TreeKind::RootedBinary, {branch}, {Rat(1)});
  DeltaWitness w = delta_witness_rooted(phi, Rat(1, 8), 10);
  std::string cert = delta_witness_certificate(phi, Rat(1, 8), w);
  expect_roundtrip(cert);
  expect_tamper_detected(cert, "distance 2/1", "distance 1/1");
}

TEST_CASE("delta refutation certificates") {
  SeqDeltaRefutation r =
      delta_refutation(SeqVector{{1, Rat(1, 4)}, {2, Rat(3, 4)}}, BackendNorm::l1());
  std::string cert = delta_refutation_certificate(r);
  expect_roundtrip(cert);
  expect_tamper_detected(cert, "gamma 1/4", "gamma 1/2");
  expect_tamper_detected(cert, "bound 15/8", "bound 2/1");
}

TEST_CASE("decomposition certificates") {
  TreeVector y(TreeKind::ModifiedBinary);
  y.set_coeff(N({0}), Rat(1, 2));
  y.set_coeff(N({1, 0}), Rat(1, 2));
  std::string f = decomposition_certificate(decompose_into_f(y));
  expect_roundtrip(f);
  expect_tamper_detected(f, "0 1/2", "0 1/4");

  std::string db = db_decomposition_certificate(decompose_into_db(y));
  expect_roundtrip(db);
  expect_tamper_detected(db, "weight0", "weight0 1/7\n#");
}

TEST_CASE("daugavetify certificates") {
  TreeVector y(TreeKind::ModifiedBinary);
  y.set_coeff(N({0}), Rat(1, 2));
  NormedFunctional phi =
      branch_mixture_functional(TreeKind::ModifiedBinary, {NodeSet{N({0})}}, {Rat(1)});
  Daugavetified d = daugavetify(y, {phi}, Rat(1, 4), 10);
  std::string cert = daugavetify_certificate(y, {phi}, Rat(1, 4), d);
  expect_roundtrip(cert);
  expect_tamper_detected(cert, "eps 1/4", "eps 0/1");
}

TEST_CASE("probe certificates") {
  ProbeReport lasq = lasq_probe(50, 3, 3);
  std::string cert = probe_certificate(lasq, *lasq.sphere_lp_min);
  expect_roundtrip(cert);
  expect_tamper_detected(cert, "sphere-lp-min 5/4", "sphere-lp-min 6/5");

  ProbeReport oct = octahedral_probe(50, 3, 3);
  expect_roundtrip(probe_certificate(oct));

  TreeVector g = standard_vector(StandardVector::ModifiedDyadic, 2, true);
  WeakDiameter wd = weak_nbhd_diameter_db(g, Rat(1, 2));
  std::string wcert = weak_diameter_certificate(g, Rat(1, 2), wd);
  expect_roundtrip(wcert);
  expect_tamper_detected(wcert, "level 5", "level 4");
}

TEST_CASE("malformed certificates are parse errors") {
  CHECK_THROWS_AS(verify_certificate("not a certificate"), ParseError);
  CHECK_THROWS_AS(verify_certificate("treespace-certificate v1\ntype unknown-kind\n"),
                  ParseError);
}
