#include <doctest.h>

#include <string>

#include "treespace/treespace.h"

namespace {

struct Str {
  char* s = nullptr;
  ~Str() { ts_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

struct Vec {
  ts_vector* v = nullptr;
  ~Vec() { ts_vector_free(v); }
};

}  // namespace

TEST_CASE("c api: parse, norm, format") {
  Vec vec;
  REQUIRE(ts_vector_parse("kind=M depth=1\n0 1/2\n1 1/2\n", &vec.v) == TS_OK);
  Str norm;
  REQUIRE(ts_vector_norm(vec.v, &norm.s) == TS_OK);
  CHECK(norm.str() == "1/1");
  Str text;
  REQUIRE(ts_vector_format(vec.v, &text.s) == TS_OK);
  CHECK(text.str().find("kind=M") == 0);

  ts_vector* bad = nullptr;
  CHECK(ts_vector_parse("garbage", &bad) == TS_EPARSE);
  CHECK(std::string(ts_last_error()).size() > 0);
}

TEST_CASE("c api: standard vectors and certification") {
  Vec g;
  REQUIRE(ts_standard_vector("modified-dyadic", 3, 1, &g.v) == TS_OK);
  Str cert;
  int verdict = -1;
  REQUIRE(ts_certify(g.v, &verdict, &cert.s) == TS_OK);
  CHECK(verdict == TS_CERTIFIED);
  Str violation;
  CHECK(ts_verify(cert.str().c_str(), &violation.s) == TS_OK);

  Vec w;
  REQUIRE(ts_standard_vector("shifted-dyadic", 3, 1, &w.v) == TS_OK);
  Str wcert;
  REQUIRE(ts_certify(w.v, &verdict, &wcert.s) == TS_OK);
  CHECK(verdict == TS_REFUTED);

  // tampered certificate fails verification with an explanation
  std::string tampered = wcert.str();
  auto pos = tampered.find("drop-value 1/2");
  REQUIRE(pos != std::string::npos);
  tampered.replace(pos, 14, "drop-value 1/3");
  Str why;
  CHECK(ts_verify(tampered.c_str(), &why.s) == TS_EVERIFY);
  CHECK(why.str().find("violated") != std::string::npos);
}

TEST_CASE("c api: delta refutation and decompositions") {
  Str cert;
  int verdict = -1;
  REQUIRE(ts_delta_refute("lorentz:1,1/2,1/4,1/8", "1 1/2\n2 1/2\n", &verdict, &cert.s) ==
          TS_EDOMAIN);  // not a unit vector
  REQUIRE(ts_delta_refute("l1", "1 1/4\n2 3/4\n", &verdict, &cert.s) == TS_OK);
  CHECK(verdict == TS_REFUTED);
  Str violation;
  CHECK(ts_verify(cert.str().c_str(), &violation.s) == TS_OK);

  Vec y;
  REQUIRE(ts_vector_parse("kind=M depth=2\n0 1/2\n10 1/2\n", &y.v) == TS_OK);
  Str f, db;
  REQUIRE(ts_decompose(y.v, 0, &f.s) == TS_OK);
  REQUIRE(ts_decompose(y.v, 1, &db.s) == TS_OK);
  CHECK(ts_verify(f.str().c_str(), &violation.s) == TS_OK);
  CHECK(ts_verify(db.str().c_str(), &violation.s) == TS_OK);
}

TEST_CASE("c api: daugavetify, probes, demo, dot") {
  Vec y;
  REQUIRE(ts_vector_parse("kind=M depth=1\n0 1/2\n", &y.v) == TS_OK);
  std::string functionals =
      "functional kind=M\ncoeff 0 1/1\npart 1/1 nodes=0 signs=+\nclaim 1/1\nwitness 0 1/1\n";
  Str out_vec, cert;
  REQUIRE(ts_daugavetify(y.v, functionals.c_str(), "1/4", 10, &out_vec.s, &cert.s) == TS_OK);
  Str violation;
  CHECK(ts_verify(cert.str().c_str(), &violation.s) == TS_OK);

  Str probe;
  REQUIRE(ts_probe("octahedral", 50, 3, 7, &probe.s) == TS_OK);
  CHECK(ts_verify(probe.str().c_str(), &violation.s) == TS_OK);

  Str dot;
  REQUIRE(ts_export_dot(y.v, 1, &dot.s) == TS_OK);
  CHECK(dot.str().find("digraph") == 0);

  Str demo;
  CHECK(ts_demo(&demo.s) == TS_OK);
  CHECK(demo.str().find("FAIL") == std::string::npos);
}
