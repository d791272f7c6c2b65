#include "treespace/treespace.h"

#include <cstring>
#include <fstream>
#include <sstream>

#include "certificates.hpp"
#include "construct.hpp"
#include "demo.hpp"
#include "dot.hpp"
#include "geometry.hpp"
#include "minimal_sets.hpp"
#include "points.hpp"

using namespace treespace;

struct ts_vector {
  TreeVector v;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
ts_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return TS_EPARSE;
  } catch (const CapacityError& e) {
    g_last_error = e.what();
    return TS_ECAPACITY;
  } catch (const VerifyError& e) {
    g_last_error = e.what();
    return TS_EVERIFY;
  } catch (const DomainError& e) {
    g_last_error = e.what();
    return TS_EDOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TS_EINTERNAL;
  }
}

SeqVector parse_seq_text(const std::string& text) {
  SeqVector out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#') continue;
    int i;
    try {
      i = std::stoi(first);
    } catch (...) {
      throw ParseError("bad sequence index '" + first + "'");
    }
    if (i < 1) throw ParseError("sequence indices start at 1");
    std::string v;
    if (!(ls >> v)) throw ParseError("missing coefficient for index " + first);
    out[i] += parse_rat(v);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

extern "C" {

const char* ts_last_error(void) { return g_last_error.c_str(); }

void ts_string_free(char* s) { std::free(s); }

ts_status ts_vector_parse(const char* text, ts_vector** out) {
  return guarded([&] {
    *out = new ts_vector{TreeVector::parse(text)};
    return TS_OK;
  });
}

ts_status ts_vector_read(const char* path, ts_vector** out) {
  return guarded([&] {
    *out = new ts_vector{TreeVector::read_file(path)};
    return TS_OK;
  });
}

ts_status ts_vector_format(const ts_vector* v, char** out_text) {
  return guarded([&] {
    *out_text = dup_string(v->v.format());
    return TS_OK;
  });
}

void ts_vector_free(ts_vector* v) { delete v; }

ts_status ts_vector_norm(const ts_vector* v, char** out_fraction) {
  return guarded([&] {
    *out_fraction = dup_string(rat_string(tree_norm(v->v)));
    return TS_OK;
  });
}

ts_status ts_standard_vector(const char* name, unsigned depth, int with_tails,
                             ts_vector** out) {
  return guarded([&] {
    std::string n = name;
    StandardVector which;
    if (n == "rooted-dyadic")
      which = StandardVector::RootedDyadic;
    else if (n == "modified-dyadic")
      which = StandardVector::ModifiedDyadic;
    else if (n == "shifted-dyadic")
      which = StandardVector::ShiftedDyadic;
    else
      throw ParseError("unknown standard vector '" + n + "'");
    *out = new ts_vector{standard_vector(which, depth, with_tails != 0)};
    return TS_OK;
  });
}

ts_status ts_certify(const ts_vector* v, int* verdict, char** out_certificate) {
  return guarded([&] {
    if (v->v.kind() == TreeKind::RootedBinary) {
      RootedRefutation r = daugavet_refute_rooted(v->v);
      *verdict = TS_REFUTED;
      *out_certificate = dup_string(rooted_refutation_certificate(v->v, r));
      return TS_OK;
    }
    DaugavetCheck check = daugavet_check(v->v);
    *verdict = check.is_daugavet ? TS_CERTIFIED : TS_REFUTED;
    *out_certificate = dup_string(daugavet_certificate(v->v, check));
    return TS_OK;
  });
}

ts_status ts_delta_refute(const char* backend, const char* x_text, int* verdict,
                          char** out_certificate) {
  return guarded([&] {
    BackendNorm b = BackendNorm::parse(backend);
    SeqVector x = parse_seq_text(x_text);
    SeqDeltaRefutation r = delta_refutation(x, b);
    if (r.verdict == SeqDeltaRefutation::Verdict::NotApplicable) {
      *verdict = TS_NOT_APPLICABLE;
      *out_certificate = dup_string("");
      return TS_OK;
    }
    *verdict = TS_REFUTED;
    *out_certificate = dup_string(delta_refutation_certificate(r));
    return TS_OK;
  });
}

ts_status ts_decompose(const ts_vector* v, int into_daugavet_terms, char** out_certificate) {
  return guarded([&] {
    if (into_daugavet_terms) {
      DaugavetHullDecomposition d = decompose_into_db(v->v);
      *out_certificate = dup_string(db_decomposition_certificate(d));
    } else {
      ConvexDecomposition d = decompose_into_f(v->v);
      *out_certificate = dup_string(decomposition_certificate(d));
    }
    return TS_OK;
  });
}

ts_status ts_daugavetify(const ts_vector* y, const char* functionals_text, const char* eps,
                         unsigned depth_budget, char** out_vector, char** out_certificate) {
  return guarded([&] {
    std::vector<NormedFunctional> phis = NormedFunctional::parse_file_text(functionals_text);
    Rat e = parse_rat(eps);
    Daugavetified d = daugavetify(y->v, phis, e, depth_budget);
    *out_vector = dup_string(d.x.format());
    *out_certificate = dup_string(daugavetify_certificate(y->v, phis, e, d));
    return TS_OK;
  });
}

ts_status ts_probe(const char* statement, long samples, unsigned depth,
                   unsigned long long seed, char** out_report) {
  return guarded([&] {
    std::string s = statement;
    if (s == "lasq") {
      ProbeReport r = lasq_probe(samples, depth, seed);
      *out_report = dup_string(probe_certificate(r, r.sphere_lp_min.value_or(Rat(-1))));
      if (r.counterexample) {
        g_last_error = "probe found a counterexample";
        return TS_EINTERNAL;
      }
      return TS_OK;
    }
    if (s == "octahedral") {
      ProbeReport r = octahedral_probe(samples, depth, seed);
      *out_report = dup_string(probe_certificate(r));
      return TS_OK;
    }
    if (s == "weak-norm") {
      TreeVector g = standard_vector(StandardVector::ModifiedDyadic, 2, true);
      WeakDiameter d = weak_nbhd_diameter_db(g, Rat(1, 2));
      *out_report = dup_string(weak_diameter_certificate(g, Rat(1, 2), d));
      return TS_OK;
    }
    throw ParseError("unknown probe statement '" + s + "'");
  });
}

ts_status ts_verify(const char* certificate_text, char** out_violation) {
  *out_violation = nullptr;
  ts_status st = guarded([&] {
    verify_certificate(certificate_text);
    return TS_OK;
  });
  if (st != TS_OK && out_violation) *out_violation = dup_string(g_last_error);
  return st;
}

ts_status ts_demo(char** out_report) {
  return guarded([&] {
    bool ok = false;
    *out_report = dup_string(demo_report(ok));
    if (!ok) {
      g_last_error = "demo reproduced a value incorrectly";
      return TS_EINTERNAL;
    }
    return TS_OK;
  });
}

ts_status ts_export_dot(const ts_vector* v, int highlight_norming, char** out_dot) {
  return guarded([&] {
    *out_dot = dup_string(export_dot(v->v, highlight_norming != 0));
    return TS_OK;
  });
}

}  // extern "C"
