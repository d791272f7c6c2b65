// Command-line front end; talks to the library through the C API only.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "treespace/treespace.h"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitVerify = 4;

int status_exit(ts_status st) {
  switch (st) {
    case TS_OK:
      return 0;
    case TS_EPARSE:
      return kExitParse;
    case TS_ECAPACITY:
      return kExitCapacity;
    case TS_EVERIFY:
      return kExitVerify;
    default:
      return 1;
  }
}

int fail(ts_status st) {
  std::cerr << "error: " << ts_last_error() << "\n";
  return status_exit(st);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("input", "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool spill(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return true;
  }
  std::ofstream out(path + ".tmp", std::ios::trunc);
  out << text;
  out.close();
  if (!out) return false;
  return std::rename((path + ".tmp").c_str(), path.c_str()) == 0;
}

struct Guard {
  char* s = nullptr;
  ~Guard() { ts_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

struct VecGuard {
  ts_vector* v = nullptr;
  ~VecGuard() { ts_vector_free(v); }
};

int load_vector(const std::string& path, VecGuard& vec) {
  ts_status st = ts_vector_read(path.c_str(), &vec.v);
  if (st != TS_OK) return fail(st);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tree-norm toolkit: norms, certificates, decompositions, probes"};
  app.require_subcommand(1);

  std::string input, output, backend = "l1", epsilon = "1/8", statement = "lasq";
  std::string functionals_path, name = "modified-dyadic";
  long samples = 1000;
  unsigned depth = 4;
  unsigned long long seed = 1;
  bool daugavet_terms = false;
  bool no_tails = false;
  bool highlight = true;

  auto* norm = app.add_subcommand("norm", "exact norm of a vector file");
  norm->add_option("input", input)->required();

  auto* certify = app.add_subcommand(
      "certify", "certify or refute a Daugavet-point (exit 0 certified, 10 refuted)");
  certify->add_option("input", input)->required();
  certify->add_option("-o,--output", output);

  auto* refute = app.add_subcommand(
      "refute", "refutations: rooted-tree vectors, or --delta for sequence backends");
  refute->add_option("input", input)->required();
  refute->add_option("-o,--output", output);
  bool delta_mode = false;
  refute->add_flag("--delta", delta_mode, "delta-point refutation of a sequence vector");
  refute->add_option("--backend", backend, "l1, c0, or lorentz:w1,w2,...");

  auto* decompose = app.add_subcommand("decompose", "convex decomposition of a ball vector");
  decompose->add_option("input", input)->required();
  decompose->add_option("-o,--output", output);
  decompose->add_flag("--db", daugavet_terms, "decompose into certified Daugavet terms");

  auto* daugavetify =
      app.add_subcommand("daugavetify", "move a ball vector to a certified point nearby");
  daugavetify->add_option("input", input)->required();
  daugavetify->add_option("--functionals", functionals_path)->required();
  daugavetify->add_option("--epsilon", epsilon);
  daugavetify->add_option("--depth", depth);
  daugavetify->add_option("-o,--output", output);

  auto* probe = app.add_subcommand("probe", "geometry probes");
  probe->add_option("--statement", statement, "lasq, octahedral, weak-norm");
  probe->add_option("--samples", samples);
  probe->add_option("--depth", depth);
  probe->add_option("--seed", seed);
  probe->add_option("-o,--output", output);

  auto* demo = app.add_subcommand("demo", "reproduce the worked examples");
  demo->add_option("-o,--output", output);

  auto* verify = app.add_subcommand("verify", "re-check a certificate file (exit 4 on failure)");
  verify->add_option("input", input)->required();

  auto* exportdot = app.add_subcommand("export-dot", "Graphviz rendering of a vector");
  exportdot->add_option("input", input)->required();
  exportdot->add_option("-o,--output", output);
  exportdot->add_flag("--plain", no_tails, "skip norming-set highlighting");

  auto* standard = app.add_subcommand("standard", "write a named standard vector");
  standard->add_option("name", name, "rooted-dyadic, modified-dyadic, shifted-dyadic");
  standard->add_option("--depth", depth);
  standard->add_flag("--no-tails", no_tails);
  standard->add_option("-o,--output", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  if (norm->parsed()) {
    VecGuard vec;
    if (int rc = load_vector(input, vec)) return rc;
    Guard s;
    ts_status st = ts_vector_norm(vec.v, &s.s);
    if (st != TS_OK) return fail(st);
    std::cout << s.str() << "\n";
    return 0;
  }

  if (certify->parsed()) {
    VecGuard vec;
    if (int rc = load_vector(input, vec)) return rc;
    Guard cert;
    int verdict = TS_NOT_APPLICABLE;
    ts_status st = ts_certify(vec.v, &verdict, &cert.s);
    if (st != TS_OK) return fail(st);
    if (!spill(output, cert.str())) return 1;
    std::cerr << (verdict == TS_CERTIFIED ? "certified Daugavet-point\n"
                  : verdict == TS_REFUTED ? "refuted\n"
                                          : "not applicable\n");
    return verdict;
  }

  if (refute->parsed()) {
    Guard cert;
    int verdict = TS_NOT_APPLICABLE;
    if (delta_mode) {
      std::string text = slurp(input);
      ts_status st = ts_delta_refute(backend.c_str(), text.c_str(), &verdict, &cert.s);
      if (st != TS_OK) return fail(st);
    } else {
      VecGuard vec;
      if (int rc = load_vector(input, vec)) return rc;
      ts_status st = ts_certify(vec.v, &verdict, &cert.s);
      if (st != TS_OK) return fail(st);
      if (verdict == TS_CERTIFIED) {
        std::cerr << "the point is a certified Daugavet-point; nothing to refute\n";
        return TS_NOT_APPLICABLE;
      }
    }
    if (!spill(output, cert.str())) return 1;
    return verdict == TS_REFUTED ? 0 : verdict;
  }

  if (decompose->parsed()) {
    VecGuard vec;
    if (int rc = load_vector(input, vec)) return rc;
    Guard cert;
    ts_status st = ts_decompose(vec.v, daugavet_terms ? 1 : 0, &cert.s);
    if (st != TS_OK) return fail(st);
    if (!spill(output, cert.str())) return 1;
    return 0;
  }

  if (daugavetify->parsed()) {
    VecGuard vec;
    if (int rc = load_vector(input, vec)) return rc;
    std::string funcs = slurp(functionals_path);
    Guard out_vec, cert;
    ts_status st =
        ts_daugavetify(vec.v, funcs.c_str(), epsilon.c_str(), depth, &out_vec.s, &cert.s);
    if (st != TS_OK) return fail(st);
    if (!spill(output, cert.str())) return 1;
    std::cout << out_vec.str();
    return 0;
  }

  if (probe->parsed()) {
    Guard report;
    ts_status st = ts_probe(statement.c_str(), samples, depth, seed, &report.s);
    if (report.s && !spill(output, report.str())) return 1;
    if (st != TS_OK) return fail(st);
    return 0;
  }

  if (demo->parsed()) {
    Guard report;
    ts_status st = ts_demo(&report.s);
    if (report.s && !spill(output, report.str())) return 1;
    if (st != TS_OK) return fail(st);
    return 0;
  }

  if (verify->parsed()) {
    std::string text = slurp(input);
    Guard violation;
    ts_status st = ts_verify(text.c_str(), &violation.s);
    if (st != TS_OK) {
      std::cerr << "verification failed: " << violation.str() << "\n";
      return status_exit(st);
    }
    std::cout << "certificate verified\n";
    return 0;
  }

  if (exportdot->parsed()) {
    VecGuard vec;
    if (int rc = load_vector(input, vec)) return rc;
    Guard dot;
    ts_status st = ts_export_dot(vec.v, no_tails ? 0 : 1, &dot.s);
    if (st != TS_OK) return fail(st);
    if (!spill(output, dot.str())) return 1;
    return 0;
  }

  if (standard->parsed()) {
    ts_vector* v = nullptr;
    ts_status st = ts_standard_vector(name.c_str(), depth, no_tails ? 0 : 1, &v);
    if (st != TS_OK) return fail(st);
    Guard text;
    st = ts_vector_format(v, &text.s);
    ts_vector_free(v);
    if (st != TS_OK) return fail(st);
    if (!spill(output, text.str())) return 1;
    return 0;
  }

  return kExitParse;
}
