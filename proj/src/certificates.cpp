#include "certificates.hpp"

#include <sstream>

#include "seq_lp.hpp"

namespace treespace {

namespace {

constexpr const char* kHeader = "treespace-certificate v1";

std::string seq_text(const SeqVector& v) {
  std::ostringstream os;
  for (const auto& [i, c] : v) os << i << " " << rat_string(c) << "\n";
  return os.str();
}

SeqVector parse_seq(const std::string& text) {
  SeqVector out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    int i;
    std::string v;
    if (!(ls >> i >> v)) continue;
    out[i] += parse_rat(v);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::string nodes_text(const NodeSet& nodes) {
  std::string s;
  for (std::size_t i = 0; i < nodes.size(); ++i) s += (i ? "," : "") + nodes[i].str();
  return s.empty() ? "-" : s;
}

NodeSet parse_nodes(const std::string& s) {
  NodeSet out;
  if (s == "-") return out;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, ',')) out.push_back(Node::parse(item));
  return out;
}

struct Doc {
  std::string type;
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<std::pair<std::string, std::string>> blocks;

  const std::string& field(const std::string& key) const {
    for (const auto& [k, v] : fields)
      if (k == key) return v;
    throw ParseError("certificate missing field '" + key + "'");
  }
  std::vector<std::string> all(const std::string& key) const {
    std::vector<std::string> out;
    for (const auto& [k, v] : fields)
      if (k == key) out.push_back(v);
    return out;
  }
  bool has(const std::string& key) const {
    for (const auto& [k, v] : fields)
      if (k == key) return true;
    return false;
  }
  const std::string& block(const std::string& name) const {
    for (const auto& [k, v] : blocks)
      if (k == name) return v;
    throw ParseError("certificate missing block '" + name + "'");
  }

  std::string str() const {
    std::ostringstream os;
    os << kHeader << "\n" << "type " << type << "\n";
    for (const auto& [k, v] : fields) os << k << " " << v << "\n";
    for (const auto& [name, body] : blocks) {
      os << "begin " << name << "\n" << body;
      if (!body.empty() && body.back() != '\n') os << "\n";
      os << "end " << name << "\n";
    }
    return os.str();
  }

  static Doc parse(const std::string& text) {
    Doc doc;
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != kHeader)
      throw ParseError("not a treespace certificate");
    std::optional<std::string> in_block;
    std::string body;
    while (std::getline(is, line)) {
      if (in_block) {
        if (line == "end " + *in_block) {
          doc.blocks.emplace_back(*in_block, body);
          in_block.reset();
          body.clear();
        } else {
          body += line + "\n";
        }
        continue;
      }
      std::istringstream ls(line);
      std::string key;
      if (!(ls >> key) || key[0] == '#') continue;
      std::string rest;
      std::getline(ls, rest);
      if (!rest.empty() && rest[0] == ' ') rest = rest.substr(1);
      if (key == "type")
        doc.type = rest;
      else if (key == "begin")
        in_block = rest;
      else
        doc.fields.emplace_back(key, rest);
    }
    if (in_block) throw ParseError("unterminated block '" + *in_block + "'");
    if (doc.type.empty()) throw ParseError("certificate missing type");
    return doc;
  }
};

void check(bool ok, const std::string& claim) {
  if (!ok) throw VerifyError("violated claim: " + claim);
}

std::string frontier_line(const FrontierBranch& fb) {
  std::string kind = fb.exit == FrontierBranch::Exit::Tail ? "tail"
                     : fb.exit == FrontierBranch::Exit::Open ? "open" : "empty";
  std::string s = kind + " " + fb.at.str();
  if (fb.exit == FrontierBranch::Exit::Open) s += " " + std::to_string(fb.dir);
  return s + " sum " + rat_string(fb.sum);
}

}  // namespace

std::string daugavet_certificate(const TreeVector& x, const DaugavetCheck& check_result) {
  Doc doc;
  doc.type = check_result.is_daugavet ? "daugavet" : "daugavet-refutation";
  doc.fields.emplace_back("depth", std::to_string(check_result.depth));
  if (check_result.is_daugavet) {
    doc.fields.emplace_back("method",
                            check_result.method == DaugavetCheck::Method::AllBranchesNorm
                                ? "all-branches-norm"
                                : "all-unit-antichains");
    if (check_result.method == DaugavetCheck::Method::AllBranchesNorm) {
      for (const FrontierBranch& fb : check_result.branch_detail)
        doc.fields.emplace_back("branch", frontier_line(fb));
    } else {
      doc.fields.emplace_back("antichains-covered", check_result.checked.get_str());
      doc.fields.emplace_back("min-drop", "1/1");
    }
    doc.fields.emplace_back(
        "note", "finite model: claims quantified over the recorded depth; tail regions "
                "are uniform so deeper antichains never lower the drop");
  } else {
    doc.fields.emplace_back("refuting-e", nodes_text(check_result.refuting_e));
    doc.fields.emplace_back("drop-value", rat_string(check_result.refuting_value));
  }
  doc.blocks.emplace_back("vector", x.format());
  return doc.str();
}

std::string rooted_refutation_certificate(const TreeVector& x, const RootedRefutation& r) {
  Doc doc;
  doc.type = "rooted-refutation";
  doc.fields.emplace_back("e", nodes_text(r.e));
  doc.fields.emplace_back("drop-value", rat_string(r.value));
  doc.blocks.emplace_back("vector", x.format());
  return doc.str();
}

std::string delta_witness_certificate(const NormedFunctional& phi, const Rat& delta,
                                      const DeltaWitness& w) {
  Doc doc;
  doc.type = "delta-witness";
  doc.fields.emplace_back("delta", rat_string(delta));
  doc.fields.emplace_back("level", std::to_string(w.level));
  doc.fields.emplace_back("t0", w.t0.str());
  doc.fields.emplace_back("tn", w.tn.str());
  doc.fields.emplace_back("functional-value", rat_string(w.functional_value));
  doc.fields.emplace_back("distance", rat_string(w.distance));
  doc.blocks.emplace_back("functional", phi.format());
  doc.blocks.emplace_back("witness", w.y.format());
  return doc.str();
}

std::string delta_refutation_certificate(const SeqDeltaRefutation& r) {
  Doc doc;
  doc.type = "delta-refutation";
  doc.fields.emplace_back("backend", r.backend.str());
  doc.fields.emplace_back("s", std::to_string(r.s));
  doc.fields.emplace_back("delta", rat_string(r.delta));
  doc.fields.emplace_back("eta", rat_string(r.eta));
  doc.fields.emplace_back("n", std::to_string(r.n));
  doc.fields.emplace_back("gamma", rat_string(r.gamma));
  for (const auto& a : r.f_n) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    doc.fields.emplace_back("norming-set", s);
  }
  doc.fields.emplace_back("slice-threshold", rat_string(r.slice_threshold));
  doc.fields.emplace_back("bound", rat_string(r.bound));
  doc.fields.emplace_back("verified-max", rat_string(r.verified_max));
  doc.fields.emplace_back("fresh-slots", std::to_string(r.fresh_slots));
  doc.fields.emplace_back(
      "note", "sup over the support window plus fresh slots; off-window mass "
              "rearranges onto the window without changing any norm involved");
  doc.blocks.emplace_back("x", seq_text(r.x));
  doc.blocks.emplace_back("functional", seq_text(r.functional));
  doc.blocks.emplace_back("maximizer", seq_text(r.maximizer));
  return doc.str();
}

std::string decomposition_certificate(const ConvexDecomposition& d) {
  Doc doc;
  doc.type = "decomposition-f";
  for (const ConvexTerm& term : d.terms) {
    std::string s = rat_string(term.weight) + " ";
    bool first = true;
    for (const auto& [t, v] : term.vector.coeffs()) {
      s += (first ? "" : ",") + t.str() + ":" + (v > 0 ? "+" : "-");
      first = false;
    }
    if (first) s += "0";
    doc.fields.emplace_back("term", s);
  }
  doc.blocks.emplace_back("target", d.target.format());
  return doc.str();
}

std::string db_decomposition_certificate(const DaugavetHullDecomposition& d) {
  Doc doc;
  doc.type = "decomposition-db";
  int index = 0;
  for (const DaugavetHullTerm& term : d.terms) {
    doc.fields.emplace_back("weight" + std::to_string(index), rat_string(term.weight));
    doc.blocks.emplace_back("plus" + std::to_string(index), term.plus.format());
    doc.blocks.emplace_back("minus" + std::to_string(index), term.minus.format());
    ++index;
  }
  doc.fields.emplace_back("terms", std::to_string(index));
  doc.blocks.emplace_back("target", d.target.format());
  return doc.str();
}

std::string daugavetify_certificate(const TreeVector& y,
                                    const std::vector<NormedFunctional>& phis, const Rat& eps,
                                    const Daugavetified& d) {
  Doc doc;
  doc.type = "daugavetify";
  doc.fields.emplace_back("eps", rat_string(eps));
  for (std::size_t i = 0; i < d.anchors.size(); ++i)
    doc.fields.emplace_back("graft",
                            d.anchors[i].str() + " " + rat_string(d.amplitudes[i]));
  doc.fields.emplace_back("certificate-method",
                          d.certificate.method == DaugavetCheck::Method::AllBranchesNorm
                              ? "all-branches-norm"
                              : "all-unit-antichains");
  doc.fields.emplace_back("certificate-depth", std::to_string(d.certificate.depth));
  doc.blocks.emplace_back("y", y.format());
  doc.blocks.emplace_back("x", d.x.format());
  int index = 0;
  for (const NormedFunctional& phi : phis)
    doc.blocks.emplace_back("functional" + std::to_string(index++), phi.format());
  return doc.str();
}

std::string probe_certificate(const ProbeReport& r, const Rat& extra_lp_min) {
  Doc doc;
  doc.type = "probe-report";
  doc.fields.emplace_back("statement", r.statement);
  doc.fields.emplace_back("samples", std::to_string(r.samples));
  doc.fields.emplace_back("seed", std::to_string(r.seed));
  doc.fields.emplace_back("depth", std::to_string(r.depth));
  doc.fields.emplace_back("worst-value", rat_string(r.worst_value));
  doc.fields.emplace_back("counterexample", r.counterexample ? "yes" : "no");
  if (extra_lp_min >= 0) doc.fields.emplace_back("sphere-lp-min", rat_string(extra_lp_min));
  if (!r.notes.empty()) doc.fields.emplace_back("note", r.notes);
  if (r.witness) doc.blocks.emplace_back("witness", r.witness->format());
  return doc.str();
}

std::string weak_diameter_certificate(const TreeVector& x, const Rat& eps,
                                      const WeakDiameter& d) {
  Doc doc;
  doc.type = "weak-diameter";
  doc.fields.emplace_back("eps", rat_string(eps));
  doc.fields.emplace_back("level", std::to_string(d.level));
  doc.fields.emplace_back("tail-bound", rat_string(d.tail_bound));
  doc.fields.emplace_back("diameter-bound", rat_string(d.diameter_bound));
  doc.fields.emplace_back("lp-count", std::to_string(d.lp_count));
  doc.blocks.emplace_back("vector", x.format());
  return doc.str();
}

namespace {

void verify_daugavet(const Doc& doc) {
  TreeVector x = TreeVector::parse(doc.block("vector"));
  check(tree_norm(x) == 1, "||x|| = 1");
  std::uint32_t depth = std::stoul(doc.field("depth"));
  if (doc.type == "daugavet-refutation") {
    NodeSet e = parse_nodes(doc.field("refuting-e"));
    Rat value = parse_rat(doc.field("drop-value"));
    check(is_unit_antichain(TreeKind::ModifiedBinary, e), "E is a unit antichain");
    check(tree_norm(x.without_coeffs(e)) == value, "||x - P_E x|| equals the recorded drop");
    check(value < 1, "drop below one refutes the point");
    return;
  }
  if (doc.field("method") == "all-branches-norm") {
    check(all_branches_sum_to(x, Rat(1)), "every branch sums to one");
    auto recomputed = frontier_branches(x);
    auto lines = doc.all("branch");
    check(lines.size() == recomputed.size(), "branch detail covers the frontier");
    for (std::size_t i = 0; i < recomputed.size(); ++i)
      check(lines[i] == frontier_line(recomputed[i]), "branch detail entry " + std::to_string(i));
  } else {
    AntichainGame game = min_drop_over_unit_antichains(x);
    check(game.min_value == 1, "minimum drop over unit antichains is one");
    check(doc.field("min-drop") == "1/1", "recorded minimum drop");
    check(mpz_class(doc.field("antichains-covered")) ==
              count_unit_antichains(TreeKind::ModifiedBinary, depth),
          "antichain count at the recorded depth");
  }
}

void verify_rooted_refutation(const Doc& doc) {
  TreeVector x = TreeVector::parse(doc.block("vector"));
  check(x.kind() == TreeKind::RootedBinary, "vector lives in the rooted tree");
  check(tree_norm(x) == 1, "||x|| = 1");
  NodeSet e = parse_nodes(doc.field("e"));
  Rat value = parse_rat(doc.field("drop-value"));
  check(!e.empty() && is_antichain(e), "E is a non-empty antichain");
  check(tree_norm(x.without_coeffs(e)) == value, "||x - P_E x|| equals the recorded drop");
  check(value < 1, "drop below one refutes the point");
}

void verify_delta_witness(const Doc& doc) {
  NormedFunctional phi =
      NormedFunctional::parse_block([&] {
        std::vector<std::string> lines;
        std::istringstream is(doc.block("functional"));
        std::string line;
        while (std::getline(is, line)) lines.push_back(line);
        return lines;
      }());
  TreeVector y = TreeVector::parse(doc.block("witness"));
  Rat delta = parse_rat(doc.field("delta"));
  TreeVector x(TreeKind::RootedBinary);
  x.set_tail(Node::root(), Rat(1));
  Rat threshold = phi.claimed_norm() - delta;
  check(phi(x) > threshold, "x lies in the slice");
  check(tree_norm(y) == 1, "witness is a unit vector");
  check(phi(y) == parse_rat(doc.field("functional-value")), "recorded functional value");
  check(phi(y) > threshold, "witness lies in the slice");
  check(distance(x, y) == 2, "witness sits at distance exactly two");
  check(parse_rat(doc.field("distance")) == 2, "recorded distance");
}

void verify_delta_refutation(const Doc& doc) {
  BackendNorm b = BackendNorm::parse(doc.field("backend"));
  SeqVector x = parse_seq(doc.block("x"));
  SeqVector zstar = parse_seq(doc.block("functional"));
  SeqVector maximizer = parse_seq(doc.block("maximizer"));
  Rat gamma = parse_rat(doc.field("gamma"));
  Rat eta = parse_rat(doc.field("eta"));
  Rat threshold = parse_rat(doc.field("slice-threshold"));
  Rat bound = parse_rat(doc.field("bound"));
  Rat verified_max = parse_rat(doc.field("verified-max"));
  check(backend_norm(x, b) == 1, "||x|| = 1");
  check(backend_dual_norm(zstar, b) <= 1, "functional lies in the dual ball");
  check(seq_apply(zstar, x) > threshold, "x lies in the slice");
  int n = std::stoi(doc.field("n"));
  SeqFamilyReport fam = families(x, b, n);
  check(fam.gamma == gamma, "recorded gamma_n");
  check(bound == 2 - eta * gamma, "bound equals 2 - eta*gamma_n");
  SeqConstraint slice;
  slice.coeffs = zstar;
  slice.lo = threshold;
  SeqMaxResult redo = seq_max_distance(x, b, {slice});
  check(redo.value == verified_max, "recomputed slice maximum");
  check(verified_max <= bound, "verified maximum within the bound");
  check(bound < 2, "bound strictly below two");
  check(backend_norm(maximizer, b) <= 1, "maximizer in the ball");
  check(seq_apply(zstar, maximizer) >= threshold, "maximizer in the closed slice");
  SeqVector d = x;
  for (const auto& [i, v] : maximizer) d[i] -= v;
  check(backend_norm(d, b) == verified_max, "maximizer attains the maximum");
}

void verify_decomposition_f(const Doc& doc) {
  TreeVector target = TreeVector::parse(doc.block("target"));
  TreeVector sum(target.kind());
  Rat total = 0;
  for (const std::string& line : doc.all("term")) {
    std::istringstream ls(line);
    std::string w, support;
    ls >> w >> support;
    Rat weight = parse_rat(w);
    check(weight > 0, "term weights positive");
    total += weight;
    TreeVector z(target.kind());
    if (support != "0") {
      std::istringstream ss(support);
      std::string item;
      while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw ParseError("bad term entry " + item);
        Node t = Node::parse(item.substr(0, colon));
        z.set_coeff(t, item.substr(colon + 1) == "+" ? Rat(1) : Rat(-1));
      }
    }
    check(is_f_element(z), "term supports are unit antichains with ±1 signs");
    sum += z.scaled(weight);
  }
  check(total == 1, "weights sum to one");
  check(sum.same_vector(target), "terms recombine to the target");
}

void verify_decomposition_db(const Doc& doc) {
  TreeVector target = TreeVector::parse(doc.block("target"));
  int terms = std::stoi(doc.field("terms"));
  TreeVector sum(target.kind());
  Rat total = 0;
  for (int i = 0; i < terms; ++i) {
    Rat weight = parse_rat(doc.field("weight" + std::to_string(i)));
    TreeVector plus = TreeVector::parse(doc.block("plus" + std::to_string(i)));
    TreeVector minus = TreeVector::parse(doc.block("minus" + std::to_string(i)));
    check(weight > 0, "term weights positive");
    for (const TreeVector* v : {&plus, &minus}) {
      check(tree_norm(*v) == 1, "hull terms are unit vectors");
      check(all_branches_sum_to(*v, Rat(1)), "hull terms attain their norm on every branch");
    }
    sum += plus.scaled(weight) + minus.scaled(weight);
    total += 2 * weight;
  }
  check(total == 1, "weights sum to one");
  check(sum.same_vector(target), "terms recombine to the target");
}

void verify_daugavetify(const Doc& doc) {
  TreeVector y = TreeVector::parse(doc.block("y"));
  TreeVector x = TreeVector::parse(doc.block("x"));
  Rat eps = parse_rat(doc.field("eps"));
  check(tree_norm(y) <= 1, "input lies in the ball");
  check(tree_norm(x) == 1, "output lies on the sphere");
  TreeVector rebuilt = y;
  for (const std::string& line : doc.all("graft")) {
    std::istringstream ls(line);
    std::string node, amp;
    ls >> node >> amp;
    TreeVector tail(TreeKind::ModifiedBinary);
    tail.set_tail(Node::parse(node), parse_rat(amp));
    rebuilt += tail;
  }
  check(rebuilt.same_vector(x), "output equals the input plus the recorded grafts");
  for (const auto& [name, body] : doc.blocks) {
    if (name.rfind("functional", 0) != 0) continue;
    std::vector<std::string> lines;
    std::istringstream is(body);
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
    NormedFunctional phi = NormedFunctional::parse_block(lines);
    check(abs(phi(x - y)) < eps, "output stays inside the weak neighborhood");
  }
  if (doc.field("certificate-method") == "all-branches-norm") {
    check(all_branches_sum_to(x, Rat(1)), "every branch sums to one");
  } else {
    check(min_drop_over_unit_antichains(x).min_value == 1,
          "minimum drop over unit antichains is one");
  }
}

void verify_probe(const Doc& doc) {
  const std::string statement = doc.field("statement");
  Rat worst = parse_rat(doc.field("worst-value"));
  check(doc.field("counterexample") == "no", "probe found no counterexample");
  if (statement == "lasq") {
    TreeVector x(TreeKind::ModifiedBinary);
    x.set_coeff(Node::from_bits({0}), Rat(1, 4));
    x.set_coeff(Node::from_bits({1}), Rat(3, 4));
    check(worst >= Rat(5, 4), "no sphere point beats 5/4");
    if (doc.has("sphere-lp-min"))
      check(parse_rat(doc.field("sphere-lp-min")) == Rat(5, 4), "depth-2 sphere minimum is 5/4");
    TreeVector w = TreeVector::parse(doc.block("witness"));
    check(std::max(tree_norm(x + w), tree_norm(x - w)) == worst,
          "witness attains the recorded value");
  } else if (statement == "octahedral") {
    TreeVector w = TreeVector::parse(doc.block("witness"));
    check(octahedral_value(w) == worst, "witness attains the recorded value");
    check(worst <= Rat(3, 2), "all values at most 3/2");
  } else {
    throw ParseError("unknown probe statement '" + statement + "'");
  }
}

void verify_weak_diameter(const Doc& doc) {
  TreeVector x = TreeVector::parse(doc.block("vector"));
  Rat eps = parse_rat(doc.field("eps"));
  WeakDiameter redo = weak_nbhd_diameter_db(x, eps);
  check(redo.level == std::stoul(doc.field("level")), "recorded constraint level");
  check(redo.diameter_bound == parse_rat(doc.field("diameter-bound")),
        "recomputed diameter bound");
  check(redo.diameter_bound < eps, "diameter stays below eps");
}

}  // namespace

void verify_certificate(const std::string& text) {
  Doc doc = Doc::parse(text);
  if (doc.type == "daugavet" || doc.type == "daugavet-refutation")
    verify_daugavet(doc);
  else if (doc.type == "rooted-refutation")
    verify_rooted_refutation(doc);
  else if (doc.type == "delta-witness")
    verify_delta_witness(doc);
  else if (doc.type == "delta-refutation")
    verify_delta_refutation(doc);
  else if (doc.type == "decomposition-f")
    verify_decomposition_f(doc);
  else if (doc.type == "decomposition-db")
    verify_decomposition_db(doc);
  else if (doc.type == "daugavetify")
    verify_daugavetify(doc);
  else if (doc.type == "probe-report")
    verify_probe(doc);
  else if (doc.type == "weak-diameter")
    verify_weak_diameter(doc);
  else
    throw ParseError("unknown certificate type '" + doc.type + "'");
}

}  // namespace treespace
