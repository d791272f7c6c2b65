#include "functional.hpp"

#include <map>
#include <sstream>

namespace treespace {

NormedFunctional::NormedFunctional(TreeKind kind, CoeffMap coeffs,
                                   std::vector<FunctionalPart> parts, Rat claimed_norm,
                                   TreeVector witness)
    : kind_(kind),
      coeffs_(std::move(coeffs)),
      parts_(std::move(parts)),
      claimed_(std::move(claimed_norm)),
      witness_(std::move(witness)) {}

NormedFunctional NormedFunctional::zero(TreeKind kind) {
  return NormedFunctional(kind, {}, {}, Rat(0), TreeVector(kind));
}

std::uint32_t NormedFunctional::support_depth() const {
  std::uint32_t d = 0;
  for (const auto& [t, v] : coeffs_) d = std::max(d, t.depth());
  return d;
}

Rat NormedFunctional::operator()(const TreeVector& v) const {
  if (v.kind() != kind_) throw DomainError("mixed tree kinds");
  Rat s = 0;
  for (const auto& [t, c] : coeffs_) s += c * v.value_at(t);
  return s;
}

void NormedFunctional::validate() const {
  if (parts_.empty()) {
    if (!coeffs_.empty() || claimed_ != 0 || !witness_.is_zero())
      throw DomainError("only the zero functional may omit its decomposition");
    return;
  }
  Rat total = 0;
  CoeffMap rebuilt;
  for (const FunctionalPart& p : parts_) {
    if (p.weight < 0) throw DomainError("decomposition weights must be nonnegative");
    total += p.weight;
    if (!is_admissible(kind_, p.set.nodes))
      throw DomainError("decomposition set is not admissible");
    if (p.signs.size() != p.set.nodes.size())
      throw DomainError("decomposition signs misaligned");
    for (std::size_t k = 0; k < p.set.nodes.size(); ++k) {
      if (p.signs[k] != 1 && p.signs[k] != -1) throw DomainError("signs must be ±1");
      rebuilt[p.set.nodes[k]] += p.weight * Rat(p.signs[k]);
    }
  }
  if (total != 1) throw DomainError("decomposition weights must sum to one");
  for (auto it = rebuilt.begin(); it != rebuilt.end();)
    it = it->second == 0 ? rebuilt.erase(it) : std::next(it);
  if (rebuilt != coeffs_) throw DomainError("decomposition does not rebuild the functional");
  if (tree_norm(witness_) > 1) throw DomainError("witness leaves the unit ball");
  if ((*this)(witness_) != claimed_) throw DomainError("witness misses the claimed norm");
}

std::string NormedFunctional::format() const {
  std::ostringstream os;
  os << "functional kind=" << kind_letter(kind_) << "\n";
  for (const auto& [t, v] : coeffs_) os << "coeff " << t.str() << " " << rat_string(v) << "\n";
  for (const FunctionalPart& p : parts_) {
    os << "part " << rat_string(p.weight) << " nodes=";
    for (std::size_t k = 0; k < p.set.nodes.size(); ++k)
      os << (k ? "," : "") << p.set.nodes[k].str();
    os << " signs=";
    for (std::size_t k = 0; k < p.signs.size(); ++k)
      os << (k ? "," : "") << (p.signs[k] > 0 ? "+" : "-");
    os << "\n";
  }
  os << "claim " << rat_string(claimed_) << "\n";
  for (const auto& [t, v] : witness_.coeffs())
    os << "witness " << t.str() << " " << rat_string(v) << "\n";
  for (const auto& [t, v] : witness_.tails())
    os << "witness-tail " << t.str() << " " << rat_string(v) << "\n";
  return os.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, sep)) out.push_back(item);
  return out;
}

}  // namespace

NormedFunctional NormedFunctional::parse_block(const std::vector<std::string>& lines) {
  std::optional<TreeKind> kind;
  CoeffMap coeffs;
  std::vector<FunctionalPart> parts;
  Rat claimed = 0;
  std::optional<TreeVector> witness;
  for (const std::string& line : lines) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    if (tok == "functional") {
      std::string k;
      ls >> k;
      if (k.rfind("kind=", 0) != 0 || k.size() != 6)
        throw ParseError("functional header must carry kind=B|M");
      kind = kind_from_letter(k[5]);
      witness = TreeVector(*kind);
      continue;
    }
    if (!kind) throw ParseError("functional block must start with 'functional kind=…'");
    if (tok == "coeff") {
      std::string n, v;
      ls >> n >> v;
      coeffs[Node::parse(n)] += parse_rat(v);
    } else if (tok == "part") {
      std::string w, nodes, signs;
      ls >> w >> nodes >> signs;
      if (nodes.rfind("nodes=", 0) != 0 || signs.rfind("signs=", 0) != 0)
        throw ParseError("part line must read: part <w> nodes=… signs=…");
      FunctionalPart p;
      p.weight = parse_rat(w);
      for (const std::string& n : split(nodes.substr(6), ','))
        p.set.nodes.push_back(Node::parse(n));
      p.set.kind = is_chain(p.set.nodes) ? AdmissibleKind::BranchSubset
                                         : AdmissibleKind::LambdaSegmentSubset;
      for (const std::string& sgn : split(signs.substr(6), ',')) {
        if (sgn == "+")
          p.signs.push_back(1);
        else if (sgn == "-")
          p.signs.push_back(-1);
        else
          throw ParseError("signs must be + or -");
      }
      parts.push_back(std::move(p));
    } else if (tok == "claim") {
      std::string v;
      ls >> v;
      claimed = parse_rat(v);
    } else if (tok == "witness") {
      std::string n, v;
      ls >> n >> v;
      witness->set_coeff(Node::parse(n), witness->coeff(Node::parse(n)) + parse_rat(v));
    } else if (tok == "witness-tail") {
      std::string n, v;
      ls >> n >> v;
      witness->set_tail(Node::parse(n), witness->tail_amplitude(Node::parse(n)) + parse_rat(v));
    } else {
      throw ParseError("unknown functional line '" + tok + "'");
    }
  }
  if (!kind) throw ParseError("missing functional header");
  for (auto it = coeffs.begin(); it != coeffs.end();)
    it = it->second == 0 ? coeffs.erase(it) : std::next(it);
  NormedFunctional f(*kind, std::move(coeffs), std::move(parts), claimed, *witness);
  f.validate();
  return f;
}

std::vector<NormedFunctional> NormedFunctional::parse_file_text(const std::string& text) {
  std::vector<NormedFunctional> out;
  std::vector<std::string> block;
  std::istringstream is(text);
  std::string line;
  auto flush = [&] {
    if (!block.empty()) {
      out.push_back(parse_block(block));
      block.clear();
    }
  };
  while (std::getline(is, line)) {
    std::istringstream probe(line);
    std::string tok;
    probe >> tok;
    if (tok == "functional") flush();
    if (!tok.empty() && tok[0] != '#') block.push_back(line);
  }
  flush();
  if (out.empty()) throw ParseError("no functionals in file");
  return out;
}

namespace {

// Per subtree: the root-only set {u}, and the best set avoiding u
// (built from the children, never the forbidden sibling pair under the
// modified tree's rule). Empty sets count with weight zero.
struct AntichainDp {
  Rat root_value;
  Rat sans_root;
  NodeSet sans_root_pick;
};

AntichainDp antichain_dp(const Node& u, std::uint32_t levels_left, bool no_siblings,
                         const CoeffMap& w) {
  AntichainDp dp;
  auto it = w.find(u);
  dp.root_value = it != w.end() ? abs(it->second) : Rat(0);
  dp.sans_root = 0;
  if (levels_left == 0) return dp;
  AntichainDp l = antichain_dp(u.child(0), levels_left - 1, no_siblings, w);
  AntichainDp r = antichain_dp(u.child(1), levels_left - 1, no_siblings, w);

  struct Option {
    Rat value;
    NodeSet pick;
  };
  auto left_pick = [&](bool root) {
    return root ? NodeSet{u.child(0)} : l.sans_root_pick;
  };
  auto right_pick = [&](bool root) {
    return root ? NodeSet{u.child(1)} : r.sans_root_pick;
  };
  std::vector<Option> options;
  for (bool lr : {true, false})
    for (bool rr : {true, false}) {
      if (no_siblings && lr && rr) continue;
      Rat value = (lr ? l.root_value : l.sans_root) + (rr ? r.root_value : r.sans_root);
      NodeSet pick = left_pick(lr);
      NodeSet right = right_pick(rr);
      pick.insert(pick.end(), right.begin(), right.end());
      options.push_back({std::move(value), std::move(pick)});
    }
  dp.sans_root = -1;
  for (Option& o : options) {
    // Prefer smaller picks on ties; keeps witnesses free of zero nodes.
    if (o.value > dp.sans_root ||
        (o.value == dp.sans_root && o.pick.size() < dp.sans_root_pick.size())) {
      dp.sans_root = o.value;
      dp.sans_root_pick = std::move(o.pick);
    }
  }
  return dp;
}

AntichainOptimum from_dp(const AntichainDp& dp, const Node& root) {
  AntichainOptimum out;
  if (dp.root_value > dp.sans_root) {
    out.value = dp.root_value;
    out.antichain = {root};
  } else {
    out.value = dp.sans_root;
    out.antichain = sorted_unique(dp.sans_root_pick);
  }
  return out;
}

}  // namespace

AntichainOptimum max_unit_antichain_weight(TreeKind kind, const CoeffMap& weights) {
  std::uint32_t depth = 1;
  for (const auto& [t, v] : weights) depth = std::max(depth, t.depth());
  if (kind == TreeKind::RootedBinary) {
    AntichainDp dp = antichain_dp(Node::root(), depth, false, weights);
    return from_dp(dp, Node::root());
  }
  Node n0 = Node::from_bits({0}), n1 = Node::from_bits({1});
  AntichainDp l = antichain_dp(n0, depth - 1, true, weights);
  AntichainDp r = antichain_dp(n1, depth - 1, true, weights);
  AntichainOptimum out;
  out.value = -1;
  for (bool lr : {true, false})
    for (bool rr : {true, false}) {
      if (lr && rr) continue;  // {(0),(1)} is itself a lambda segment
      Rat value = (lr ? l.root_value : l.sans_root) + (rr ? r.root_value : r.sans_root);
      NodeSet pick = lr ? NodeSet{n0} : l.sans_root_pick;
      NodeSet right = rr ? NodeSet{n1} : r.sans_root_pick;
      pick.insert(pick.end(), right.begin(), right.end());
      if (value > out.value ||
          (value == out.value && pick.size() < out.antichain.size())) {
        out.value = value;
        out.antichain = sorted_unique(std::move(pick));
      }
    }
  return out;
}

NormedFunctional branch_mixture_functional(TreeKind kind, const std::vector<NodeSet>& branches,
                                           const std::vector<Rat>& weights) {
  if (branches.size() != weights.size() || branches.empty())
    throw DomainError("branches and weights must align");
  CoeffMap coeffs;
  std::vector<FunctionalPart> parts;
  Rat total = 0;
  for (std::size_t k = 0; k < branches.size(); ++k) {
    if (!is_chain(branches[k])) throw DomainError("mixture parts must be branch subsets");
    FunctionalPart p;
    p.weight = weights[k];
    p.set = {AdmissibleKind::BranchSubset, sorted_unique(branches[k])};
    p.signs.assign(p.set.nodes.size(), 1);
    for (const Node& t : p.set.nodes) coeffs[t] += p.weight;
    parts.push_back(std::move(p));
    total += weights[k];
  }
  if (total != 1) throw DomainError("mixture weights must sum to one");
  AntichainOptimum opt = max_unit_antichain_weight(kind, coeffs);
  TreeVector witness(kind);
  for (const Node& t : opt.antichain) witness.set_coeff(t, Rat(1));  // coeffs are positive
  NormedFunctional f(kind, std::move(coeffs), std::move(parts), opt.value, witness);
  f.validate();
  return f;
}

}  // namespace treespace
