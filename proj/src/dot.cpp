#include "dot.hpp"

#include <set>
#include <sstream>

#include "tree_norm.hpp"

namespace treespace {

std::string export_dot(const TreeVector& v, bool highlight_norming) {
  std::set<Node, NodeLess> highlighted;
  std::set<Node, NodeLess> anchors;
  if (highlight_norming && !v.is_zero()) {
    NormingReport report = norming_sets(v);
    for (const AdmissibleSet& a : report.sets)
      for (const Node& t : a.nodes) highlighted.insert(t);
    for (const Node& t : report.norming_anchors) anchors.insert(t);
  }
  std::uint32_t depth = std::max<std::uint32_t>(1, v.support_depth());
  std::ostringstream os;
  os << "digraph tree {\n  node [shape=circle, fontsize=10];\n";
  auto name = [](const Node& t) { return "n" + (t.is_root() ? std::string("root") : t.str()); };
  std::vector<Node> nodes = nodes_to_depth(v.kind(), depth);
  for (const Node& t : nodes) {
    os << "  " << name(t) << " [label=\"" << t.str();
    Rat c = v.coeff(t);
    if (c != 0) os << "\\n" << rat_string(c);
    if (v.tail_amplitude(t) != 0) os << "\\ntail " << rat_string(v.tail_amplitude(t));
    os << "\"";
    if (anchors.count(t))
      os << ", style=filled, fillcolor=lightgoldenrod";
    else if (highlighted.count(t))
      os << ", style=filled, fillcolor=lightblue";
    os << "];\n";
  }
  for (const Node& t : nodes) {
    if (t.depth() == 0) continue;
    Node p = t.parent();
    if (p.is_root() && v.kind() == TreeKind::ModifiedBinary) continue;
    os << "  " << name(p) << " -> " << name(t) << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace treespace
