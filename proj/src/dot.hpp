#pragma once

#include <string>

#include "tree_vector.hpp"

namespace treespace {

// Graphviz rendering: node addresses as labels, coefficients as
// sublabels, norming sets and anchors highlighted.
std::string export_dot(const TreeVector& v, bool highlight_norming);

}  // namespace treespace
