#pragma once

#include <optional>

#include "admissible.hpp"
#include "simplex.hpp"
#include "tree_vector.hpp"

namespace treespace {

// Linear side condition on y, lower/upper bounds on coeffs·y.
struct TreeSideConstraint {
  CoeffMap coeffs;
  std::optional<Rat> lo;
  std::optional<Rat> hi;
};

struct TreeMaxResult {
  Rat value;
  TreeVector maximizer;
  AdmissibleSet argmax;
  std::uint32_t depth = 1;
};

// Exact sup of ||x - y|| over the depth-d polyhedral unit ball cut by
// the side conditions. One small LP per admissible set and sign
// pattern; optimal y vanishes off the objective and constraint
// supports, which keeps every LP on a small window.
TreeMaxResult tree_max_distance(const TreeVector& x, std::uint32_t depth,
                                const std::vector<TreeSideConstraint>& side);

}  // namespace treespace
