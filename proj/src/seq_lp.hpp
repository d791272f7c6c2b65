#pragma once

#include <optional>

#include "backend.hpp"
#include "simplex.hpp"

namespace treespace {

// One linear side condition on y over the window, coeffs·y within bounds.
struct SeqConstraint {
  SeqVector coeffs;
  std::optional<Rat> lo;
  std::optional<Rat> hi;
};

struct SeqMaxResult {
  Rat value;
  SeqVector maximizer;
  std::vector<int> window;
};

// Exact sup of ||x - y|| over { y : ||y|| <= 1 } intersected with the
// side conditions. The window is supp(x) ∪ supp(constraints) plus fresh
// coordinates; one fresh slot is exact for c0 and l1, and |weights|
// symmetric slots are exact for Lorentz (off-window mass can always be
// rearranged onto them without changing any norm involved).
SeqMaxResult seq_max_distance(const SeqVector& x, const BackendNorm& b,
                              const std::vector<SeqConstraint>& side);

}  // namespace treespace
