#pragma once

#include <optional>
#include <string>

#include "points.hpp"
#include "rng.hpp"
#include "tree_vector.hpp"

namespace treespace {

struct ProbeReport {
  std::string statement;
  long samples = 0;
  std::uint64_t seed = 0;
  std::uint32_t depth = 0;
  Rat worst_value;
  bool counterexample = false;
  std::optional<TreeVector> witness;   // extremal or offending vector
  std::optional<Rat> sphere_lp_min;    // lasq: exact depth-2 sphere minimum
  std::string notes;
};

struct WeakDiameter {
  std::uint32_t level = 0;  // n: coordinates constrained down to this depth
  Rat tail_bound;           // 2^{-n} < eps/8
  Rat diameter_bound;       // exact sup of ||y-y'|| over the neighborhood
  long lp_count = 0;
};
// x certified to attain its norm on every branch; the weak neighborhood
// |e_t^*(x-y)| <= eps·2^{-|t|-3} for |t| <= n has diameter < eps.
WeakDiameter weak_nbhd_diameter_db(const TreeVector& x, const Rat& eps);

// min over the depth-2 sphere of max(||x+y||, ||x-y||) for
// x = (1/4)e_(0) + (3/4)e_(1), by one LP per facet of the ball, plus a
// seeded sample sweep at the given depth. Any value below 5/4 is a bug
// trap, not a discovery.
ProbeReport lasq_probe(long samples, std::uint32_t depth, std::uint64_t seed);

// Exact min(||x+y||, ||x-y||) for x = (e_(0)+e_(1))/2; always <= 3/2.
Rat octahedral_value(const TreeVector& y);
ProbeReport octahedral_probe(long samples, std::uint32_t depth, std::uint64_t seed);

// Seeded vector in the unit ball, coefficients dyadic.
TreeVector random_ball_vector(Rng& rng, TreeKind kind, std::uint32_t depth,
                              std::size_t max_support = 10);
// Seeded unit-sphere vector: ball sample rescaled by its exact norm.
TreeVector random_sphere_vector(Rng& rng, TreeKind kind, std::uint32_t depth,
                                std::size_t max_support = 10);

}  // namespace treespace
