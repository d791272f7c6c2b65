#pragma once

#include <string>

#include "construct.hpp"
#include "geometry.hpp"
#include "minimal_sets.hpp"
#include "points.hpp"

namespace treespace {

class VerifyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Self-contained text certificates. Every claim a certificate makes is
// recomputed from scratch by verify_certificate; the first violated
// claim is reported in the exception.

std::string daugavet_certificate(const TreeVector& x, const DaugavetCheck& check);
std::string rooted_refutation_certificate(const TreeVector& x, const RootedRefutation& r);
std::string delta_witness_certificate(const NormedFunctional& phi, const Rat& delta,
                                      const DeltaWitness& w);
std::string delta_refutation_certificate(const SeqDeltaRefutation& r);
std::string decomposition_certificate(const ConvexDecomposition& d);
std::string db_decomposition_certificate(const DaugavetHullDecomposition& d);
std::string daugavetify_certificate(const TreeVector& y,
                                    const std::vector<NormedFunctional>& phis, const Rat& eps,
                                    const Daugavetified& d);
std::string probe_certificate(const ProbeReport& r, const Rat& extra_lp_min = Rat(-1));
std::string weak_diameter_certificate(const TreeVector& x, const Rat& eps,
                                      const WeakDiameter& d);

// Throws VerifyError on the first violated claim, ParseError on malformed input.
void verify_certificate(const std::string& text);

}  // namespace treespace
