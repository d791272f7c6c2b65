#pragma once

#include <string>

namespace treespace {

// One run reproducing the library's headline exact values: norms of the
// dyadic vectors, the shifted-point refutation, a distance-two delta
// witness, a certified Daugavet-point, the convex decompositions, the
// minimal-set examples on the classical backends, and the geometry
// probes. Returns the report; sets ok=false if any line fails.
std::string demo_report(bool& ok);

}  // namespace treespace
