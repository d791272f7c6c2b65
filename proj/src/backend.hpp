#pragma once

#include <map>
#include <string>
#include <vector>

#include "rational.hpp"

namespace treespace {

// Classical 1-unconditional coordinate norms on finitely supported
// rational sequences. Lorentz weights are a finite list, extended by
// zero: only the top-|w| rearranged entries count.
struct BackendNorm {
  enum class Tag { C0, L1, Lorentz };
  Tag tag = Tag::L1;
  std::vector<Rat> weights;

  static BackendNorm c0() { return {Tag::C0, {}}; }
  static BackendNorm l1() { return {Tag::L1, {}}; }
  static BackendNorm lorentz(std::vector<Rat> w);

  void validate() const;
  bool is_symmetric() const { return true; }  // all three are 1-symmetric
  std::string str() const;
  static BackendNorm parse(const std::string& text);
};

using SeqVector = std::map<int, Rat>;  // nonzero entries, indices >= 1

Rat backend_norm(const SeqVector& x, const BackendNorm& b);

SeqVector seq_project(const SeqVector& x, const std::vector<int>& keep);
SeqVector seq_remove(const SeqVector& x, const std::vector<int>& drop);
std::vector<int> seq_support(const SeqVector& x);

// Exact dual norm of a finitely supported functional.
Rat backend_dual_norm(const SeqVector& f, const BackendNorm& b);

// A functional of dual norm one attaining backend_norm(P_A x) on A;
// Lorentz assigns the largest weights to the largest |x_i| (ties by
// smaller index first).
SeqVector norming_functional(const SeqVector& x, const std::vector<int>& a,
                             const BackendNorm& b);

Rat seq_apply(const SeqVector& f, const SeqVector& x);

std::string seq_string(const SeqVector& x);

}  // namespace treespace
