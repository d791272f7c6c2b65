#include "ball_lp.hpp"

#include <algorithm>
#include <set>

#include "tree_norm.hpp"

namespace treespace {

TreeMaxResult tree_max_distance(const TreeVector& x, std::uint32_t depth,
                                const std::vector<TreeSideConstraint>& side) {
  if (x.anchor_depth() > depth) throw CapacityError("depth below the tail anchors");
  for (const TreeSideConstraint& c : side)
    for (const auto& [t, v] : c.coeffs)
      if (t.depth() > depth) throw CapacityError("side constraint beyond the working depth");
  TreeVector xd = x.deepened(depth);
  std::vector<AdmissibleSet> maximal = enumerate_admissible_sets(x.kind(), depth);

  struct Job {
    std::size_t set_index;
    std::uint64_t sigma;
    Rat bound;
    Rat const_part;
    Rat bonus;
  };
  std::vector<Job> jobs;
  for (std::size_t ai = 0; ai < maximal.size(); ++ai) {
    const AdmissibleSet& a = maximal[ai];
    Rat bonus = 0;
    if (a.kind == AdmissibleKind::BranchSubset)
      bonus = abs(xd.tail_amplitude(a.nodes.back()));
    for (std::uint64_t sigma = 0; sigma < (std::uint64_t{1} << a.nodes.size()); ++sigma) {
      Rat cpart = 0;
      for (std::size_t k = 0; k < a.nodes.size(); ++k) {
        int s = (sigma >> k) & 1 ? -1 : 1;
        cpart += Rat(s) * xd.coeff(a.nodes[k]);
      }
      jobs.push_back({ai, sigma, cpart + bonus + 1, cpart, bonus});
    }
  }
  std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) {
    return a.bound > b.bound;
  });

  TreeMaxResult result;
  result.depth = depth;
  result.maximizer = TreeVector(x.kind());
  bool have = false;
  for (const Job& job : jobs) {
    if (have && job.bound <= result.value) break;  // sorted: nothing better remains
    const AdmissibleSet& a = maximal[job.set_index];
    // Window: objective nodes plus side-condition supports.
    NodeSet window = a.nodes;
    for (const TreeSideConstraint& c : side)
      for (const auto& [t, v] : c.coeffs) window.push_back(t);
    window = sorted_unique(std::move(window));
    std::map<Node, int, NodeLess> var;  // y+ at 2i, y- at 2i+1
    for (std::size_t i = 0; i < window.size(); ++i) var[window[i]] = static_cast<int>(2 * i);

    LinearProgram lp;
    lp.num_vars = static_cast<int>(2 * window.size());
    auto row = [&] { return std::vector<Rat>(lp.num_vars, Rat(0)); };
    std::set<std::vector<int>> seen;
    for (const AdmissibleSet& ap : maximal) {
      std::vector<int> idx;
      for (const Node& t : ap.nodes) {
        auto it = var.find(t);
        if (it != var.end()) idx.push_back(it->second);
      }
      if (idx.empty() || !seen.insert(idx).second) continue;
      auto r = row();
      for (int v : idx) {
        r[v] = 1;
        r[v + 1] = 1;
      }
      lp.add_le(std::move(r), Rat(1));
    }
    for (const TreeSideConstraint& c : side) {
      auto r = row();
      for (const auto& [t, v] : c.coeffs) {
        r[var.at(t)] += v;
        r[var.at(t) + 1] -= v;
      }
      if (c.hi) lp.add_le(r, *c.hi);
      if (c.lo) lp.add_ge(r, *c.lo);
    }
    lp.objective = row();
    for (std::size_t k = 0; k < a.nodes.size(); ++k) {
      int s = (job.sigma >> k) & 1 ? -1 : 1;
      lp.objective[var.at(a.nodes[k])] -= s;
      lp.objective[var.at(a.nodes[k]) + 1] += s;
    }
    LpSolution sol = solve_lp(lp);
    if (sol.status == LpSolution::Status::Infeasible)
      throw DomainError("empty feasible region (slice misses the depth-limited ball)");
    if (sol.status == LpSolution::Status::Unbounded)
      throw std::logic_error("ball constraints cannot be unbounded");
    Rat total = job.const_part + job.bonus + sol.value;
    if (!have || total > result.value) {
      have = true;
      result.value = total;
      result.argmax = a;
      result.maximizer = TreeVector(x.kind());
      for (const auto& [t, v] : var) {
        Rat y = sol.x[v] - sol.x[v + 1];
        if (y != 0) result.maximizer.set_coeff(t, y);
      }
    }
  }
  if (!have) throw DomainError("no admissible sets at this depth");
  // The reported optimum must be reproduced by the recorded maximizer.
  if (distance(xd, result.maximizer) != result.value)
    throw std::logic_error("maximizer does not attain the computed optimum");
  return result;
}

}  // namespace treespace
