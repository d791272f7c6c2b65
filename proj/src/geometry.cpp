#include "geometry.hpp"

#include <algorithm>
#include <set>

#include "rng.hpp"
#include "simplex.hpp"

namespace treespace {

WeakDiameter weak_nbhd_diameter_db(const TreeVector& x, const Rat& eps) {
  if (x.kind() != TreeKind::ModifiedBinary) throw DomainError("modified tree expected");
  if (eps <= 0) throw DomainError("eps must be positive");
  if (!all_branches_sum_to(x, Rat(1)) || tree_norm(x) != 1)
    throw DomainError("the point must attain its norm on every branch");

  WeakDiameter out;
  // Smallest n with tail norm 2^{-n} strictly below eps/8; the whole
  // tail of x below depth n is one suffix of each unit branch.
  std::uint32_t n = 1;
  while (pow2(-static_cast<long>(n)) >= eps / 8) ++n;
  out.level = n;
  out.tail_bound = pow2(-static_cast<long>(n));

  TreeVector xd = x.deepened(n);
  if (xd.anchor_depth() > n) throw CapacityError("tails deeper than the constraint level");

  // Boxes: center x_t, half-width eps·2^{-|t|-3}, all coordinates to
  // depth n; every y in the model is positive there, so the budget rows
  // need no sign splitting.
  std::map<Node, std::pair<Rat, Rat>, NodeLess> box;  // lower, upper
  for (const Node& t : nodes_to_depth(TreeKind::ModifiedBinary, n)) {
    Rat center = xd.coeff(t);
    Rat half = eps * pow2(-static_cast<long>(t.depth()) - 3);
    if (center - half < 0) throw DomainError("box dips below the positive cone");
    box[t] = {center - half, center + half};
  }

  std::vector<AdmissibleSet> maximal = enumerate_admissible_sets(TreeKind::ModifiedBinary, n);
  Rat best = 0;
  long lp_count = 0;
  // For each admissible set and sign pattern, U(sigma) + U(-sigma)
  // bounds the pairwise stretch; variables off the objective sit at
  // their lower bounds.
  for (const AdmissibleSet& a : maximal) {
    for (std::uint64_t sigma = 0; sigma < (std::uint64_t{1} << a.nodes.size()); ++sigma) {
      Rat pair_value = 0;
      for (int side : {+1, -1}) {
        std::vector<Node> free_nodes;
        Rat fixed = 0;
        for (std::size_t k = 0; k < a.nodes.size(); ++k) {
          int s = ((sigma >> k) & 1 ? -1 : 1) * side;
          if (s > 0)
            free_nodes.push_back(a.nodes[k]);
          else
            fixed -= box.at(a.nodes[k]).first;  // minimized at the lower bound
        }
        LinearProgram lp;
        lp.num_vars = static_cast<int>(free_nodes.size());
        std::map<Node, int, NodeLess> var;
        for (std::size_t i = 0; i < free_nodes.size(); ++i)
          var[free_nodes[i]] = static_cast<int>(i);
        // shifted variables z = y - lower >= 0
        for (const AdmissibleSet& ap : maximal) {
          std::vector<int> idx;
          Rat budget = 1;
          for (const Node& t : ap.nodes) {
            auto it = var.find(t);
            if (it != var.end())
              idx.push_back(it->second);
            budget -= box.at(t).first;
          }
          if (idx.empty()) continue;
          std::vector<Rat> row(lp.num_vars, Rat(0));
          for (int i : idx) row[i] = 1;
          lp.add_le(std::move(row), budget);
        }
        for (std::size_t i = 0; i < free_nodes.size(); ++i) {
          std::vector<Rat> row(lp.num_vars, Rat(0));
          row[i] = 1;
          lp.add_le(std::move(row),
                    box.at(free_nodes[i]).second - box.at(free_nodes[i]).first);
        }
        lp.objective.assign(lp.num_vars, Rat(1));
        Rat base = 0;
        for (const Node& t : free_nodes) base += box.at(t).first;
        LpSolution sol = solve_lp(lp);
        if (sol.status != LpSolution::Status::Optimal)
          throw std::logic_error("diameter subproblem must be solvable");
        ++lp_count;
        pair_value += base + sol.value + fixed;
      }
      best = std::max(best, pair_value);
    }
  }
  out.diameter_bound = best;
  out.lp_count = lp_count;
  if (out.diameter_bound >= eps) throw std::logic_error("weak neighborhood diameter too large");
  return out;
}

namespace {

// Facet functionals of the depth-d ball: signs on maximal admissible sets.
struct Facet {
  const AdmissibleSet* set;
  std::uint64_t sigma;
};

Rat lasq_sphere_min(std::uint32_t depth, TreeVector* witness) {
  TreeVector x(TreeKind::ModifiedBinary);
  x.set_coeff(Node::from_bits({0}), Rat(1, 4));
  x.set_coeff(Node::from_bits({1}), Rat(3, 4));
  std::vector<AdmissibleSet> maximal = enumerate_admissible_sets(TreeKind::ModifiedBinary, depth);
  std::vector<Node> nodes = nodes_to_depth(TreeKind::ModifiedBinary, depth);
  std::map<Node, int, NodeLess> var;
  for (std::size_t i = 0; i < nodes.size(); ++i) var[nodes[i]] = static_cast<int>(2 * i);
  int tau = static_cast<int>(2 * nodes.size());
  int nv = tau + 1;

  std::vector<Facet> facets;
  for (const AdmissibleSet& a : maximal)
    for (std::uint64_t sigma = 0; sigma < (std::uint64_t{1} << a.nodes.size()); ++sigma)
      facets.push_back({&a, sigma});

  Rat best;
  bool have = false;
  for (const Facet& facet : facets) {
    // minimize tau subject to: psi(x+y) <= tau, psi(x-y) <= tau for all
    // facet functionals psi; ball rows; the chosen facet at equality.
    LinearProgram lp;
    lp.num_vars = nv;
    auto row = [&] { return std::vector<Rat>(nv, Rat(0)); };
    for (const Facet& f : facets) {
      Rat at_x = 0;
      auto plus = row();
      auto minus = row();
      for (std::size_t k = 0; k < f.set->nodes.size(); ++k) {
        int s = (f.sigma >> k) & 1 ? -1 : 1;
        const Node& t = f.set->nodes[k];
        at_x += Rat(s) * x.coeff(t);
        plus[var.at(t)] += s;
        plus[var.at(t) + 1] -= s;
        minus[var.at(t)] -= s;
        minus[var.at(t) + 1] += s;
      }
      plus[tau] = -1;
      minus[tau] = -1;
      // psi(x+y) <= tau and psi(x-y) <= tau
      lp.add_le(std::move(plus), -at_x);
      lp.add_le(std::move(minus), -at_x);
    }
    for (const AdmissibleSet& ap : maximal) {
      auto r = row();
      for (const Node& t : ap.nodes) {
        r[var.at(t)] = 1;
        r[var.at(t) + 1] = 1;
      }
      lp.add_le(std::move(r), Rat(1));
    }
    {
      auto r = row();
      for (std::size_t k = 0; k < facet.set->nodes.size(); ++k) {
        int s = (facet.sigma >> k) & 1 ? -1 : 1;
        const Node& t = facet.set->nodes[k];
        r[var.at(t)] += s;
        r[var.at(t) + 1] -= s;
      }
      lp.add_eq(r, Rat(1));
    }
    lp.objective = row();
    lp.objective[tau] = -1;  // maximize -tau
    LpSolution sol = solve_lp(lp);
    if (sol.status == LpSolution::Status::Infeasible) continue;  // facet misses the cone
    if (sol.status != LpSolution::Status::Optimal)
      throw std::logic_error("facet subproblem unbounded");
    Rat value = -sol.value;
    if (!have || value < best) {
      have = true;
      best = value;
      if (witness) {
        *witness = TreeVector(TreeKind::ModifiedBinary);
        for (const auto& [t, i] : var) {
          Rat v = sol.x[i] - sol.x[i + 1];
          if (v != 0) witness->set_coeff(t, v);
        }
      }
    }
  }
  if (!have) throw std::logic_error("no facet subproblem was feasible");
  return best;
}

}  // namespace

ProbeReport lasq_probe(long samples, std::uint32_t depth, std::uint64_t seed) {
  if (depth < 2) throw DomainError("depth must be at least 2");
  TreeVector x(TreeKind::ModifiedBinary);
  x.set_coeff(Node::from_bits({0}), Rat(1, 4));
  x.set_coeff(Node::from_bits({1}), Rat(3, 4));

  ProbeReport report;
  report.statement = "lasq";
  report.samples = samples;
  report.seed = seed;
  report.depth = depth;

  TreeVector lp_witness(TreeKind::ModifiedBinary);
  Rat lp_min = lasq_sphere_min(2, &lp_witness);
  report.worst_value = lp_min;
  report.witness = lp_witness;
  report.sphere_lp_min = lp_min;
  report.notes = "depth-2 sphere minimum by facet LPs, then sampled spheres";
  if (lp_min < Rat(5, 4)) {
    report.counterexample = true;
    return report;
  }

  Rng rng(seed);
  for (long i = 0; i < samples; ++i) {
    TreeVector y = random_sphere_vector(rng, TreeKind::ModifiedBinary, depth);
    Rat value = std::max(tree_norm(x + y), tree_norm(x - y));
    if (value < report.worst_value) {
      report.worst_value = value;
      report.witness = y;
    }
    if (value < Rat(5, 4)) {
      report.counterexample = true;
      report.witness = y;
      return report;
    }
  }
  return report;
}

Rat octahedral_value(const TreeVector& y) {
  if (tree_norm(y) != 1) throw DomainError("octahedral probe needs a unit vector");
  TreeVector x(TreeKind::ModifiedBinary);
  x.set_coeff(Node::from_bits({0}), Rat(1, 2));
  x.set_coeff(Node::from_bits({1}), Rat(1, 2));
  Rat value = std::min(tree_norm(x + y), tree_norm(x - y));
  if (value > Rat(3, 2)) throw std::logic_error("octahedral bound violated");
  return value;
}

ProbeReport octahedral_probe(long samples, std::uint32_t depth, std::uint64_t seed) {
  ProbeReport report;
  report.statement = "octahedral";
  report.samples = samples;
  report.seed = seed;
  report.depth = depth;
  report.worst_value = 0;
  Rng rng(seed);
  for (long i = 0; i < samples; ++i) {
    TreeVector y = random_sphere_vector(rng, TreeKind::ModifiedBinary, depth);
    Rat value = octahedral_value(y);
    if (value > report.worst_value) {
      report.worst_value = value;
      report.witness = y;
    }
  }
  report.notes = "largest sampled min ||x±y||; the bound 3/2 is universal";
  return report;
}

TreeVector random_ball_vector(Rng& rng, TreeKind kind, std::uint32_t depth,
                              std::size_t max_support) {
  std::vector<Node> nodes = nodes_to_depth(kind, depth);
  TreeVector v(kind);
  std::size_t count = 1 + rng.below(max_support);
  for (std::size_t i = 0; i < count; ++i) {
    const Node& t = nodes[rng.below(nodes.size())];
    v.set_coeff(t, rng.signed_dyadic());
  }
  Rat norm = tree_norm(v);
  if (norm > 1) v = v.scaled(1 / norm);
  return v;
}

TreeVector random_sphere_vector(Rng& rng, TreeKind kind, std::uint32_t depth,
                                std::size_t max_support) {
  for (;;) {
    TreeVector v = random_ball_vector(rng, kind, depth, max_support);
    Rat norm = tree_norm(v);
    if (norm == 0) continue;
    return v.scaled(1 / norm);
  }
}

}  // namespace treespace
