#include "seq_lp.hpp"

#include <algorithm>
#include <set>

namespace treespace {

namespace {

// Objective functionals: sign/weight assignments over the window whose
// pointwise max equals ||x - y||. Fresh slots carry y >= 0 and enter
// with sign -1; an ordering constraint breaks their symmetry.
struct Objective {
  SeqVector coeffs;  // functional applied to d = x - y
  Rat const_part;    // functional applied to x
};

std::vector<Objective> c0_objectives(const SeqVector& x, const std::vector<int>& window) {
  std::vector<Objective> out;
  for (int i : window) {
    Rat xi = x.count(i) ? x.at(i) : Rat(0);
    for (int s : {1, -1}) {
      Objective o;
      o.coeffs[i] = s;
      o.const_part = s * xi;
      out.push_back(std::move(o));
    }
  }
  return out;
}

std::vector<Objective> l1_objectives(const SeqVector& x, const std::vector<int>& window,
                                     const std::set<int>& fresh) {
  std::vector<int> sign_vars;
  for (int i : window)
    if (!fresh.count(i)) sign_vars.push_back(i);
  std::vector<Objective> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << sign_vars.size()); ++mask) {
    Objective o;
    o.const_part = 0;
    for (std::size_t k = 0; k < sign_vars.size(); ++k) {
      int i = sign_vars[k];
      int s = (mask >> k) & 1 ? -1 : 1;
      o.coeffs[i] = s;
      o.const_part += Rat(s) * (x.count(i) ? x.at(i) : Rat(0));
    }
    for (int f : fresh) o.coeffs[f] = -1;  // d_f = -y_f, y_f >= 0
    out.push_back(std::move(o));
  }
  return out;
}

void lorentz_assignments(const std::vector<Rat>& weights, const std::vector<int>& supp,
                         const std::vector<int>& fresh, std::size_t wi,
                         std::vector<std::pair<int, Rat>>& current, std::size_t fresh_used,
                         std::vector<std::vector<std::pair<int, Rat>>>& out) {
  if (wi == weights.size()) {
    out.push_back(current);
    return;
  }
  // Assign weight wi to an unused support index…
  for (int i : supp) {
    bool used = false;
    for (auto& [j, w] : current)
      if (j == i) used = true;
    if (used) continue;
    current.emplace_back(i, weights[wi]);
    lorentz_assignments(weights, supp, fresh, wi + 1, current, fresh_used, out);
    current.pop_back();
  }
  // …or to the next fresh slot (weights on fresh slots stay descending,
  // matching the descending fresh values).
  if (fresh_used < fresh.size()) {
    current.emplace_back(fresh[fresh_used], weights[wi]);
    lorentz_assignments(weights, supp, fresh, wi + 1, current, fresh_used + 1, out);
    current.pop_back();
  }
}

std::vector<Objective> lorentz_objectives(const SeqVector& x, const BackendNorm& b,
                                          const std::vector<int>& supp,
                                          const std::vector<int>& fresh) {
  std::vector<std::vector<std::pair<int, Rat>>> assignments;
  std::vector<std::pair<int, Rat>> current;
  lorentz_assignments(b.weights, supp, fresh, 0, current, 0, assignments);
  std::set<int> fresh_set(fresh.begin(), fresh.end());
  std::vector<Objective> out;
  for (const auto& asg : assignments) {
    std::vector<int> signed_pos;
    for (const auto& [i, w] : asg)
      if (!fresh_set.count(i)) signed_pos.push_back(i);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << signed_pos.size()); ++mask) {
      Objective o;
      o.const_part = 0;
      for (const auto& [i, w] : asg) {
        int s;
        if (fresh_set.count(i)) {
          s = -1;
        } else {
          std::size_t k =
              std::find(signed_pos.begin(), signed_pos.end(), i) - signed_pos.begin();
          s = (mask >> k) & 1 ? -1 : 1;
        }
        o.coeffs[i] = Rat(s) * w;
        o.const_part += Rat(s) * w * (x.count(i) ? x.at(i) : Rat(0));
      }
      out.push_back(std::move(o));
    }
  }
  return out;
}

}  // namespace

SeqMaxResult seq_max_distance(const SeqVector& x, const BackendNorm& b,
                              const std::vector<SeqConstraint>& side) {
  b.validate();
  std::set<int> window_set;
  for (const auto& [i, v] : x) window_set.insert(i);
  for (const auto& c : side)
    for (const auto& [i, v] : c.coeffs) window_set.insert(i);
  int next = window_set.empty() ? 1 : *window_set.rbegin() + 1;
  int fresh_count = b.tag == BackendNorm::Tag::Lorentz ? static_cast<int>(b.weights.size()) : 1;
  std::vector<int> fresh;
  for (int k = 0; k < fresh_count; ++k) fresh.push_back(next + k);
  std::vector<int> supp(window_set.begin(), window_set.end());
  std::vector<int> window = supp;
  window.insert(window.end(), fresh.begin(), fresh.end());
  std::set<int> fresh_set(fresh.begin(), fresh.end());

  // Variable layout: y+_i, y-_i per support index, then y_f per fresh
  // slot (nonnegative), then Lorentz auxiliaries.
  std::map<int, int> pos_var, neg_var;
  int nv = 0;
  for (int i : supp) {
    pos_var[i] = nv++;
    neg_var[i] = nv++;
  }
  std::map<int, int> fresh_var;
  for (int f : fresh) fresh_var[f] = nv++;

  int lorentz_L = b.tag == BackendNorm::Tag::Lorentz ? static_cast<int>(b.weights.size()) : 0;
  int s_var0 = nv;
  nv += lorentz_L;
  int r_var0 = nv;
  nv += lorentz_L * static_cast<int>(window.size());

  LinearProgram lp;
  lp.num_vars = nv;
  auto row = [&]() { return std::vector<Rat>(nv, Rat(0)); };
  auto abs_coeff = [&](std::vector<Rat>& r, int i, const Rat& c) {
    if (fresh_set.count(i)) {
      r[fresh_var[i]] += c;
    } else {
      r[pos_var[i]] += c;
      r[neg_var[i]] += c;
    }
  };
  auto y_coeff = [&](std::vector<Rat>& r, int i, const Rat& c) {
    if (fresh_set.count(i)) {
      r[fresh_var[i]] += c;
    } else {
      r[pos_var[i]] += c;
      r[neg_var[i]] -= c;
    }
  };

  // Ball.
  switch (b.tag) {
    case BackendNorm::Tag::C0:
      for (int i : window) {
        auto r = row();
        abs_coeff(r, i, Rat(1));
        lp.add_le(std::move(r), Rat(1));
      }
      break;
    case BackendNorm::Tag::L1: {
      auto r = row();
      for (int i : window) abs_coeff(r, i, Rat(1));
      lp.add_le(std::move(r), Rat(1));
      break;
    }
    case BackendNorm::Tag::Lorentz: {
      // |y_i| <= s_k + r_{k,i}; sum_k (w_k - w_{k+1}) (k s_k + sum_i r_{k,i}) <= 1.
      for (int k = 0; k < lorentz_L; ++k) {
        for (std::size_t ii = 0; ii < window.size(); ++ii) {
          auto r = row();
          abs_coeff(r, window[ii], Rat(1));
          r[s_var0 + k] -= 1;
          r[r_var0 + k * window.size() + ii] -= 1;
          lp.add_le(std::move(r), Rat(0));
        }
      }
      auto ball = row();
      for (int k = 0; k < lorentz_L; ++k) {
        Rat delta = b.weights[k] - (k + 1 < lorentz_L ? b.weights[k + 1] : Rat(0));
        ball[s_var0 + k] += delta * Rat(k + 1);
        for (std::size_t ii = 0; ii < window.size(); ++ii)
          ball[r_var0 + k * window.size() + ii] += delta;
      }
      lp.add_le(std::move(ball), Rat(1));
      break;
    }
  }
  // Fresh symmetry break: descending values.
  for (std::size_t k = 0; k + 1 < fresh.size(); ++k) {
    auto r = row();
    r[fresh_var[fresh[k + 1]]] = 1;
    r[fresh_var[fresh[k]]] = -1;
    lp.add_le(std::move(r), Rat(0));
  }
  // Side conditions.
  for (const auto& c : side) {
    auto base = row();
    for (const auto& [i, v] : c.coeffs) y_coeff(base, i, v);
    if (c.hi) lp.add_le(base, *c.hi);
    if (c.lo) lp.add_ge(base, *c.lo);
  }

  // Objectives.
  std::vector<Objective> objectives;
  switch (b.tag) {
    case BackendNorm::Tag::C0:
      objectives = c0_objectives(x, window);
      break;
    case BackendNorm::Tag::L1:
      objectives = l1_objectives(x, window, fresh_set);
      break;
    case BackendNorm::Tag::Lorentz:
      objectives = lorentz_objectives(x, b, supp, fresh);
      break;
  }
  // Decreasing optimistic bound, pruning once it cannot win.
  std::sort(objectives.begin(), objectives.end(),
            [](const Objective& a, const Objective& o) { return a.const_part > o.const_part; });

  SeqMaxResult result;
  result.window = window;
  bool have = false;
  for (const Objective& o : objectives) {
    if (have && o.const_part + 1 <= result.value) continue;  // |phi(y)| <= ||y|| <= 1
    lp.objective = row();
    for (const auto& [i, v] : o.coeffs) {
      // phi(d) = phi(x) - phi(y)
      y_coeff(lp.objective, i, -v);
    }
    LpSolution sol = solve_lp(lp);
    if (sol.status == LpSolution::Status::Infeasible)
      throw DomainError("empty feasible region in sequence maximization");
    if (sol.status == LpSolution::Status::Unbounded)
      throw std::logic_error("ball constraints cannot be unbounded");
    Rat total = o.const_part + sol.value;
    if (!have || total > result.value) {
      have = true;
      result.value = total;
      result.maximizer.clear();
      for (int i : supp) {
        Rat v = sol.x[pos_var[i]] - sol.x[neg_var[i]];
        if (v != 0) result.maximizer[i] = v;
      }
      for (int f : fresh) {
        Rat v = sol.x[fresh_var[f]];
        if (v != 0) result.maximizer[f] = v;
      }
    }
  }
  if (!have) throw DomainError("no objectives generated");
  // The recorded maximizer's distance must reproduce the optimum.
  SeqVector d = x;
  for (const auto& [i, v] : result.maximizer) d[i] -= v;
  for (auto it = d.begin(); it != d.end();)
    it = it->second == 0 ? d.erase(it) : std::next(it);
  if (backend_norm(d, b) != result.value)
    throw std::logic_error("maximizer does not attain the computed optimum");
  return result;
}

}  // namespace treespace
