#include "backend.hpp"

#include <algorithm>
#include <sstream>

namespace treespace {

BackendNorm BackendNorm::lorentz(std::vector<Rat> w) {
  BackendNorm b{Tag::Lorentz, std::move(w)};
  b.validate();
  return b;
}

void BackendNorm::validate() const {
  if (tag != Tag::Lorentz) return;
  if (weights.empty() || weights.front() != 1)
    throw DomainError("Lorentz weights must start with 1");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0) throw DomainError("Lorentz weights must be positive");
    if (i > 0 && weights[i] > weights[i - 1])
      throw DomainError("Lorentz weights must be non-increasing");
  }
}

std::string BackendNorm::str() const {
  switch (tag) {
    case Tag::C0:
      return "c0";
    case Tag::L1:
      return "l1";
    default: {
      std::string s = "lorentz:";
      for (std::size_t i = 0; i < weights.size(); ++i)
        s += (i ? "," : "") + rat_string(weights[i]);
      return s;
    }
  }
}

BackendNorm BackendNorm::parse(const std::string& text) {
  if (text == "c0") return c0();
  if (text == "l1") return l1();
  if (text.rfind("lorentz:", 0) == 0) {
    std::vector<Rat> w;
    std::string rest = text.substr(8);
    std::istringstream is(rest);
    std::string item;
    while (std::getline(is, item, ',')) w.push_back(parse_rat(item));
    return lorentz(std::move(w));
  }
  throw ParseError("unknown backend '" + text + "'");
}

namespace {

std::vector<Rat> sorted_abs_desc(const SeqVector& x) {
  std::vector<Rat> vals;
  vals.reserve(x.size());
  for (const auto& [i, v] : x) vals.push_back(abs(v));
  std::sort(vals.begin(), vals.end(), std::greater<Rat>());
  return vals;
}

}  // namespace

Rat backend_norm(const SeqVector& x, const BackendNorm& b) {
  b.validate();
  Rat out = 0;
  switch (b.tag) {
    case BackendNorm::Tag::C0:
      for (const auto& [i, v] : x) out = std::max(out, Rat(abs(v)));
      return out;
    case BackendNorm::Tag::L1:
      for (const auto& [i, v] : x) out += abs(v);
      return out;
    case BackendNorm::Tag::Lorentz: {
      std::vector<Rat> vals = sorted_abs_desc(x);
      for (std::size_t i = 0; i < vals.size() && i < b.weights.size(); ++i)
        out += b.weights[i] * vals[i];
      return out;
    }
  }
  return out;
}

SeqVector seq_project(const SeqVector& x, const std::vector<int>& keep) {
  SeqVector out;
  for (int i : keep) {
    auto it = x.find(i);
    if (it != x.end()) out[i] = it->second;
  }
  return out;
}

SeqVector seq_remove(const SeqVector& x, const std::vector<int>& drop) {
  SeqVector out = x;
  for (int i : drop) out.erase(i);
  return out;
}

std::vector<int> seq_support(const SeqVector& x) {
  std::vector<int> out;
  for (const auto& [i, v] : x) out.push_back(i);
  return out;
}

Rat backend_dual_norm(const SeqVector& f, const BackendNorm& b) {
  b.validate();
  switch (b.tag) {
    case BackendNorm::Tag::C0: {  // dual is l1
      Rat s = 0;
      for (const auto& [i, v] : f) s += abs(v);
      return s;
    }
    case BackendNorm::Tag::L1: {  // dual is sup
      Rat m = 0;
      for (const auto& [i, v] : f) m = std::max(m, Rat(abs(v)));
      return m;
    }
    case BackendNorm::Tag::Lorentz: {
      // max_k (sum of k largest |f_i|) / (w_1 + ... + w_min(k,|w|))
      std::vector<Rat> vals = sorted_abs_desc(f);
      Rat best = 0, top = 0, wsum = 0;
      for (std::size_t k = 0; k < vals.size(); ++k) {
        top += vals[k];
        if (k < b.weights.size()) wsum += b.weights[k];
        best = std::max(best, Rat(top / wsum));
      }
      return best;
    }
  }
  return Rat(0);
}

SeqVector norming_functional(const SeqVector& x, const std::vector<int>& a,
                             const BackendNorm& b) {
  SeqVector f;
  auto sgn = [](const Rat& v) { return v < 0 ? Rat(-1) : Rat(1); };
  switch (b.tag) {
    case BackendNorm::Tag::C0: {
      if (a.size() != 1) throw DomainError("c0 norming sets are singletons");
      auto it = x.find(a.front());
      if (it == x.end()) throw DomainError("norming index outside support");
      f[a.front()] = sgn(it->second);
      return f;
    }
    case BackendNorm::Tag::L1: {
      for (int i : a) {
        auto it = x.find(i);
        f[i] = it == x.end() ? Rat(1) : sgn(it->second);
      }
      return f;
    }
    case BackendNorm::Tag::Lorentz: {
      std::vector<int> order = a;
      std::sort(order.begin(), order.end(), [&](int i, int j) {
        Rat ai = abs(x.count(i) ? x.at(i) : Rat(0));
        Rat aj = abs(x.count(j) ? x.at(j) : Rat(0));
        if (ai != aj) return ai > aj;
        return i < j;
      });
      for (std::size_t k = 0; k < order.size(); ++k) {
        Rat w = k < b.weights.size() ? b.weights[k] : Rat(0);
        Rat v = x.count(order[k]) ? x.at(order[k]) : Rat(0);
        if (w != 0) f[order[k]] = w * sgn(v);
      }
      return f;
    }
  }
  return f;
}

Rat seq_apply(const SeqVector& f, const SeqVector& x) {
  Rat s = 0;
  for (const auto& [i, v] : f) {
    auto it = x.find(i);
    if (it != x.end()) s += v * it->second;
  }
  return s;
}

std::string seq_string(const SeqVector& x) {
  std::string s = "(";
  bool first = true;
  for (const auto& [i, v] : x) {
    if (!first) s += ", ";
    s += std::to_string(i) + ":" + rat_string(v);
    first = false;
  }
  return s + ")";
}

}  // namespace treespace
