#pragma once

// Brute-force reference implementations used only by the tests. They share no
// code with the library beyond the Monomial/MonomialIdeal value types.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <vector>

#include "monodepth/certificate.hpp"
#include "monodepth/monomial.hpp"

namespace oracle {

using monodepth::Exponent;
using monodepth::ExponentVector;
using monodepth::MonomialIdeal;

inline std::vector<ExponentVector> box(const ExponentVector& upper) {
  std::vector<ExponentVector> out;
  ExponentVector cur(upper.size(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t j = upper.size();
    while (j > 0 && cur[j - 1] == upper[j - 1]) cur[--j] = 0;
    if (j == 0) return out;
    ++cur[j - 1];
  }
}

inline std::size_t box_size(const ExponentVector& upper) {
  std::size_t s = 1;
  for (Exponent e : upper) s *= e + 1;
  return s;
}

inline bool leq(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] > b[j]) return false;
  return true;
}

inline bool member(const std::vector<ExponentVector>& gens, const ExponentVector& u) {
  return std::any_of(gens.begin(), gens.end(), [&](const ExponentVector& g) { return leq(g, u); });
}

inline std::vector<ExponentVector> gens_of(const MonomialIdeal& I) {
  std::vector<ExponentVector> out;
  for (const auto& g : I.generators()) out.push_back(g.exponents());
  return out;
}

inline ExponentVector lcm_of(const std::vector<ExponentVector>& gens, std::size_t n) {
  ExponentVector g(n, 0);
  for (const auto& v : gens)
    for (std::size_t j = 0; j < n; ++j) g[j] = std::max(g[j], v[j]);
  return g;
}

// Every prime of the form (I : u). It suffices to take u in [0, lcm].
inline std::set<std::vector<std::size_t>> ass(const MonomialIdeal& I) {
  const std::size_t n = I.num_vars();
  const auto gens = gens_of(I);
  std::set<std::vector<std::size_t>> primes;
  for (const auto& u : box(lcm_of(gens, n))) {
    if (member(gens, u)) continue;
    std::vector<ExponentVector> col;
    for (const auto& v : gens) {
      ExponentVector q(n);
      for (std::size_t j = 0; j < n; ++j) q[j] = v[j] > u[j] ? v[j] - u[j] : 0;
      col.push_back(q);
    }
    // Minimal elements of the colon generators.
    std::vector<ExponentVector> minimal;
    for (const auto& a : col) {
      bool dominated = false;
      for (const auto& b : col)
        if (b != a && leq(b, a)) dominated = true;
      if (!dominated && std::find(minimal.begin(), minimal.end(), a) == minimal.end())
        minimal.push_back(a);
    }
    std::vector<std::size_t> vars;
    bool prime = true;
    for (const auto& a : minimal) {
      std::size_t total = 0, var = 0;
      for (std::size_t j = 0; j < n; ++j) {
        total += a[j];
        if (a[j]) var = j;
      }
      if (total != 1) prime = false;
      vars.push_back(var);
    }
    if (prime) {
      std::sort(vars.begin(), vars.end());
      primes.insert(vars);
    }
  }
  return primes;
}

// Points of the characteristic poset: [0, g] restricted to S/I or to I.
inline std::vector<ExponentVector> poset_points(const MonomialIdeal& I, monodepth::ModuleMode mode,
                                                ExponentVector& g) {
  const auto gens = gens_of(I);
  g = lcm_of(gens, I.num_vars());
  std::vector<ExponentVector> pts;
  for (const auto& u : box(g))
    if (member(gens, u) == (mode == monodepth::ModuleMode::ideal)) pts.push_back(u);
  return pts;
}

// Maximum over all interval partitions of min rho(b), by exhaustive search.
// The lex-smallest uncovered point must be the bottom of its interval.
inline std::size_t sdepth(const MonomialIdeal& I, monodepth::ModuleMode mode) {
  ExponentVector g;
  const auto pts = poset_points(I, mode, g);
  if (pts.empty()) return monodepth::kInfiniteSdepth;
  const std::size_t n = I.num_vars();
  std::set<ExponentVector> in_poset(pts.begin(), pts.end());
  std::set<ExponentVector> covered;
  auto rho = [&](const ExponentVector& b) {
    std::size_t r = 0;
    for (std::size_t j = 0; j < n; ++j) r += b[j] == g[j];
    return r;
  };
  std::size_t best = 0;
  bool found = false;
  std::function<void(std::size_t)> rec = [&](std::size_t current_min) {
    if (found && current_min <= best) return;
    auto it = std::find_if(pts.begin(), pts.end(),
                           [&](const ExponentVector& p) { return !covered.count(p); });
    if (it == pts.end()) {
      best = current_min;
      found = true;
      return;
    }
    const ExponentVector a = *it;
    for (const auto& b : pts) {
      if (!leq(a, b)) continue;
      ExponentVector span(n);
      for (std::size_t j = 0; j < n; ++j) span[j] = b[j] - a[j];
      std::vector<ExponentVector> cells;
      bool ok = true;
      for (const auto& d : box(span)) {
        ExponentVector c(n);
        for (std::size_t j = 0; j < n; ++j) c[j] = a[j] + d[j];
        if (!in_poset.count(c) || covered.count(c)) {
          ok = false;
          break;
        }
        cells.push_back(c);
      }
      if (!ok) continue;
      for (const auto& c : cells) covered.insert(c);
      rec(std::min(current_min, rho(b)));
      for (const auto& c : cells) covered.erase(c);
    }
  };
  rec(n);
  return best;
}

// Generator-count criteria in the real-number form m - m/k < s, denominators cleared.
inline bool quotient_criterion(std::size_t m, std::size_t k, std::size_t s) {
  return m * (k - 1) < s * k;
}
inline bool ideal_criterion(std::size_t m, std::size_t k, std::size_t s) {
  return m * (k - 1) < (2 * s - 2) * k;
}

// Does each point of [0, upper] lie in exactly the expected number of spaces?
inline bool covers_exactly(const monodepth::StanleyDecomposition& d, const ExponentVector& upper) {
  const auto gens = gens_of(d.ideal);
  for (const auto& u : box(upper)) {
    std::size_t count = 0;
    for (const auto& sp : d.spaces) {
      bool in = true;
      for (std::size_t j = 0; j < u.size(); ++j) {
        const bool free =
            std::find(sp.vars.begin(), sp.vars.end(), j) != sp.vars.end();
        const Exponent e = sp.monomial[j];
        if (free ? u[j] < e : u[j] != e) in = false;
      }
      count += in;
    }
    const bool want = member(gens, u) == (d.mode == monodepth::ModuleMode::ideal);
    if (count != (want ? 1u : 0u)) return false;
  }
  return true;
}

}  // namespace oracle
