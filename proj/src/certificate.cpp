#include "monodepth/certificate.hpp"

#include <algorithm>
#include <stdexcept>

namespace monodepth {

std::string to_string(ModuleMode mode) {
  return mode == ModuleMode::quotient ? "quotient" : "ideal";
}

ModuleMode parse_mode(const std::string& text) {
  if (text == "quotient") return ModuleMode::quotient;
  if (text == "ideal") return ModuleMode::ideal;
  throw std::invalid_argument("unknown mode '" + text + "' (expected quotient or ideal)");
}

std::string sdepth_to_string(std::size_t sdepth) {
  return sdepth == kInfiniteSdepth ? "inf" : std::to_string(sdepth);
}

bool StanleySpace::contains(const Monomial& u) const {
  if (!monomial.divides(u)) return false;
  std::size_t k = 0;
  for (VarIndex j = 0; j < u.num_vars(); ++j) {
    const bool free = k < vars.size() && vars[k] == j;
    if (free) {
      ++k;
    } else if (u[j] != monomial[j]) {
      return false;
    }
  }
  return true;
}

std::size_t StanleyDecomposition::sdepth() const noexcept {
  std::size_t s = kInfiniteSdepth;
  for (const auto& sp : spaces) s = std::min(s, sp.vars.size());
  return s;
}

VerifyResult verify(const StanleyDecomposition& d, Exponent extra, std::size_t max_box) {
  const std::size_t n = d.num_vars();
  VerifyResult r;
  for (const auto& sp : d.spaces) {
    if (sp.monomial.num_vars() != n) {
      r.message = "space monomial " + sp.monomial.to_string() + " is in the wrong ring";
      return r;
    }
    if (!std::is_sorted(sp.vars.begin(), sp.vars.end()) ||
        std::adjacent_find(sp.vars.begin(), sp.vars.end()) != sp.vars.end() ||
        (!sp.vars.empty() && sp.vars.back() >= n)) {
      r.message = "space over " + sp.monomial.to_string() + " has a malformed variable set";
      return r;
    }
  }

  ExponentVector bound(n, 0);
  for (const auto& g : d.ideal.generators())
    for (VarIndex j = 0; j < n; ++j) bound[j] = std::max(bound[j], g[j]);
  for (const auto& sp : d.spaces)
    for (VarIndex j = 0; j < n; ++j) bound[j] = std::max(bound[j], sp.monomial[j]);
  std::size_t box = 1;
  for (auto& b : bound) {
    b += 1 + extra;
    if (box > max_box / (b + 1)) {
      throw LimitExceeded("box", "verification box exceeds " + std::to_string(max_box) + " points");
    }
    box *= b + 1;
  }

  ExponentVector u(n, 0);
  for (std::size_t step = 0; step < box; ++step) {
    const Monomial mono(u);
    const bool in_ideal = d.ideal.contains(mono);
    const std::size_t expected =
        (d.mode == ModuleMode::ideal) == in_ideal ? 1 : 0;
    std::size_t count = 0;
    for (const auto& sp : d.spaces)
      if (sp.contains(mono)) ++count;
    if (count != expected) {
      r.bad_point = mono;
      r.expected_count = expected;
      r.actual_count = count;
      r.message = "monomial " + mono.to_string() + " is covered " + std::to_string(count) +
                  " times, expected " + std::to_string(expected);
      return r;
    }
    for (VarIndex j = 0; j < n; ++j) {
      if (++u[j] <= bound[j]) break;
      u[j] = 0;
    }
  }
  r.ok = true;
  r.sdepth = d.sdepth();
  return r;
}

}  // namespace monodepth
