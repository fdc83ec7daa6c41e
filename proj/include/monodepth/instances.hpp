#pragma once

// Seeded random and exhaustive generation of monomial ideals for sweeps.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "monodepth/monomial.hpp"

namespace monodepth {

enum class InstanceFilter { all, aci };

std::string to_string(InstanceFilter f);
InstanceFilter parse_filter(const std::string& text);

struct InstanceSpec {
  std::size_t n = 4;
  std::size_t max_m = 5;
  Exponent max_exp = 2;
  std::size_t count = 100;
  std::uint64_t seed = 0;
  InstanceFilter filter = InstanceFilter::all;
  // Samples tried per accepted instance before giving up on the filter.
  std::size_t retry_budget = 2000;
};

// Deterministic stream: equal specs give equal sequences on every run.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(InstanceSpec spec);

  // Empty once `count` instances were produced. Throws std::runtime_error if
  // the filter rejects `retry_budget` consecutive samples.
  std::optional<MonomialIdeal> next();

 private:
  MonomialIdeal sample();
  bool accepts(const MonomialIdeal& ideal) const;

  InstanceSpec spec_;
  std::mt19937_64 rng_;
  std::size_t produced_ = 0;
};

std::vector<MonomialIdeal> generate_instances(const InstanceSpec& spec);

// Every proper nonzero ideal whose minimal generators lie in the box
// [0, max_exp]^n, in a canonical order. Limited to boxes of at most 16 points.
std::vector<MonomialIdeal> enumerate_ideals(std::size_t n, Exponent max_exp);

}  // namespace monodepth
