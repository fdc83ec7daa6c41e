#pragma once

// Exact Stanley depth of S/I and I via the characteristic poset: the box
// [0, g] (g = lcm exponent vector) is partitioned into intervals [a, b], each
// giving the Stanley space x^a K[{x_j : b_j = g_j}], and sdepth is the best
// achievable minimum of rho(b) = |{j : b_j = g_j}|.

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "monodepth/certificate.hpp"
#include "monodepth/monomial.hpp"

namespace monodepth {

struct CharacteristicPoset {
  ExponentVector g;
  ModuleMode mode = ModuleMode::quotient;
  std::vector<ExponentVector> points;  // ascending lexicographic

  bool contains(const ExponentVector& a) const;
  std::size_t rho(const ExponentVector& b) const;
  std::size_t box_size() const;
};

struct Interval {
  ExponentVector a, b;

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct IntervalPartition {
  std::vector<Interval> intervals;

  // min rho(b) over the intervals; kInfiniteSdepth if empty.
  std::size_t achieved_sdepth(const CharacteristicPoset& poset) const;
};

struct HvzLimits {
  std::size_t max_poset = 200'000;
  // Zero means no limit.
  std::chrono::milliseconds timeout{0};
};

enum class Feasibility { feasible, infeasible, timed_out };

struct SdepthResult {
  std::size_t value = 0;  // kInfiniteSdepth for the zero module
  // False when some higher level timed out: `value` is then only a lower bound.
  bool proved = true;
  IntervalPartition witness;
  CharacteristicPoset poset;
};

// Works for every ideal: the zero ideal gets g = 0; the unit ideal's quotient
// (and the zero ideal itself) give an empty poset.
CharacteristicPoset characteristic_poset(const MonomialIdeal& ideal, ModuleMode mode,
                                         const HvzLimits& limits = {});

// Is there a partition into intervals with rho(b) >= d? The partition found is
// the first one in the solver's deterministic order.
Feasibility partition_with_min_rho(const CharacteristicPoset& poset, std::size_t d,
                                   IntervalPartition& out,
                                   std::optional<std::chrono::steady_clock::time_point> deadline = {});

bool is_valid_partition(const CharacteristicPoset& poset, const IntervalPartition& partition);

SdepthResult exact_sdepth(const MonomialIdeal& ideal, ModuleMode mode,
                          const HvzLimits& limits = {});

StanleyDecomposition partition_to_decomposition(const IntervalPartition& partition,
                                                const CharacteristicPoset& poset,
                                                const MonomialIdeal& ideal);

}  // namespace monodepth
