#pragma once

// Constructive Stanley decompositions by recursive splitting along a heavy
// variable, the arithmetic hypotheses that guarantee their depth, and the
// per-instance Stanley conjecture checker.
//
// For a variable x_j the K-vector spaces split as
//
//     S/I = S'/(I ∩ S') ⊕ x_j · S/(I : x_j)
//     I   = (I ∩ S')    ⊕ x_j · (I : x_j)
//
// where S' is the ring without x_j. Left pieces are solved exactly on the
// characteristic poset; right pieces recurse (the generator degree sum drops).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "monodepth/certificate.hpp"
#include "monodepth/homology.hpp"
#include "monodepth/hvz.hpp"
#include "monodepth/monomial.hpp"

namespace monodepth {

struct HeavyVariable {
  VarIndex var = 0;        // smallest index attaining max t_j
  std::size_t count = 0;   // t_var
  std::size_t bound = 0;   // ceil(m / k)
  std::size_t k = 0;       // big height
};

// Throws std::logic_error if max_j t_j < ceil(m/k); that can only be a bug.
HeavyVariable heavy_variable(const MonomialIdeal& ideal);

inline std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

// Both sides of the two generator-count criteria, for s >= k >= 2 and m >= 1.
struct BoundForms {
  bool quotient_rhs = false;  // m <= s - 1 + ceil(s / (k - 1))
  bool quotient_lhs = false;  // m - ceil(m / k) <= s - 1
  bool ideal_rhs = false;     // m <= 2s - 3 + ceil((2s - 2) / (k - 1))
  bool ideal_lhs = false;     // floor((m - ceil(m / k)) / 2) <= s - 2
};

// Throws std::domain_error outside s >= k >= 2, m >= 1.
BoundForms hypothesis_check(std::size_t m, std::size_t k, std::size_t s);

struct HypothesisReport {
  std::size_t m = 0;
  std::size_t k = 0;
  std::size_t s = 0;
  std::size_t height = 0;
  // Empty when the criteria are undefined (k < 2 or s < k).
  std::optional<bool> quotient_bound_ok;
  std::optional<bool> ideal_bound_ok;
  // Almost complete intersection: m = height + 1.
  bool aci = false;
};

HypothesisReport hypothesis_report(std::size_t m, std::size_t k, std::size_t s,
                                   std::size_t height);

// One splitting step of the constructor.
struct SplitStep {
  std::size_t level = 0;
  MonomialIdeal ideal;
  HeavyVariable heavy;
  // sdepth of the left piece (kInfiniteSdepth when it is zero).
  std::size_t left_sdepth = kInfiniteSdepth;
  bool left_exact = true;
};

struct ConstructedDecomposition {
  StanleyDecomposition decomposition;
  std::vector<SplitStep> steps;
};

// Throws LimitExceeded naming the leaf whose poset is over the cap.
ConstructedDecomposition decompose_quotient(const MonomialIdeal& ideal,
                                            const HvzLimits& limits = {});
ConstructedDecomposition decompose_ideal(const MonomialIdeal& ideal,
                                         const HvzLimits& limits = {});
ConstructedDecomposition decompose(const MonomialIdeal& ideal, ModuleMode mode,
                                   const HvzLimits& limits = {});

enum class Verdict { holds, violated, undecided };
std::string to_string(Verdict v);

struct SdepthClaim {
  std::size_t value = 0;
  bool exact = false;  // false: certified lower bound only
  StanleyDecomposition certificate;
};

struct CheckOptions {
  Field field;
  HomologyLimits homology;
  HvzLimits hvz;
};

struct ConjectureReport {
  MonomialIdeal ideal = MonomialIdeal::zero(1);
  std::optional<DepthReport> depth;
  std::optional<SdepthClaim> sdepth_quotient;
  std::optional<SdepthClaim> sdepth_ideal;
  Verdict verdict_quotient = Verdict::undecided;
  Verdict verdict_ideal = Verdict::undecided;
  std::optional<HypothesisReport> hypothesis;
  std::vector<std::string> notes;
};

// Cap errors never escape: they become notes and "undecided" verdicts.
ConjectureReport check_conjecture(const MonomialIdeal& ideal, const CheckOptions& options = {});

}  // namespace monodepth
