#include "monodepth/stanley.hpp"

#include <algorithm>
#include <stdexcept>

#include "monodepth/decomposition.hpp"

namespace monodepth {

HeavyVariable heavy_variable(const MonomialIdeal& ideal) {
  if (!ideal.is_proper_nonzero())
    throw DegenerateIdealError("heavy_variable: ideal must be proper and nonzero");
  const SupportProfile profile = support_profile(ideal);
  HeavyVariable h;
  h.k = big_height(ideal);
  h.bound = ceil_div(ideal.num_generators(), h.k);
  for (VarIndex j = 0; j < profile.counts.size(); ++j) {
    if (profile.counts[j] > h.count) {
      h.count = profile.counts[j];
      h.var = j;
    }
  }
  if (h.count < h.bound) {
    throw std::logic_error("heavy_variable: max t_j = " + std::to_string(h.count) +
                           " < ceil(m/k) = " + std::to_string(h.bound) + " for " +
                           ideal.to_string());
  }
  return h;
}

BoundForms hypothesis_check(std::size_t m, std::size_t k, std::size_t s) {
  if (m < 1 || k < 2 || s < k)
    throw std::domain_error("hypothesis_check needs s >= k >= 2 and m >= 1");
  BoundForms b;
  const std::size_t reduced = m - ceil_div(m, k);
  b.quotient_rhs = m <= s - 1 + ceil_div(s, k - 1);
  b.quotient_lhs = reduced <= s - 1;
  b.ideal_rhs = m <= 2 * s - 3 + ceil_div(2 * s - 2, k - 1);
  b.ideal_lhs = reduced / 2 <= s - 2;
  return b;
}

HypothesisReport hypothesis_report(std::size_t m, std::size_t k, std::size_t s,
                                   std::size_t height) {
  HypothesisReport r{m, k, s, height, std::nullopt, std::nullopt, m == height + 1};
  if (m >= 1 && k >= 2 && s >= k) {
    const BoundForms b = hypothesis_check(m, k, s);
    r.quotient_bound_ok = b.quotient_rhs;
    r.ideal_bound_ok = b.ideal_rhs;
  }
  return r;
}

namespace {

std::vector<VarIndex> all_vars_except(std::size_t n, std::optional<VarIndex> skip) {
  std::vector<VarIndex> v;
  for (VarIndex j = 0; j < n; ++j)
    if (j != skip) v.push_back(j);
  return v;
}

struct LeafResult {
  std::vector<StanleySpace> spaces;
  std::size_t sdepth = kInfiniteSdepth;
  bool exact = true;
};

LeafResult solve_leaf(const MonomialIdeal& leaf, ModuleMode mode, const HvzLimits& limits) {
  SdepthResult r;
  try {
    r = exact_sdepth(leaf, mode, limits);
  } catch (const LimitExceeded& e) {
    throw LimitExceeded(e.cap(), "leaf " + leaf.to_string() + " (" + to_string(mode) +
                                     ", " + std::to_string(leaf.num_vars()) +
                                     " vars): " + e.what());
  }
  LeafResult out;
  out.spaces = partition_to_decomposition(r.witness, r.poset, leaf).spaces;
  out.sdepth = r.value;
  out.exact = r.proved;
  return out;
}

// Re-embeds a space of S' (x_j deleted) into S.
StanleySpace embed(const StanleySpace& sp, VarIndex j) {
  StanleySpace out{sp.monomial.with_inserted_variable(j), {}};
  for (VarIndex v : sp.vars) out.vars.push_back(v >= j ? v + 1 : v);
  return out;
}

void construct(const MonomialIdeal& ideal, ModuleMode mode, const HvzLimits& limits,
               std::size_t level, const Monomial& prefix, ConstructedDecomposition& out) {
  const std::size_t n = ideal.num_vars();
  auto emit = [&](StanleySpace sp) {
    sp.monomial = sp.monomial * prefix;
    out.decomposition.spaces.push_back(std::move(sp));
  };

  // Zero module: S/S or the zero ideal.
  if ((mode == ModuleMode::quotient && ideal.is_unit()) ||
      (mode == ModuleMode::ideal && ideal.is_zero()))
    return;
  // Free of rank one: S/(0) or S itself.
  if (ideal.is_zero() || ideal.is_unit()) {
    emit({Monomial(n), all_vars_except(n, std::nullopt)});
    return;
  }
  if (ideal.is_generated_by_variables()) {
    for (auto& sp : solve_leaf(ideal, mode, limits).spaces) emit(std::move(sp));
    return;
  }

  SplitStep step{level, ideal, heavy_variable(ideal)};
  const VarIndex j = step.heavy.var;
  if (step.heavy.count == ideal.num_generators()) {
    // x_j divides every generator: I ∩ S' = 0.
    if (mode == ModuleMode::quotient) {
      emit({Monomial(n), all_vars_except(n, j)});
      step.left_sdepth = n - 1;
    }
  } else {
    const MonomialIdeal left = restriction(ideal, j);
    LeafResult leaf = solve_leaf(left, mode, limits);
    step.left_sdepth = leaf.sdepth;
    step.left_exact = leaf.exact;
    for (const auto& sp : leaf.spaces) emit(embed(sp, j));
  }
  out.steps.push_back(step);

  const Monomial xj = Monomial::variable(n, j);
  construct(colon(ideal, xj), mode, limits, level + 1, prefix * xj, out);
}

}  // namespace

ConstructedDecomposition decompose(const MonomialIdeal& ideal, ModuleMode mode,
                                   const HvzLimits& limits) {
  ConstructedDecomposition out{StanleyDecomposition{ideal, mode, {}}, {}};
  construct(ideal, mode, limits, 0, Monomial(ideal.num_vars()), out);
  std::sort(out.decomposition.spaces.begin(), out.decomposition.spaces.end(),
            [](const StanleySpace& a, const StanleySpace& b) {
              return a.monomial != b.monomial ? a.monomial < b.monomial : a.vars < b.vars;
            });
  return out;
}

ConstructedDecomposition decompose_quotient(const MonomialIdeal& ideal, const HvzLimits& limits) {
  if (ideal.is_unit()) throw DegenerateIdealError("decompose_quotient: unit ideal");
  return decompose(ideal, ModuleMode::quotient, limits);
}

ConstructedDecomposition decompose_ideal(const MonomialIdeal& ideal, const HvzLimits& limits) {
  if (!ideal.is_proper_nonzero())
    throw DegenerateIdealError("decompose_ideal: ideal must be proper and nonzero");
  return decompose(ideal, ModuleMode::ideal, limits);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::violated:
      return "violated";
    case Verdict::undecided:
      return "undecided";
  }
  return "undecided";
}

namespace {

// Best certificate-backed sdepth for one module: the exact solver when it
// finishes, otherwise the better of its partial result and the constructor.
std::optional<SdepthClaim> sdepth_claim(const MonomialIdeal& ideal, ModuleMode mode,
                                        const CheckOptions& options,
                                        std::vector<std::string>& notes) {
  std::optional<SdepthClaim> best;
  auto consider = [&](StanleyDecomposition cert, bool exact, const char* source) {
    const VerifyResult v = verify(cert);
    if (!v.ok) {
      throw std::logic_error(std::string(source) + " produced an invalid " + to_string(mode) +
                             " certificate: " + v.message);
    }
    if (!best || exact || (!best->exact && v.sdepth > best->value))
      best = SdepthClaim{v.sdepth, exact, std::move(cert)};
  };
  try {
    SdepthResult r = exact_sdepth(ideal, mode, options.hvz);
    consider(partition_to_decomposition(r.witness, r.poset, ideal), r.proved, "exact solver");
    if (r.proved) return best;
    notes.push_back(to_string(mode) + ": exact search timed out; value is a lower bound");
  } catch (const LimitExceeded& e) {
    notes.push_back(to_string(mode) + ": exact solver skipped (" + e.what() + ")");
  }
  try {
    consider(decompose(ideal, mode, options.hvz).decomposition, false, "constructor");
  } catch (const LimitExceeded& e) {
    notes.push_back(to_string(mode) + ": constructor skipped (" + e.what() + ")");
  }
  return best;
}

Verdict judge(const std::optional<SdepthClaim>& claim, std::optional<std::size_t> depth) {
  if (!claim || !depth) return Verdict::undecided;
  if (claim->value >= *depth) return Verdict::holds;
  return claim->exact ? Verdict::violated : Verdict::undecided;
}

}  // namespace

ConjectureReport check_conjecture(const MonomialIdeal& ideal, const CheckOptions& options) {
  if (!ideal.is_proper_nonzero())
    throw DegenerateIdealError("check_conjecture: ideal must be proper and nonzero");
  ConjectureReport r;
  r.ideal = ideal;
  try {
    r.depth = depth_quotient(ideal, options.field, options.homology);
  } catch (const LimitExceeded& e) {
    r.notes.push_back(std::string("depth skipped (") + e.what() + ")");
  }
  const AssReport ass = associated_primes(ideal);
  if (r.depth) {
    r.hypothesis = hypothesis_report(ideal.num_generators(), ass.k, r.depth->s, ass.height);
  }
  r.sdepth_quotient = sdepth_claim(ideal, ModuleMode::quotient, options, r.notes);
  r.sdepth_ideal = sdepth_claim(ideal, ModuleMode::ideal, options, r.notes);
  std::optional<std::size_t> dq, di;
  if (r.depth) {
    dq = r.depth->depth_quotient;
    di = r.depth->depth_ideal();
  }
  r.verdict_quotient = judge(r.sdepth_quotient, dq);
  r.verdict_ideal = judge(r.sdepth_ideal, di);
  return r;
}

}  // namespace monodepth
