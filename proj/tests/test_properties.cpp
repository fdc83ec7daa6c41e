#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "monodepth/cli.hpp"
#include "monodepth/decomposition.hpp"
#include "monodepth/homology.hpp"
#include "monodepth/hvz.hpp"
#include "monodepth/instances.hpp"
#include "monodepth/io.hpp"
#include "monodepth/stanley.hpp"
#include "oracles.hpp"

using namespace monodepth;

namespace {

const std::vector<MonomialIdeal>& sample() {
  static const std::vector<MonomialIdeal> ideals = [] {
    std::vector<MonomialIdeal> out;
    for (std::size_t n : {2, 3, 4, 5}) {
      InstanceSpec spec;
      spec.n = n;
      spec.max_m = 6;
      spec.max_exp = 3;
      spec.count = 60;
      spec.seed = 500 + n;
      for (auto& I : generate_instances(spec)) out.push_back(std::move(I));
    }
    return out;
  }();
  return ideals;
}

bool subset(const std::vector<MonomialPrime>& a, const std::vector<MonomialPrime>& b) {
  return std::all_of(a.begin(), a.end(),
                     [&](const MonomialPrime& p) { return std::find(b.begin(), b.end(), p) != b.end(); });
}

}  // namespace

TEST_CASE("minimalize is idempotent and order independent") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    std::vector<Monomial> gens;
    for (std::size_t i = 0, m = rng() % 8; i < m; ++i) {
      ExponentVector v(n);
      for (auto& x : v) x = static_cast<Exponent>(rng() % 3);
      gens.emplace_back(v);
    }
    const MonomialIdeal once = minimalize(gens, n);
    CHECK(minimalize(once.generators(), n) == once);
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(minimalize(gens, n) == once);
  }
}

TEST_CASE("generator-level identities") {
  for (const auto& I : sample()) {
    CAPTURE(I.to_string());
    const std::size_t n = I.num_vars();
    const auto profile = support_profile(I);
    std::size_t support_total = 0, t_total = 0;
    for (const auto& g : I.generators()) support_total += g.support_size();
    for (std::size_t t : profile.counts) t_total += t;
    CHECK(support_total == t_total);

    for (VarIndex j = 0; j < n; ++j) {
      const Monomial xj = Monomial::variable(n, j);
      // The recursion measure drops; a unit colon ends the recursion instead.
      if (profile.counts[j] >= 1 && !colon(I, xj).is_unit()) CHECK(epsilon(colon(I, xj)) < epsilon(I));
      // Colon membership matches multiplication on a box.
      const MonomialIdeal c = colon(I, xj);
      ExponentVector upper = lcm_exponents(I);
      upper[j] += 1;
      const auto gens = oracle::gens_of(I);
      for (const auto& u : oracle::box(upper))
        REQUIRE(c.contains(Monomial(u)) == oracle::member(gens, (Monomial(u) * xj).exponents()));
      // Restriction keeps exactly the generators not involving x_j.
      if (n > 1) {
        std::vector<Monomial> kept;
        for (const auto& g : I.generators())
          if (g[j] == 0) kept.push_back(g.without_variable(j));
        std::sort(kept.begin(), kept.end());
        CHECK(restriction(I, j).generators() == kept);
      }
      // Ass(S/(I:x_j)) ⊆ Ass(S/I).
      const MonomialIdeal col = colon(I, xj);
      if (col.is_proper_nonzero()) CHECK(subset(associated_primes(col).primes, associated_primes(I).primes));
    }
    const MonomialIdeal r = radical(I);
    CHECK(radical(r) == r);
    CHECK(r.is_squarefree());
    if (I.is_squarefree()) CHECK(r == I);
  }
}

TEST_CASE("decomposition invariants") {
  for (const auto& I : sample()) {
    CAPTURE(I.to_string());
    const auto comps = irreducible_decomposition(I);
    const AssReport a = associated_primes(I);
    const std::size_t m = I.num_generators(), n = I.num_vars();
    CHECK(1 <= a.height);
    CHECK(a.height <= a.k);
    CHECK(a.k <= std::min(m, n));
    // Irredundancy: dropping any component enlarges the intersection inside the box.
    ExponentVector upper = lcm_exponents(I);
    const auto gens = oracle::gens_of(I);
    for (std::size_t drop = 0; drop < comps.size() && comps.size() > 1; ++drop) {
      bool changed = false;
      for (const auto& u : oracle::box(upper)) {
        if (oracle::member(gens, u)) continue;
        bool in_rest = true;
        for (std::size_t c = 0; c < comps.size(); ++c) {
          if (c == drop) continue;
          bool in_c = false;
          for (std::size_t j = 0; j < n; ++j)
            if (comps[c].powers[j] > 0 && u[j] >= comps[c].powers[j]) in_c = true;
          in_rest = in_rest && in_c;
        }
        if (in_rest) {
          changed = true;
          break;
        }
      }
      CHECK(changed);
    }
  }
}

TEST_CASE("depth invariants") {
  for (const auto& I : sample()) {
    CAPTURE(I.to_string());
    const DepthReport r = depth_quotient(I, Field(), {}, true);
    const std::size_t n = I.num_vars();
    CHECK(r.depth_quotient + r.pd_quotient == n);
    CHECK(r.depth_quotient <= n - big_height(I));
    CHECK(r.pd_quotient <= I.num_generators());
    CHECK(r.betti->projective_dimension() == r.pd_quotient);
    // Rebuilding from shuffled generators gives the same table.
    std::vector<Monomial> gens = I.generators();
    std::reverse(gens.begin(), gens.end());
    const DepthReport again = depth_quotient(MonomialIdeal(n, gens), Field(), {}, true);
    CHECK(again.betti->entries == r.betti->entries);
  }
}

TEST_CASE("sdepth invariants") {
  for (const auto& I : sample()) {
    CAPTURE(I.to_string());
    const std::size_t n = I.num_vars(), m = I.num_generators();
    for (ModuleMode mode : {ModuleMode::quotient, ModuleMode::ideal}) {
      const SdepthResult r = exact_sdepth(I, mode);
      REQUIRE(r.proved);
      const StanleyDecomposition w = partition_to_decomposition(r.witness, r.poset, I);
      const VerifyResult v = verify(w);
      CHECK(v.ok);
      CHECK(v.sdepth == r.value);
      if (mode == ModuleMode::quotient && m <= n) CHECK(r.value >= n - m);
      if (mode == ModuleMode::ideal) CHECK(r.value >= n - m / 2);
      const auto c = decompose(I, mode).decomposition;
      CHECK(c.sdepth() <= r.value);
      // Truncation soundness: a larger box gives the same answer.
      CHECK(verify(c, 1).ok == verify(c).ok);
      StanleyDecomposition broken = c;
      broken.spaces.pop_back();
      CHECK_FALSE(verify(broken).ok);
      CHECK_FALSE(verify(broken, 1).ok);
    }
    // A monomial factor common to all generators does not change sdepth (for a
    // proper quotient; a principal ideal has colon equal to S).
    ExponentVector g(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      g[j] = I.generators()[0][j];
      for (const auto& v : I.generators()) g[j] = std::min(g[j], v[j]);
    }
    const Monomial w(g);
    if (!w.is_unit()) {
      const MonomialIdeal J = colon(I, w);
      CHECK(multiply(J, w) == I);
      if (J.is_unit()) continue;
      for (ModuleMode mode : {ModuleMode::quotient, ModuleMode::ideal})
        CHECK(exact_sdepth(I, mode).value == exact_sdepth(J, mode).value);
    }
  }
}

TEST_CASE("sweep reports characteristic disagreements it finds") {
  std::ostringstream out, err;
  const int code = run_cli({"sweep", "--n", "5", "--max-m", "6", "--max-exp", "2", "--count", "60",
                            "--seed", "3", "--format", "json"},
                           out, err);
  CHECK(code == kExitOk);
  std::istringstream lines(out.str());
  std::string line;
  std::size_t disagreements = 0;
  json summary;
  while (std::getline(lines, line)) {
    const json j = json::parse(line);
    if (j.contains("summary")) {
      summary = j;
    } else if (j["depth_quotient_char2"] != j["depth_quotient"]) {
      ++disagreements;
    }
  }
  CHECK(summary["char0_char2_depth_disagreements"] == disagreements);
}
