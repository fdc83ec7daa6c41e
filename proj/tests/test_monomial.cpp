#include <doctest.h>

#include <random>

#include "monodepth/errors.hpp"
#include "monodepth/monomial.hpp"
#include "oracles.hpp"

using namespace monodepth;

namespace {

Monomial mono(std::initializer_list<Exponent> e) { return Monomial(ExponentVector(e)); }

MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t n, std::size_t m, Exponent e) {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < m; ++i) {
    ExponentVector v(n);
    for (auto& x : v) x = static_cast<Exponent>(rng() % (e + 1));
    gens.emplace_back(v);
  }
  return MonomialIdeal(n, gens);
}

}  // namespace

TEST_CASE("monomial arithmetic") {
  const Monomial a = mono({2, 1, 0});
  const Monomial b = mono({1, 3, 1});
  CHECK(a * b == mono({3, 4, 1}));
  CHECK(lcm(a, b) == mono({2, 3, 1}));
  CHECK(gcd(a, b) == mono({1, 1, 0}));
  CHECK(colon(a, b) == mono({1, 0, 0}));
  CHECK(a.total_degree() == 3);
  CHECK(a.support() == std::vector<VarIndex>{0, 1});
  CHECK(mono({0, 2, 0}).is_pure_power());
  CHECK_FALSE(mono({0, 0, 0}).is_pure_power());
  CHECK(mono({1, 0, 1}).is_squarefree());
  CHECK(gcd(a, b).divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK(a.to_string() == "x1^2*x2");
  CHECK(Monomial(3).to_string() == "1");
  CHECK(a.without_variable(1) == mono({2, 0}));
  CHECK(a.with_inserted_variable(0) == mono({0, 2, 1, 0}));
  CHECK_THROWS_AS(a * mono({1, 1}), DimensionError);
  CHECK_THROWS_AS(VariableContext(0), DimensionError);
}

TEST_CASE("ideals are minimalized and sorted") {
  const MonomialIdeal I(3, {mono({1, 1, 0}), mono({1, 0, 0}), mono({0, 2, 0}), mono({1, 0, 0})});
  REQUIRE(I.num_generators() == 2);
  CHECK(I.generators()[0] == mono({0, 2, 0}));
  CHECK(I.generators()[1] == mono({1, 0, 0}));
  CHECK(I.contains(mono({3, 0, 5})));
  CHECK_FALSE(I.contains(mono({0, 1, 5})));
  CHECK(MonomialIdeal::zero(2).is_zero());
  CHECK(MonomialIdeal::unit(2).is_unit());
  CHECK(MonomialIdeal(2, {mono({0, 0}), mono({1, 1})}).is_unit());
}

TEST_CASE("colon and restriction on the squarefree Veronese ideal") {
  const MonomialIdeal I(4, {mono({1, 1, 0, 0}), mono({1, 0, 1, 0}), mono({1, 0, 0, 1}),
                            mono({0, 1, 1, 0}), mono({0, 1, 0, 1}), mono({0, 0, 1, 1})});
  const MonomialIdeal c = colon(I, Monomial::variable(4, 0));
  CHECK(c == MonomialIdeal(4, {mono({0, 1, 0, 0}), mono({0, 0, 1, 0}), mono({0, 0, 0, 1})}));
  const MonomialIdeal r = restriction(I, 3);
  CHECK(r == MonomialIdeal(3, {mono({1, 1, 0}), mono({1, 0, 1}), mono({0, 1, 1})}));
  CHECK(r.deleted_variable() == std::optional<VarIndex>(3));
  CHECK_THROWS_AS(restriction(MonomialIdeal(1, {mono({2})}), 0), DimensionError);
}

TEST_CASE("support profile, epsilon, radical, lcm") {
  const MonomialIdeal I(4, {mono({3, 0, 0, 0}), mono({1, 1, 0, 0}), mono({0, 1, 1, 0}),
                            mono({0, 0, 1, 1}), mono({0, 0, 0, 2})});
  const auto p = support_profile(I);
  CHECK(p.counts == std::vector<std::size_t>{2, 2, 2, 2});
  CHECK(p.union_support == std::vector<VarIndex>{0, 1, 2, 3});
  CHECK(epsilon(I) == 11);
  CHECK(lcm_exponents(I) == ExponentVector{3, 1, 1, 2});
  CHECK(radical(I) == MonomialIdeal(4, {mono({1, 0, 0, 0}), mono({0, 1, 1, 0}), mono({0, 0, 1, 1}),
                                        mono({0, 0, 0, 1})}));
  CHECK_THROWS(lcm_exponents(MonomialIdeal::zero(2)));
}

TEST_CASE("polarization is squarefree and depolarizes back") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const MonomialIdeal I = random_ideal(rng, n, 1 + rng() % 5, 3);
    if (!I.is_proper_nonzero()) continue;
    const Polarization P = polarize(I);
    CHECK(P.ideal.is_squarefree());
    CHECK(P.ideal.num_generators() == I.num_generators());
    CHECK(P.ideal.num_vars() == n + P.added_vars);
    std::vector<Monomial> back;
    for (const auto& g : P.ideal.generators()) back.push_back(P.depolarize(g));
    CHECK(MonomialIdeal(n, back) == I);
  }
}

TEST_CASE("ideal operations agree with brute-force membership") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const MonomialIdeal A = random_ideal(rng, n, 1 + rng() % 4, 3);
    const MonomialIdeal B = random_ideal(rng, n, 1 + rng() % 4, 3);
    ExponentVector wexp(n);
    for (auto& x : wexp) x = static_cast<Exponent>(rng() % 3);
    const Monomial w(wexp);
    const MonomialIdeal AB = intersect(A, B);
    const MonomialIdeal Aw = colon(A, w);
    const MonomialIdeal wA = multiply(A, w);
    const auto ga = oracle::gens_of(A), gb = oracle::gens_of(B);
    for (const auto& u : oracle::box(ExponentVector(n, 5))) {
      const Monomial um(u);
      CHECK(AB.contains(um) == (oracle::member(ga, u) && oracle::member(gb, u)));
      CHECK(Aw.contains(um) == oracle::member(ga, (um * w).exponents()));
      bool in_wa = w.divides(um) && oracle::member(ga, colon(um, w).exponents());
      CHECK(wA.contains(um) == in_wa);
    }
  }
}
