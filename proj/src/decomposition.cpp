#include "monodepth/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace monodepth {

std::vector<VarIndex> IrreducibleComponent::support() const {
  std::vector<VarIndex> s;
  for (VarIndex j = 0; j < powers.size(); ++j)
    if (powers[j] > 0) s.push_back(j);
  return s;
}

MonomialIdeal IrreducibleComponent::ideal() const {
  std::vector<Monomial> gens;
  for (VarIndex j = 0; j < powers.size(); ++j)
    if (powers[j] > 0) gens.push_back(Monomial::variable(powers.size(), j, powers[j]));
  return MonomialIdeal(powers.size(), std::move(gens));
}

bool IrreducibleComponent::contains(const IrreducibleComponent& other) const {
  for (VarIndex j = 0; j < powers.size(); ++j) {
    if (other.powers[j] == 0) continue;
    if (powers[j] == 0 || powers[j] > other.powers[j]) return false;
  }
  return true;
}

std::string MonomialPrime::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) s += ",";
    s += "x" + std::to_string(vars[i] + 1);
  }
  return s + ")";
}

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal, const char* op) {
  if (ideal.is_zero()) throw DegenerateIdealError(std::string(op) + ": zero ideal");
  if (ideal.is_unit()) throw DegenerateIdealError(std::string(op) + ": unit ideal");
}

// Splits the first non-pure-power generator v = x_j^{v_j} * rest at its first
// support variable and recurses on both sides: (J + v) = (J + x_j^{v_j}) ∩ (J + rest).
void split(const MonomialIdeal& ideal, std::set<IrreducibleComponent>& out) {
  const auto& gens = ideal.generators();
  auto it = std::find_if(gens.begin(), gens.end(),
                         [](const Monomial& g) { return !g.is_pure_power(); });
  if (it == gens.end()) {
    IrreducibleComponent c{ExponentVector(ideal.num_vars(), 0)};
    for (const auto& g : gens) {
      const VarIndex j = g.support().front();
      c.powers[j] = g[j];
    }
    out.insert(std::move(c));
    return;
  }
  const Monomial& v = *it;
  const VarIndex j = v.support().front();
  const Monomial pure = Monomial::variable(ideal.num_vars(), j, v[j]);
  const Monomial rest = v.with_exponent(j, 0);
  for (const Monomial& part : {pure, rest}) {
    std::vector<Monomial> next;
    next.reserve(gens.size());
    for (const auto& g : gens)
      if (&g != &v) next.push_back(g);
    next.push_back(part);
    split(minimalize(std::move(next), ideal.num_vars()), out);
  }
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "irreducible_decomposition");
  std::set<IrreducibleComponent> all;
  split(ideal, all);
  std::vector<IrreducibleComponent> comps(all.begin(), all.end());
  std::vector<IrreducibleComponent> kept;
  for (std::size_t a = 0; a < comps.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < comps.size() && !redundant; ++b)
      if (a != b && comps[a].contains(comps[b])) redundant = true;
    if (!redundant) kept.push_back(comps[a]);
  }
  return kept;
}

std::vector<PrimaryComponent> primary_decomposition(const MonomialIdeal& ideal) {
  std::map<MonomialPrime, MonomialIdeal> grouped;
  for (const auto& c : irreducible_decomposition(ideal)) {
    MonomialPrime p{c.support()};
    auto it = grouped.find(p);
    if (it == grouped.end()) {
      grouped.emplace(std::move(p), c.ideal());
    } else {
      it->second = intersect(it->second, c.ideal());
    }
  }
  std::vector<PrimaryComponent> out;
  for (auto& [p, q] : grouped) out.push_back({p, q});
  return out;
}

namespace {

bool is_subset(const std::vector<VarIndex>& a, const std::vector<VarIndex>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<MonomialPrime> prune_to_minimal(const std::vector<MonomialPrime>& primes) {
  std::vector<MonomialPrime> out;
  for (const auto& p : primes) {
    bool minimal = std::none_of(primes.begin(), primes.end(), [&](const MonomialPrime& q) {
      return q.vars != p.vars && is_subset(q.vars, p.vars);
    });
    if (minimal) out.push_back(p);
  }
  return out;
}

}  // namespace

AssReport associated_primes(const MonomialIdeal& ideal) {
  std::set<MonomialPrime> primes;
  for (const auto& c : irreducible_decomposition(ideal)) primes.insert({c.support()});
  AssReport r;
  r.primes.assign(primes.begin(), primes.end());
  for (const auto& p : r.primes) r.k = std::max(r.k, p.height());
  r.height = ideal.num_vars() + 1;
  for (const auto& p : prune_to_minimal(r.primes)) r.height = std::min(r.height, p.height());
  return r;
}

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal) {
  return prune_to_minimal(associated_primes(ideal).primes);
}

std::size_t big_height(const MonomialIdeal& ideal) { return associated_primes(ideal).k; }

std::size_t height(const MonomialIdeal& ideal) { return associated_primes(ideal).height; }

}  // namespace monodepth
