#include "monodepth/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace monodepth {

VariableContext::VariableContext(std::size_t num_vars) : n(num_vars) {
  if (n == 0) throw DimensionError("a variable context needs at least one variable");
}

Monomial Monomial::variable(std::size_t n, VarIndex j, Exponent power) {
  if (j >= n) throw DimensionError("variable index out of range");
  ExponentVector e(n, 0);
  e[j] = power;
  return Monomial(std::move(e));
}

std::uint64_t Monomial::total_degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

std::vector<VarIndex> Monomial::support() const {
  std::vector<VarIndex> s;
  for (VarIndex j = 0; j < exps_.size(); ++j)
    if (exps_[j] > 0) s.push_back(j);
  return s;
}

std::size_t Monomial::support_size() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(exps_.begin(), exps_.end(), [](Exponent e) { return e > 0; }));
}

bool Monomial::is_unit() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

bool Monomial::is_pure_power() const noexcept { return support_size() == 1; }

bool Monomial::divides(const Monomial& u) const {
  require_same_context(u, exps_.size());
  for (std::size_t j = 0; j < exps_.size(); ++j)
    if (exps_[j] > u.exps_[j]) return false;
  return true;
}

Monomial Monomial::with_exponent(VarIndex j, Exponent e) const {
  Monomial r = *this;
  r.exps_.at(j) = e;
  return r;
}

Monomial Monomial::without_variable(VarIndex j) const {
  if (j >= exps_.size()) throw DimensionError("variable index out of range");
  ExponentVector e;
  e.reserve(exps_.size() - 1);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (i != j) e.push_back(exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::with_inserted_variable(VarIndex j) const {
  if (j > exps_.size()) throw DimensionError("variable index out of range");
  ExponentVector e = exps_;
  e.insert(e.begin() + static_cast<std::ptrdiff_t>(j), 0);
  return Monomial(std::move(e));
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < exps_.size(); ++j) {
    if (exps_[j] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << (j + 1);
    if (exps_[j] > 1) os << '^' << exps_[j];
  }
  if (first) os << '1';
  return os.str();
}

void require_same_context(const Monomial& a, std::size_t n) {
  if (a.num_vars() != n) {
    throw DimensionError("monomial has " + std::to_string(a.num_vars()) +
                         " exponents, ring has " + std::to_string(n) + " variables");
  }
}

namespace {

template <typename Op>
Monomial combine(const Monomial& a, const Monomial& b, Op op) {
  require_same_context(b, a.num_vars());
  ExponentVector e(a.num_vars());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = op(a[j], b[j]);
  return Monomial(std::move(e));
}

}  // namespace

Monomial operator*(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](Exponent x, Exponent y) { return x + y; });
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](Exponent x, Exponent y) { return std::max(x, y); });
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](Exponent x, Exponent y) { return std::min(x, y); });
}

Monomial colon(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](Exponent x, Exponent y) { return x > y ? x - y : 0; });
}

// ---------------------------------------------------------------------------

MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t n) {
  for (const auto& g : gens) require_same_context(g, n);
  // Sorting by total degree first guarantees every divisor of g precedes g.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    auto da = a.total_degree(), db = b.total_degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  return MonomialIdeal(VariableContext(n), std::move(kept));
}

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<Monomial> gens) : n_(n) {
  VariableContext ctx(n);
  for (const auto& g : gens) require_same_context(g, n);
  // Already canonical? Avoid recursion through minimalize.
  bool canonical = std::is_sorted(gens.begin(), gens.end()) &&
                   std::adjacent_find(gens.begin(), gens.end()) == gens.end();
  if (canonical) {
    for (std::size_t a = 0; a < gens.size() && canonical; ++a)
      for (std::size_t b = 0; b < gens.size() && canonical; ++b)
        if (a != b && gens[a].divides(gens[b])) canonical = false;
  }
  if (canonical) {
    gens_ = std::move(gens);
  } else {
    gens_ = minimalize(std::move(gens), n).gens_;
  }
}

MonomialIdeal MonomialIdeal::zero(std::size_t n) { return MonomialIdeal(n, {}); }

MonomialIdeal MonomialIdeal::unit(std::size_t n) {
  return MonomialIdeal(n, {Monomial(n)});
}

MonomialIdeal MonomialIdeal::generated_by_variables(std::size_t n,
                                                    std::span<const VarIndex> vars) {
  std::vector<Monomial> gens;
  for (VarIndex j : vars) gens.push_back(Monomial::variable(n, j));
  return MonomialIdeal(n, std::move(gens));
}

bool MonomialIdeal::is_unit() const noexcept {
  return gens_.size() == 1 && gens_.front().is_unit();
}

bool MonomialIdeal::is_squarefree() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::is_generated_by_variables() const noexcept {
  return !gens_.empty() && std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) {
    return g.total_degree() == 1;
  });
}

bool MonomialIdeal::contains(const Monomial& u) const {
  require_same_context(u, n_);
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(u); });
}

std::string MonomialIdeal::to_string() const {
  if (is_zero()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

bool contains(const MonomialIdeal& ideal, const Monomial& u) { return ideal.contains(u); }

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& w) {
  require_same_context(w, ideal.num_vars());
  std::vector<Monomial> gens;
  gens.reserve(ideal.num_generators());
  for (const auto& v : ideal.generators()) gens.push_back(colon(v, w));
  return minimalize(std::move(gens), ideal.num_vars());
}

MonomialIdeal restriction(const MonomialIdeal& ideal, VarIndex j) {
  const std::size_t n = ideal.num_vars();
  if (j >= n) throw DimensionError("variable index out of range");
  if (n == 1) throw DimensionError("cannot delete the only variable of the ring");
  std::vector<Monomial> gens;
  for (const auto& v : ideal.generators())
    if (v[j] == 0) gens.push_back(v.without_variable(j));
  // Subset of a minimal set stays minimal, and deleting a zero column keeps
  // the lexicographic order.
  MonomialIdeal r(MonomialIdeal::Canonical{}, n - 1, std::move(gens));
  r.deleted_ = j;
  return r;
}

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal, const char* op) {
  if (ideal.is_zero()) throw DegenerateIdealError(std::string(op) + ": zero ideal");
  if (ideal.is_unit()) throw DegenerateIdealError(std::string(op) + ": unit ideal");
}

}  // namespace

SupportProfile support_profile(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "support_profile");
  SupportProfile p;
  p.counts.assign(ideal.num_vars(), 0);
  for (const auto& v : ideal.generators())
    for (VarIndex j = 0; j < v.num_vars(); ++j)
      if (v[j] > 0) ++p.counts[j];
  for (VarIndex j = 0; j < p.counts.size(); ++j)
    if (p.counts[j] > 0) p.union_support.push_back(j);
  return p;
}

std::uint64_t epsilon(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "epsilon");
  std::uint64_t e = 0;
  for (const auto& v : ideal.generators()) e += v.total_degree();
  return e;
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw DegenerateIdealError("radical: unit ideal");
  std::vector<Monomial> gens;
  for (const auto& v : ideal.generators()) {
    ExponentVector e(v.num_vars());
    for (VarIndex j = 0; j < e.size(); ++j) e[j] = v[j] > 0 ? 1 : 0;
    gens.emplace_back(std::move(e));
  }
  return minimalize(std::move(gens), ideal.num_vars());
}

ExponentVector lcm_exponents(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw DegenerateIdealError("lcm_exponents: zero ideal");
  ExponentVector g(ideal.num_vars(), 0);
  for (const auto& v : ideal.generators())
    for (VarIndex j = 0; j < g.size(); ++j) g[j] = std::max(g[j], v[j]);
  return g;
}

Polarization polarize(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "polarize");
  const ExponentVector g = lcm_exponents(ideal);
  Polarization p{MonomialIdeal::zero(1), 0, {}};
  // first[j] = index of x_{j,1} in the polarized ring.
  std::vector<std::size_t> first(g.size());
  for (VarIndex j = 0; j < g.size(); ++j) {
    first[j] = p.origin.size();
    const Exponent copies = std::max<Exponent>(g[j], 1);
    for (Exponent t = 1; t <= copies; ++t) p.origin.emplace_back(j, t);
    if (g[j] >= 1) p.added_vars += g[j] - 1;
  }
  const std::size_t npol = p.origin.size();
  std::vector<Monomial> gens;
  for (const auto& v : ideal.generators()) {
    ExponentVector e(npol, 0);
    for (VarIndex j = 0; j < g.size(); ++j)
      for (Exponent t = 0; t < v[j]; ++t) e[first[j] + t] = 1;
    gens.emplace_back(std::move(e));
  }
  p.ideal = MonomialIdeal(npol, std::move(gens));
  return p;
}

Monomial Polarization::depolarize(const Monomial& u) const {
  require_same_context(u, origin.size());
  std::size_t n = 0;
  for (const auto& [j, t] : origin) n = std::max(n, j + 1);
  ExponentVector e(n, 0);
  for (std::size_t k = 0; k < origin.size(); ++k) e[origin[k].first] += u[k];
  return Monomial(std::move(e));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars()) throw DimensionError("intersect: ring mismatch");
  std::vector<Monomial> gens;
  for (const auto& u : a.generators())
    for (const auto& v : b.generators()) gens.push_back(lcm(u, v));
  return minimalize(std::move(gens), a.num_vars());
}

MonomialIdeal multiply(const MonomialIdeal& ideal, const Monomial& w) {
  require_same_context(w, ideal.num_vars());
  std::vector<Monomial> gens;
  for (const auto& v : ideal.generators()) gens.push_back(v * w);
  return MonomialIdeal(ideal.num_vars(), std::move(gens));
}

}  // namespace monodepth
