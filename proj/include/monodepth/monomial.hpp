#pragma once

// Monomials and monomial ideals in K[x_1, ..., x_n].
//
// Variables are 0-based internally (x_1 is index 0); only text rendering and
// the CLI use 1-based names.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monodepth/errors.hpp"

namespace monodepth {

using Exponent = std::uint32_t;
using VarIndex = std::size_t;
using ExponentVector = std::vector<Exponent>;

struct VariableContext {
  std::size_t n = 1;

  explicit VariableContext(std::size_t num_vars);
  bool operator==(const VariableContext&) const = default;
};

class Monomial {
 public:
  Monomial() = default;
  // The unit monomial in n variables.
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(ExponentVector exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t n, VarIndex j, Exponent power = 1);

  std::size_t num_vars() const noexcept { return exps_.size(); }
  const ExponentVector& exponents() const noexcept { return exps_; }
  Exponent operator[](VarIndex j) const { return exps_[j]; }
  Exponent degree(VarIndex j) const { return exps_.at(j); }
  std::uint64_t total_degree() const noexcept;

  std::vector<VarIndex> support() const;
  std::size_t support_size() const noexcept;
  bool is_unit() const noexcept;
  bool is_squarefree() const noexcept;
  // x_j^a with a >= 1.
  bool is_pure_power() const noexcept;

  bool divides(const Monomial& u) const;

  Monomial with_exponent(VarIndex j, Exponent e) const;
  // Drops variable j; the result lives in n - 1 variables.
  Monomial without_variable(VarIndex j) const;
  // Inserts a zero exponent at position j; the result lives in n + 1 variables.
  Monomial with_inserted_variable(VarIndex j) const;

  std::string to_string() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  // a / gcd(a, b): the generator of (a) : b.
  friend Monomial colon(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  ExponentVector exps_;
};

void require_same_context(const Monomial& a, std::size_t n);

class MonomialIdeal {
 public:
  // Minimalizes `gens`. An empty list is the zero ideal.
  MonomialIdeal(std::size_t n, std::vector<Monomial> gens);
  explicit MonomialIdeal(VariableContext ctx, std::vector<Monomial> gens = {})
      : MonomialIdeal(ctx.n, std::move(gens)) {}

  static MonomialIdeal zero(std::size_t n);
  static MonomialIdeal unit(std::size_t n);
  // (x_{j} : j in vars)
  static MonomialIdeal generated_by_variables(std::size_t n,
                                              std::span<const VarIndex> vars);

  std::size_t num_vars() const noexcept { return n_; }
  VariableContext context() const { return VariableContext(n_); }
  // G(I) in ascending lexicographic order of exponent vectors.
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t num_generators() const noexcept { return gens_.size(); }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept;
  bool is_proper_nonzero() const noexcept { return !is_zero() && !is_unit(); }
  bool is_squarefree() const noexcept;
  bool is_generated_by_variables() const noexcept;

  bool contains(const Monomial& u) const;

  // Set by `restriction`: the index (in the parent ring) of the deleted variable.
  std::optional<VarIndex> deleted_variable() const noexcept { return deleted_; }

  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.n_ == b.n_ && a.gens_ == b.gens_;
  }

 private:
  friend MonomialIdeal restriction(const MonomialIdeal& ideal, VarIndex j);
  struct Canonical {};
  MonomialIdeal(Canonical, std::size_t n, std::vector<Monomial> gens)
      : n_(n), gens_(std::move(gens)) {}

  std::size_t n_ = 1;
  std::vector<Monomial> gens_;
  std::optional<VarIndex> deleted_;
};

struct SupportProfile {
  // counts[j] = t_j = number of minimal generators divisible by x_j.
  std::vector<std::size_t> counts;
  // Union of supports of the minimal generators, ascending.
  std::vector<VarIndex> union_support;
};

struct Polarization {
  MonomialIdeal ideal;
  std::size_t added_vars = 0;
  // origin[k] = (original variable, copy index starting at 1) of polarized variable k.
  std::vector<std::pair<VarIndex, Exponent>> origin;

  // Substitutes x_{j,t} -> x_j.
  Monomial depolarize(const Monomial& u) const;
};

MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t n);
bool contains(const MonomialIdeal& ideal, const Monomial& u);
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& w);
// I ∩ S' where S' drops x_j; re-indexed to n - 1 variables.
MonomialIdeal restriction(const MonomialIdeal& ideal, VarIndex j);
SupportProfile support_profile(const MonomialIdeal& ideal);
// Sum of the total degrees of the minimal generators.
std::uint64_t epsilon(const MonomialIdeal& ideal);
MonomialIdeal radical(const MonomialIdeal& ideal);
ExponentVector lcm_exponents(const MonomialIdeal& ideal);
Polarization polarize(const MonomialIdeal& ideal);

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
// w·I
MonomialIdeal multiply(const MonomialIdeal& ideal, const Monomial& w);

}  // namespace monodepth
