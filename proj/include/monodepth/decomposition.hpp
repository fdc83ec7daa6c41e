#pragma once

// Irreducible and primary decomposition of monomial ideals, associated primes,
// big height and height.

#include <cstddef>
#include <vector>

#include "monodepth/monomial.hpp"

namespace monodepth {

// The irreducible ideal (x_j^{a_j} : a_j > 0).
struct IrreducibleComponent {
  ExponentVector powers;

  std::vector<VarIndex> support() const;
  MonomialIdeal ideal() const;
  // Ideal containment: every generator of `other` lies in *this.
  bool contains(const IrreducibleComponent& other) const;

  friend auto operator<=>(const IrreducibleComponent&, const IrreducibleComponent&) = default;
};

// A monomial prime (x_j : j in vars), vars ascending and nonempty.
struct MonomialPrime {
  std::vector<VarIndex> vars;

  std::size_t height() const noexcept { return vars.size(); }
  std::string to_string() const;

  friend auto operator<=>(const MonomialPrime&, const MonomialPrime&) = default;
};

struct AssReport {
  std::vector<MonomialPrime> primes;  // sorted
  std::size_t k = 0;                  // max |P|
  std::size_t height = 0;             // min |P| over minimal primes
};

struct PrimaryComponent {
  MonomialPrime prime;
  MonomialIdeal ideal;
};

// Irredundant irreducible decomposition, sorted by powers vector.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal);

// Groups irreducible components by radical; one primary component per
// associated prime, in prime order.
std::vector<PrimaryComponent> primary_decomposition(const MonomialIdeal& ideal);

AssReport associated_primes(const MonomialIdeal& ideal);
std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal);

std::size_t big_height(const MonomialIdeal& ideal);
std::size_t height(const MonomialIdeal& ideal);

}  // namespace monodepth
