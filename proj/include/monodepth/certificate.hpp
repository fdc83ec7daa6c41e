#pragma once

// Stanley decompositions as self-contained certificates, and their verifier.

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "monodepth/monomial.hpp"

namespace monodepth {

// Which module is decomposed: S/I or I.
enum class ModuleMode { quotient, ideal };

std::string to_string(ModuleMode mode);
ModuleMode parse_mode(const std::string& text);

// sdepth of the zero module (empty decomposition).
inline constexpr std::size_t kInfiniteSdepth = std::numeric_limits<std::size_t>::max();

std::string sdepth_to_string(std::size_t sdepth);

// monomial · K[vars]
struct StanleySpace {
  Monomial monomial;
  std::vector<VarIndex> vars;  // ascending

  bool contains(const Monomial& u) const;

  friend bool operator==(const StanleySpace&, const StanleySpace&) = default;
};

struct StanleyDecomposition {
  MonomialIdeal ideal;
  ModuleMode mode = ModuleMode::quotient;
  std::vector<StanleySpace> spaces;

  std::size_t num_vars() const noexcept { return ideal.num_vars(); }
  // min |Z_i|, or kInfiniteSdepth when there are no spaces.
  std::size_t sdepth() const noexcept;
};

struct VerifyResult {
  bool ok = false;
  std::size_t sdepth = kInfiniteSdepth;
  // First box point whose cover count is wrong.
  std::optional<Monomial> bad_point;
  std::size_t expected_count = 0;
  std::size_t actual_count = 0;
  std::string message;
};

// Checks that the spaces partition the module on the box [0, B] with
// B_j = 1 + max deg_{x_j} over G(I) and the space monomials (+ `extra`).
// Throws LimitExceeded when the box exceeds `max_box` points.
VerifyResult verify(const StanleyDecomposition& d, Exponent extra = 0,
                    std::size_t max_box = 4'000'000);

}  // namespace monodepth
