#pragma once

#include <stdexcept>
#include <string>

namespace monodepth {

// A monomial or ideal was used in a ring with a different number of variables.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation that needs a proper nonzero ideal received the zero or unit ideal.
class DegenerateIdealError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configured size cap was exceeded. `cap()` names the cap ("box", "poset",
// "polarized-vars", "vertices", ...).
class LimitExceeded : public std::runtime_error {
 public:
  LimitExceeded(std::string cap, const std::string& what)
      : std::runtime_error(what), cap_(std::move(cap)) {}
  const std::string& cap() const noexcept { return cap_; }

 private:
  std::string cap_;
};

}  // namespace monodepth
