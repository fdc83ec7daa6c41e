#pragma once

// Command-line front end: `monodepth <subcommand> [options] [input]`.
//
// Exit codes: 0 success, 1 usage or limits error, 2 a violated conjecture
// verdict or a failed verification.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "monodepth/certificate.hpp"
#include "monodepth/instances.hpp"
#include "monodepth/linalg.hpp"

namespace monodepth {

enum class OutputFormat { text, json };

struct RunConfig {
  std::string command;
  std::string input;         // file path, "-" for stdin
  std::string inline_ideal;  // takes precedence over `input`
  ModuleMode mode = ModuleMode::quotient;
  Field field;
  bool exact = false;
  bool betti = false;
  bool certificates = false;
  std::uint64_t seed = 0;
  std::size_t max_box = 200'000;
  std::size_t max_polarized_vars = 20;
  std::uint64_t timeout_ms = 10'000;  // per exact solve; 0 means none
  Exponent max_exponent = 1u << 16;
  OutputFormat format = OutputFormat::text;
  // sweep
  std::size_t n = 4;
  std::size_t max_m = 5;
  Exponent max_exp = 2;
  std::size_t count = 100;
  InstanceFilter filter = InstanceFilter::all;
  // example
  std::string example_name;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (flags, and MONODEPTH_* environment overrides) and runs.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monodepth
