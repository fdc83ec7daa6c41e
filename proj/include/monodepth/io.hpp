#pragma once

// Ideal text/JSON formats, the decomposition certificate format, and JSON
// renderings of every report.
//
// Text format:
//   # comment
//   n = 4
//   x1^3
//   x1*x2
// Monomials may also be separated by ',' or ';' on one line. `1` is the unit.
// JSON format: {"n": 4, "gens": [[3,0,0,0], [1,1,0,0]]}

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "monodepth/certificate.hpp"
#include "monodepth/decomposition.hpp"
#include "monodepth/homology.hpp"
#include "monodepth/hvz.hpp"
#include "monodepth/stanley.hpp"

namespace monodepth {

using json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_, column_;
};

struct ParseOptions {
  Exponent max_exponent = 1u << 16;
};

struct ParsedIdeal {
  MonomialIdeal ideal;
  std::size_t input_generators = 0;
  bool was_minimal = true;
};

// Accepts either format (JSON when the first non-blank character is '{').
ParsedIdeal parse_ideal(std::string_view text, const ParseOptions& options = {});
ParsedIdeal parse_ideal_text(std::string_view text, const ParseOptions& options = {});
ParsedIdeal parse_ideal_json(const json& j, const ParseOptions& options = {});

// Text format with an explicit `n = ` header; parse_ideal reads it back.
std::string format_ideal(const MonomialIdeal& ideal);

json ideal_to_json(const MonomialIdeal& ideal);
json monomial_to_json(const Monomial& u);

json certificate_to_json(const StanleyDecomposition& d);
// Throws std::invalid_argument on schema errors.
StanleyDecomposition certificate_from_json(const json& j);

json to_json(const AssReport& r);
json to_json(const std::vector<PrimaryComponent>& components);
json to_json(const DepthReport& r, const Polarization* pol = nullptr);
json to_json(const HypothesisReport& r);
json to_json(const HeavyVariable& h);
json to_json(const ConjectureReport& r, bool with_certificates = false);
json sdepth_json(std::size_t value);

// 1-based variable list, e.g. [1, 3].
json vars_to_json(const std::vector<VarIndex>& vars);

}  // namespace monodepth
