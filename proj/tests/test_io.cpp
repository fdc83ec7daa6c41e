#include <doctest.h>

#include <random>

#include "monodepth/io.hpp"
#include "monodepth/stanley.hpp"

using namespace monodepth;

namespace {

Monomial mono(std::initializer_list<Exponent> e) { return Monomial(ExponentVector(e)); }

void check_error_at(const std::string& text, std::size_t line, std::size_t column) {
  CAPTURE(text);
  try {
    parse_ideal(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

}  // namespace

TEST_CASE("text format") {
  const auto p = parse_ideal("n = 4\nx1^3\nx1*x2\nx2*x3\nx3*x4\nx4^2");
  CHECK(p.ideal.num_vars() == 4);
  CHECK(p.ideal.num_generators() == 5);
  CHECK(p.was_minimal);

  const auto q = parse_ideal("x1\nx1*x2");
  CHECK(q.ideal == MonomialIdeal(2, {mono({1, 0})}));
  CHECK_FALSE(q.was_minimal);
  CHECK(q.input_generators == 2);

  const auto r = parse_ideal("# comment\n  x1^2 , x2*x3 ; x3^4  # trailing\n\n");
  CHECK(r.ideal.num_vars() == 3);
  CHECK(r.ideal.num_generators() == 3);
  CHECK(parse_ideal("n = 2\n1").ideal.is_unit());
  CHECK(parse_ideal("n = 3\n").ideal.is_zero());
  CHECK(parse_ideal("x2*x2^2").ideal == MonomialIdeal(2, {mono({0, 3})}));
}

TEST_CASE("syntax errors carry line and column") {
  check_error_at("x1\nx2 + x3", 2, 4);
  check_error_at("x1*y2", 1, 4);
  check_error_at("n = 2\nx3", 2, 1);
  check_error_at("x0", 1, 2);
  check_error_at("x1^", 1, 4);
  check_error_at("x1\nn = 3", 2, 1);
  check_error_at("1", 1, 1);
  ParseOptions small;
  small.max_exponent = 10;
  CHECK_THROWS_AS(parse_ideal("x1^11", small), ParseError);
}

TEST_CASE("JSON format") {
  const auto p = parse_ideal(R"({"n": 3, "gens": [[1,0,0],[1,1,0],[0,0,2]]})");
  CHECK(p.ideal == MonomialIdeal(3, {mono({1, 0, 0}), mono({0, 0, 2})}));
  CHECK_FALSE(p.was_minimal);
  CHECK_THROWS_AS(parse_ideal(R"({"n": 3, "gens": [[1,0]]})"), ParseError);
  CHECK_THROWS_AS(parse_ideal(R"({"n": 3})"), ParseError);
  CHECK_THROWS_AS(parse_ideal(R"({"n": 3, "gens": [[1,0,)"), ParseError);
  CHECK(ideal_to_json(p.ideal).dump() == R"({"gens":[[0,0,2],[1,0,0]],"n":3})");
}

TEST_CASE("round trip of printed ideals") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    std::vector<Monomial> gens;
    for (std::size_t i = 0, m = rng() % 7; i < m; ++i) {
      ExponentVector v(n);
      for (auto& x : v) x = static_cast<Exponent>(rng() % 5 == 0 ? rng() % 1000 : rng() % 3);
      gens.emplace_back(v);
    }
    const MonomialIdeal I(n, gens);
    CHECK(parse_ideal(format_ideal(I)).ideal == I);
    CHECK(parse_ideal(ideal_to_json(I).dump()).ideal == I);
    // Free-form single line using the pretty printer.
    if (I.is_proper_nonzero()) {
      std::string line = "n = " + std::to_string(n) + "\n";
      for (std::size_t i = 0; i < I.num_generators(); ++i)
        line += (i ? ", " : "") + I.generators()[i].to_string();
      CHECK(parse_ideal(line).ideal == I);
    }
  }
}

TEST_CASE("certificate round trip and schema errors") {
  const MonomialIdeal I(3, {mono({1, 1, 0}), mono({0, 0, 2})});
  const auto d = decompose_quotient(I).decomposition;
  const json j = certificate_to_json(d);
  const StanleyDecomposition back = certificate_from_json(j);
  CHECK(back.ideal == d.ideal);
  CHECK(back.mode == d.mode);
  CHECK(back.spaces == d.spaces);
  CHECK(certificate_to_json(back) == j);

  json bad = j;
  bad["mode"] = "module";
  CHECK_THROWS_AS(certificate_from_json(bad), std::invalid_argument);
  bad = j;
  bad["spaces"][0]["vars"] = json::array({0});
  CHECK_THROWS_AS(certificate_from_json(bad), std::invalid_argument);
  bad = j;
  bad["spaces"][0]["monomial"] = json::array({1});
  CHECK_THROWS_AS(certificate_from_json(bad), std::invalid_argument);
  bad = j;
  bad.erase("gens");
  CHECK_THROWS_AS(certificate_from_json(bad), std::invalid_argument);
}
