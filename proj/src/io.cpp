#include "monodepth/io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace monodepth {

namespace {

struct RawMonomial {
  std::vector<std::pair<std::size_t, std::uint64_t>> factors;  // (1-based var, exponent)
  std::size_t line = 0, column = 0;
};

class LineScanner {
 public:
  LineScanner(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_spaces();
    return pos_ >= text_.size();
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  std::size_t column() const { return pos_ + 1; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, column(), msg); }

  bool accept(char c) {
    skip_spaces();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  std::uint64_t number() {
    skip_spaces();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > (1ULL << 40)) fail("number too large");
      ++pos_;
    }
    return v;
  }

  RawMonomial monomial() {
    skip_spaces();
    RawMonomial m;
    m.line = line_;
    m.column = column();
    do {
      skip_spaces();
      if (peek() == '1' && (pos_ + 1 >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
        ++pos_;
        continue;
      }
      if (peek() != 'x' && peek() != 'X') fail("expected a factor like x3 or x3^2");
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a variable index after 'x'");
      const std::size_t var_col = column();
      const std::uint64_t var = number();
      if (var == 0) throw ParseError(line_, var_col, "variable indices start at 1");
      std::uint64_t e = 1;
      if (accept('^')) e = number();
      m.factors.emplace_back(static_cast<std::size_t>(var), e);
    } while (accept('*'));
    return m;
  }

  std::size_t pos_ = 0;

 private:
  std::string_view text_;
  std::size_t line_;
};

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

ParsedIdeal finish(std::size_t n, std::vector<Monomial> gens) {
  ParsedIdeal p{MonomialIdeal::zero(n), gens.size(), true};
  std::vector<Monomial> sorted = gens;
  std::sort(sorted.begin(), sorted.end());
  p.ideal = MonomialIdeal(n, std::move(gens));
  p.was_minimal = p.ideal.num_generators() == sorted.size() &&
                  std::equal(sorted.begin(), sorted.end(), p.ideal.generators().begin());
  return p;
}

}  // namespace

ParsedIdeal parse_ideal_text(std::string_view text, const ParseOptions& options) {
  std::optional<std::size_t> n;
  std::vector<RawMonomial> raw;
  std::size_t line_no = 0;
  std::size_t start = 0;
  bool seen_content = false;
  while (start <= text.size()) {
    const auto end = std::min(text.find('\n', start), text.size());
    ++line_no;
    std::string_view line = strip_comment(text.substr(start, end - start));
    start = end + 1;
    if (is_blank(line)) {
      if (end == text.size()) break;
      continue;
    }
    LineScanner sc(line, line_no);
    sc.skip_spaces();
    if (sc.peek() == 'n' || sc.peek() == 'N') {
      if (seen_content) sc.fail("the 'n = <int>' header must come first");
      ++sc.pos_;
      if (!sc.accept('=')) sc.fail("expected '=' after n");
      const auto value = sc.number();
      if (value == 0) sc.fail("n must be at least 1");
      if (value > 4096) sc.fail("n is too large");
      n = static_cast<std::size_t>(value);
      if (!sc.done()) sc.fail("unexpected text after the header");
      seen_content = true;
      if (end == text.size()) break;
      continue;
    }
    seen_content = true;
    while (true) {
      raw.push_back(sc.monomial());
      if (sc.done()) break;
      if (!sc.accept(',') && !sc.accept(';')) sc.fail("expected '*', ',' or end of line");
    }
    if (end == text.size()) break;
  }

  std::size_t max_var = 0;
  for (const auto& m : raw)
    for (const auto& [v, e] : m.factors) max_var = std::max(max_var, v);
  if (!n) {
    if (max_var == 0) throw ParseError(1, 1, "cannot infer the number of variables; add 'n = <int>'");
    n = max_var;
  }
  std::vector<Monomial> gens;
  for (const auto& m : raw) {
    ExponentVector e(*n, 0);
    for (const auto& [v, x] : m.factors) {
      if (v > *n) {
        throw ParseError(m.line, m.column,
                         "variable x" + std::to_string(v) + " exceeds n = " + std::to_string(*n));
      }
      const std::uint64_t total = e[v - 1] + x;
      if (total > options.max_exponent) {
        throw ParseError(m.line, m.column,
                         "exponent " + std::to_string(total) + " exceeds the cap " +
                             std::to_string(options.max_exponent));
      }
      e[v - 1] = static_cast<Exponent>(total);
    }
    gens.emplace_back(std::move(e));
  }
  return finish(*n, std::move(gens));
}

ParsedIdeal parse_ideal_json(const json& j, const ParseOptions& options) {
  auto bad = [](const std::string& msg) { return ParseError(1, 1, msg); };
  if (!j.is_object() || !j.contains("n") || !j.contains("gens"))
    throw bad("expected an object with keys \"n\" and \"gens\"");
  if (!j["n"].is_number_unsigned() || j["n"].get<std::uint64_t>() == 0)
    throw bad("\"n\" must be a positive integer");
  const auto n = j["n"].get<std::size_t>();
  if (!j["gens"].is_array()) throw bad("\"gens\" must be an array");
  std::vector<Monomial> gens;
  for (const auto& g : j["gens"]) {
    if (!g.is_array() || g.size() != n)
      throw bad("each generator must be an array of " + std::to_string(n) + " exponents");
    ExponentVector e;
    for (const auto& x : g) {
      if (!x.is_number_unsigned()) throw bad("exponents must be non-negative integers");
      const auto v = x.get<std::uint64_t>();
      if (v > options.max_exponent)
        throw bad("exponent " + std::to_string(v) + " exceeds the cap " +
                  std::to_string(options.max_exponent));
      e.push_back(static_cast<Exponent>(v));
    }
    gens.emplace_back(std::move(e));
  }
  return finish(n, std::move(gens));
}

ParsedIdeal parse_ideal(std::string_view text, const ParseOptions& options) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(1, e.byte, "malformed JSON");
    }
    return parse_ideal_json(j, options);
  }
  return parse_ideal_text(text, options);
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::string s = "n = " + std::to_string(ideal.num_vars()) + "\n";
  for (const auto& g : ideal.generators()) s += g.to_string() + "\n";
  return s;
}

json monomial_to_json(const Monomial& u) { return json(u.exponents()); }

json ideal_to_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators()) gens.push_back(monomial_to_json(g));
  return json{{"n", ideal.num_vars()}, {"gens", gens}};
}

json vars_to_json(const std::vector<VarIndex>& vars) {
  json a = json::array();
  for (VarIndex v : vars) a.push_back(v + 1);
  return a;
}

json sdepth_json(std::size_t value) {
  if (value == kInfiniteSdepth) return "inf";
  return value;
}

json certificate_to_json(const StanleyDecomposition& d) {
  json spaces = json::array();
  for (const auto& sp : d.spaces)
    spaces.push_back({{"monomial", monomial_to_json(sp.monomial)}, {"vars", vars_to_json(sp.vars)}});
  json gens = ideal_to_json(d.ideal)["gens"];
  return json{{"n", d.num_vars()}, {"mode", to_string(d.mode)}, {"gens", gens}, {"spaces", spaces}};
}

StanleyDecomposition certificate_from_json(const json& j) {
  auto bad = [](const std::string& msg) { return std::invalid_argument("certificate: " + msg); };
  if (!j.is_object()) throw bad("expected an object");
  for (const char* key : {"n", "mode", "gens", "spaces"})
    if (!j.contains(key)) throw bad(std::string("missing key \"") + key + "\"");
  if (!j["mode"].is_string()) throw bad("\"mode\" must be a string");
  const ParsedIdeal parsed = parse_ideal_json(json{{"n", j["n"]}, {"gens", j["gens"]}});
  StanleyDecomposition d{parsed.ideal, parse_mode(j["mode"].get<std::string>()), {}};
  const std::size_t n = parsed.ideal.num_vars();
  if (!j["spaces"].is_array()) throw bad("\"spaces\" must be an array");
  for (const auto& s : j["spaces"]) {
    if (!s.is_object() || !s.contains("monomial") || !s.contains("vars"))
      throw bad("each space needs \"monomial\" and \"vars\"");
    const auto& mono = s["monomial"];
    if (!mono.is_array() || mono.size() != n) throw bad("space monomial has the wrong length");
    ExponentVector e;
    for (const auto& x : mono) {
      if (!x.is_number_unsigned()) throw bad("exponents must be non-negative integers");
      e.push_back(x.get<Exponent>());
    }
    StanleySpace sp{Monomial(std::move(e)), {}};
    if (!s["vars"].is_array()) throw bad("\"vars\" must be an array");
    for (const auto& v : s["vars"]) {
      if (!v.is_number_unsigned()) throw bad("variable indices must be positive integers");
      const auto idx = v.get<std::size_t>();
      if (idx == 0 || idx > n) throw bad("variable index " + std::to_string(idx) + " out of range");
      sp.vars.push_back(idx - 1);
    }
    d.spaces.push_back(std::move(sp));
  }
  return d;
}

json to_json(const AssReport& r) {
  json primes = json::array();
  for (const auto& p : r.primes) primes.push_back(vars_to_json(p.vars));
  return json{{"primes", primes}, {"k", r.k}, {"height", r.height}};
}

json to_json(const std::vector<PrimaryComponent>& components) {
  json out = json::array();
  for (const auto& c : components)
    out.push_back({{"prime", vars_to_json(c.prime.vars)}, {"component", ideal_to_json(c.ideal)}});
  return out;
}

json to_json(const DepthReport& r, const Polarization* pol) {
  json j{{"n", r.num_vars},
         {"field", r.field.to_string()},
         {"depth_quotient", r.depth_quotient},
         {"pd_quotient", r.pd_quotient},
         {"depth_ideal", r.depth_ideal()},
         {"s", r.s},
         {"polarized_vars", r.polarized_vars}};
  if (r.betti) {
    json entries = json::array();
    for (const auto& e : r.betti->entries) {
      std::vector<VarIndex> sigma;
      for (std::size_t v = 0; v < r.betti->num_vars; ++v)
        if (e.sigma >> v & 1) sigma.push_back(v);
      json entry{{"i", e.i}, {"sigma", vars_to_json(sigma)}, {"value", e.value}};
      if (pol) {
        ExponentVector deg(r.num_vars, 0);
        for (VarIndex v : sigma) ++deg[pol->origin[v].first];
        entry["multidegree"] = deg;
      }
      entries.push_back(entry);
    }
    json totals = json::array();
    for (std::size_t i = 0; i <= r.betti->projective_dimension(); ++i)
      totals.push_back(r.betti->total(i));
    j["betti"] = {{"totals", totals}, {"entries", entries}};
    if (pol) {
      json origin = json::array();
      for (const auto& [var, copy] : pol->origin) origin.push_back({var + 1, copy});
      j["betti"]["polarized_origin"] = origin;
    }
  }
  return j;
}

json to_json(const HypothesisReport& r) {
  auto opt = [](const std::optional<bool>& b) -> json {
    if (!b) return nullptr;
    return *b;
  };
  return json{{"m", r.m},
              {"k", r.k},
              {"s", r.s},
              {"height", r.height},
              {"quotient_bound_ok", opt(r.quotient_bound_ok)},
              {"ideal_bound_ok", opt(r.ideal_bound_ok)},
              {"aci", r.aci}};
}

json to_json(const HeavyVariable& h) {
  return json{{"var", h.var + 1}, {"t", h.count}, {"bound", h.bound}, {"k", h.k}};
}

json to_json(const ConjectureReport& r, bool with_certificates) {
  json j{{"ideal", ideal_to_json(r.ideal)}};
  if (r.depth) {
    j["depth_quotient"] = r.depth->depth_quotient;
    j["depth_ideal"] = r.depth->depth_ideal();
    j["field"] = r.depth->field.to_string();
  } else {
    j["depth_quotient"] = nullptr;
    j["depth_ideal"] = nullptr;
  }
  auto claim = [&](const std::optional<SdepthClaim>& c) -> json {
    if (!c) return nullptr;
    json out{{"value", sdepth_json(c->value)}, {"exact", c->exact}, {"certified", true}};
    if (with_certificates) out["certificate"] = certificate_to_json(c->certificate);
    return out;
  };
  j["sdepth_quotient"] = claim(r.sdepth_quotient);
  j["sdepth_ideal"] = claim(r.sdepth_ideal);
  j["verdict_quotient"] = to_string(r.verdict_quotient);
  j["verdict_ideal"] = to_string(r.verdict_ideal);
  j["hypothesis"] = r.hypothesis ? to_json(*r.hypothesis) : json(nullptr);
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

}  // namespace monodepth
