#include "monodepth/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "monodepth/decomposition.hpp"
#include "monodepth/homology.hpp"
#include "monodepth/hvz.hpp"
#include "monodepth/io.hpp"
#include "monodepth/stanley.hpp"

namespace monodepth {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_input(const RunConfig& config) {
  if (!config.inline_ideal.empty()) return config.inline_ideal;
  if (config.input.empty()) throw UsageError("no input: pass a file, '-' for stdin, or --ideal");
  if (config.input == "-") return read_all(std::cin);
  std::ifstream f(config.input);
  if (!f) throw UsageError("cannot open '" + config.input + "'");
  return read_all(f);
}

MonomialIdeal load_ideal(const RunConfig& config, std::ostream& err) {
  ParseOptions po;
  po.max_exponent = config.max_exponent;
  ParsedIdeal p = parse_ideal(read_input(config), po);
  if (!p.was_minimal) {
    err << "warning: " << p.input_generators << " input generators were not minimal; using "
        << p.ideal.to_string() << "\n";
  }
  return p.ideal;
}

HvzLimits hvz_limits(const RunConfig& c) {
  HvzLimits l;
  l.max_poset = c.max_box;
  l.timeout = std::chrono::milliseconds(c.timeout_ms);
  return l;
}

CheckOptions check_options(const RunConfig& c) {
  CheckOptions o;
  o.field = c.field;
  o.hvz = hvz_limits(c);
  o.homology.max_polarized_vars = c.max_polarized_vars;
  o.homology.max_vertices = std::max<std::size_t>(20, c.max_polarized_vars);
  return o;
}

// ---------------------------------------------------------------------------
// Text rendering of the structured output.

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

bool is_flat(const json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& x : j)
    if (!is_flat(x)) return false;
  return true;
}

void render(const json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_flat(value)) {
        out << pad << key << ": " << (value.is_array() ? value.dump() : scalar_text(value)) << "\n";
      } else {
        out << pad << key << ":\n";
        render(value, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& x : j) {
      const bool small_record =
          x.is_object() && x.size() <= 3 &&
          std::all_of(x.begin(), x.end(), [](const json& v) { return is_flat(v); });
      if (is_flat(x) || small_record) {
        out << pad << "- " << (x.is_array() || x.is_object() ? x.dump() : scalar_text(x)) << "\n";
      } else {
        out << pad << "-\n";
        render(x, out, indent + 2);
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

void flatten(const json& j, const std::string& prefix, std::vector<std::string>& parts) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [key, value] : j.items())
      flatten(value, prefix.empty() ? key : prefix + "." + key, parts);
  } else {
    parts.push_back(prefix + "=" + (j.is_array() || j.is_object() ? j.dump() : scalar_text(j)));
  }
}

void emit(const RunConfig& c, const json& j, std::ostream& out) {
  if (c.format == OutputFormat::json) {
    out << j.dump(2) << "\n";
  } else {
    render(j, out, 0);
  }
}

void emit_line(const RunConfig& c, const json& j, std::ostream& out) {
  if (c.format == OutputFormat::json) {
    out << j.dump() << "\n";
    return;
  }
  std::vector<std::string> parts;
  flatten(j, "", parts);
  for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? " " : "") << parts[i];
  out << "\n";
}

// ---------------------------------------------------------------------------

int cmd_ass(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const MonomialIdeal ideal = load_ideal(c, err);
  json j = to_json(associated_primes(ideal));
  j["ideal"] = ideal_to_json(ideal);
  j["m"] = ideal.num_generators();
  json comps = json::array();
  for (const auto& ic : irreducible_decomposition(ideal)) comps.push_back(ic.powers);
  j["irreducible_components"] = comps;
  j["primary_decomposition"] = to_json(primary_decomposition(ideal));
  emit(c, j, out);
  return kExitOk;
}

int cmd_depth(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const MonomialIdeal ideal = load_ideal(c, err);
  const CheckOptions o = check_options(c);
  const DepthReport r = depth_quotient(ideal, c.field, o.homology, c.betti);
  const Polarization pol = polarize(ideal);
  json j = to_json(r, &pol);
  j["ideal"] = ideal_to_json(ideal);
  emit(c, j, out);
  return kExitOk;
}

json verified_certificate_json(const StanleyDecomposition& d, int& exit_code) {
  const VerifyResult v = verify(d);
  json j{{"verified", v.ok}, {"certificate", certificate_to_json(d)}};
  if (!v.ok) {
    j["verify_message"] = v.message;
    exit_code = kExitViolation;
  }
  return j;
}

int cmd_sdepth(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const MonomialIdeal ideal = load_ideal(c, err);
  int code = kExitOk;
  json j;
  if (c.exact) {
    const SdepthResult r = exact_sdepth(ideal, c.mode, hvz_limits(c));
    j = verified_certificate_json(partition_to_decomposition(r.witness, r.poset, ideal), code);
    j["value"] = sdepth_json(r.value);
    j["exact"] = r.proved;
    j["method"] = "interval-partition";
  } else {
    const auto r = decompose(ideal, c.mode, hvz_limits(c));
    j = verified_certificate_json(r.decomposition, code);
    j["value"] = sdepth_json(r.decomposition.sdepth());
    j["exact"] = false;
    j["method"] = "splitting";
  }
  j["mode"] = to_string(c.mode);
  j["ideal"] = ideal_to_json(ideal);
  emit(c, j, out);
  return code;
}

int cmd_decompose(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const MonomialIdeal ideal = load_ideal(c, err);
  const auto r = decompose(ideal, c.mode, hvz_limits(c));
  int code = kExitOk;
  json j = verified_certificate_json(r.decomposition, code);
  j["sdepth"] = sdepth_json(r.decomposition.sdepth());
  json steps = json::array();
  for (const auto& s : r.steps) {
    steps.push_back({{"level", s.level},
                     {"ideal", s.ideal.to_string()},
                     {"heavy", to_json(s.heavy)},
                     {"left_sdepth", sdepth_json(s.left_sdepth)},
                     {"left_exact", s.left_exact}});
  }
  j["steps"] = steps;
  emit(c, j, out);
  return code;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream&) {
  json parsed;
  try {
    parsed = json::parse(read_input(c));
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("certificate is not valid JSON: ") + e.what());
  }
  std::optional<StanleyDecomposition> cert;
  try {
    cert = certificate_from_json(parsed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const StanleyDecomposition& d = *cert;
  const VerifyResult v = verify(d, 0, c.max_box * 20);
  json j{{"ok", v.ok}, {"mode", to_string(d.mode)}, {"spaces", d.spaces.size()}};
  if (v.ok) {
    j["sdepth"] = sdepth_json(v.sdepth);
  } else {
    j["message"] = v.message;
  }
  emit(c, j, out);
  return v.ok ? kExitOk : kExitViolation;
}

int cmd_check(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const MonomialIdeal ideal = load_ideal(c, err);
  const ConjectureReport r = check_conjecture(ideal, check_options(c));
  emit(c, to_json(r, c.certificates), out);
  return r.verdict_quotient == Verdict::violated || r.verdict_ideal == Verdict::violated
             ? kExitViolation
             : kExitOk;
}

struct SweepTally {
  std::map<std::string, std::map<std::string, std::size_t>> verdicts;
  std::size_t instances = 0;
  std::size_t aci = 0;
  std::size_t aci_m_is_s_plus_1 = 0;
  std::size_t construction_quotient_checked = 0, construction_quotient_failed = 0;
  std::size_t construction_ideal_checked = 0, construction_ideal_failed = 0;
  std::size_t s_below_k = 0;
  std::size_t char2_disagreements = 0;
};

// Builds a construction-vs-bound record; returns false on a failed bound or certificate.
bool construction_check(const MonomialIdeal& ideal, ModuleMode mode, std::size_t required,
                   const HvzLimits& limits, json& record) {
  const auto r = decompose(ideal, mode, limits);
  const VerifyResult v = verify(r.decomposition);
  const bool ok = v.ok && v.sdepth != kInfiniteSdepth && v.sdepth >= required;
  record = {{"sdepth", sdepth_json(r.decomposition.sdepth())},
            {"required", required},
            {"verified", v.ok},
            {"ok", ok}};
  return ok;
}

int cmd_sweep(const RunConfig& c, std::ostream& out, std::ostream&) {
  InstanceSpec spec;
  spec.n = c.n;
  spec.max_m = c.max_m;
  spec.max_exp = c.max_exp;
  spec.count = c.count;
  spec.seed = c.seed;
  spec.filter = c.filter;
  InstanceGenerator gen(spec);
  const CheckOptions options = check_options(c);
  SweepTally t;
  bool failure = false;
  std::size_t index = 0;
  while (auto next = gen.next()) {
    const MonomialIdeal& ideal = *next;
    const ConjectureReport r = check_conjecture(ideal, options);
    json line = to_json(r, c.certificates);
    line["index"] = index++;
    line["generators"] = ideal.to_string();
    ++t.instances;
    ++t.verdicts["quotient"][to_string(r.verdict_quotient)];
    ++t.verdicts["ideal"][to_string(r.verdict_ideal)];
    if (r.verdict_quotient == Verdict::violated || r.verdict_ideal == Verdict::violated)
      failure = true;
    if (r.hypothesis) {
      const auto& h = *r.hypothesis;
      const std::size_t n = ideal.num_vars();
      if (h.s < h.k) {
        ++t.s_below_k;
        failure = true;
      }
      if (h.aci) {
        ++t.aci;
        if (h.m == h.s + 1) ++t.aci_m_is_s_plus_1;
      }
      json tq = nullptr, ti = nullptr;
      try {
        if (h.quotient_bound_ok.value_or(false)) {
          ++t.construction_quotient_checked;
          if (!construction_check(ideal, ModuleMode::quotient, n - h.s, options.hvz, tq)) {
            ++t.construction_quotient_failed;
            failure = true;
          }
        }
        if (h.ideal_bound_ok.value_or(false)) {
          ++t.construction_ideal_checked;
          if (!construction_check(ideal, ModuleMode::ideal, n - h.s + 1, options.hvz, ti)) {
            ++t.construction_ideal_failed;
            failure = true;
          }
        }
      } catch (const LimitExceeded& e) {
        line["notes"].push_back(std::string("construction skipped (") + e.what() + ")");
      }
      line["construction_quotient"] = tq;
      line["construction_ideal"] = ti;
    }
    if (r.depth && c.field.is_rational()) {
      try {
        const auto d2 = depth_quotient(ideal, Field::prime(2), options.homology);
        line["depth_quotient_char2"] = d2.depth_quotient;
        if (d2.depth_quotient != r.depth->depth_quotient) ++t.char2_disagreements;
      } catch (const LimitExceeded&) {
        line["depth_quotient_char2"] = nullptr;
      }
    }
    emit_line(c, line, out);
  }
  json summary{{"summary", true},
               {"instances", t.instances},
               {"verdicts", t.verdicts},
               {"aci", t.aci},
               {"aci_with_m_equal_s_plus_1", t.aci_m_is_s_plus_1},
               {"construction_quotient_checked", t.construction_quotient_checked},
               {"construction_quotient_failed", t.construction_quotient_failed},
               {"construction_ideal_checked", t.construction_ideal_checked},
               {"construction_ideal_failed", t.construction_ideal_failed},
               {"s_below_k", t.s_below_k},
               {"char0_char2_depth_disagreements", t.char2_disagreements},
               {"config",
                {{"n", c.n},
                 {"max_m", c.max_m},
                 {"max_exp", c.max_exp},
                 {"count", c.count},
                 {"seed", c.seed},
                 {"filter", to_string(c.filter)},
                 {"field", c.field.to_string()}}}};
  emit_line(c, summary, out);
  return failure ? kExitViolation : kExitOk;
}

// The two worked instances with their known values.
int cmd_example(const RunConfig& c, std::ostream& out, std::ostream&) {
  const std::string& name = c.example_name;
  json j;
  bool match = true;
  if (name == "embedded-prime" || name == "1.6") {
    const MonomialIdeal ideal = parse_ideal("n = 4\nx1^3\nx1*x2\nx2*x3\nx3*x4\nx4^2").ideal;
    const AssReport ass = associated_primes(ideal);
    const HeavyVariable h = heavy_variable(ideal);
    const json expected_primes = json::array({{1, 2, 4}, {1, 2, 3, 4}, {1, 3, 4}});
    j = {{"ideal", ideal.to_string()},
         {"ass", to_json(ass)["primes"]},
         {"k", ass.k},
         {"m", ideal.num_generators()},
         {"ceil_m_over_k", h.bound},
         {"heavy_variable", to_json(h)},
         {"primary_decomposition", to_json(primary_decomposition(ideal))},
         {"expected",
          {{"ass", expected_primes}, {"k", 4}, {"m", 5}, {"ceil_m_over_k", 2}, {"t", 2}}}};
    std::vector<MonomialPrime> want_primes;
    for (const auto& vars : expected_primes) {
      MonomialPrime q;
      for (const auto& v : vars) q.vars.push_back(v.get<VarIndex>() - 1);
      want_primes.push_back(q);
    }
    std::vector<std::string> got, want;
    for (const auto& q : ass.primes) got.push_back(q.to_string());
    for (const auto& q : want_primes) want.push_back(q.to_string());
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    // Primary components written out in the worked instance.
    const std::vector<std::string> want_components = {
        "n = 4\nx1^3\nx2\nx4", "n = 4\nx1^3\nx2\nx3\nx4^2", "n = 4\nx1\nx3\nx4^2"};
    bool components_ok = true;
    const auto primary = primary_decomposition(ideal);
    for (const auto& text : want_components) {
      const MonomialIdeal q = parse_ideal(text).ideal;
      bool found = false;
      for (const auto& pc : primary) found = found || pc.ideal == q;
      components_ok = components_ok && found;
    }
    components_ok = components_ok && primary.size() == want_components.size();
    j["primary_decomposition_matches"] = components_ok;
    match = got == want && components_ok && ass.k == 4 && ideal.num_generators() == 5 &&
            h.bound == 2 && h.count == 2;
  } else if (name == "veronese" || name == "1.10") {
    const MonomialIdeal ideal =
        parse_ideal("n = 4\nx1*x2\nx1*x3\nx1*x4\nx2*x3\nx2*x4\nx3*x4").ideal;
    const MonomialIdeal col = colon(ideal, Monomial::variable(4, 0));
    const MonomialIdeal left = restriction(ideal, 3);
    const auto sq = exact_sdepth(left, ModuleMode::quotient);
    const auto si = exact_sdepth(left, ModuleMode::ideal);
    const DepthReport depth = depth_quotient(ideal);
    const auto dq = decompose_quotient(ideal).decomposition;
    const auto di = decompose_ideal(ideal).decomposition;
    const VerifyResult vq = verify(dq), vi = verify(di);
    j = {{"ideal", ideal.to_string()},
         {"colon_x1", col.to_string()},
         {"restriction", left.to_string()},
         {"sdepth_restriction_quotient", sdepth_json(sq.value)},
         {"sdepth_restriction_ideal", sdepth_json(si.value)},
         {"depth_quotient", depth.depth_quotient},
         {"constructed_sdepth_quotient", sdepth_json(dq.sdepth())},
         {"constructed_sdepth_ideal", sdepth_json(di.sdepth())},
         {"constructed_verified", vq.ok && vi.ok},
         {"expected",
          {{"colon_x1", "(x3, x2, x1)"},
           {"restriction", "(x2*x3, x1*x3, x1*x2)"},
           {"sdepth_restriction_quotient", 1},
           {"sdepth_restriction_ideal", 2},
           {"depth_quotient", 1},
           {"constructed_sdepth_quotient_at_least", 1},
           {"constructed_sdepth_ideal_at_least", 2}}}};
    const MonomialIdeal want_colon = parse_ideal("n = 4\nx2\nx3\nx4").ideal;
    const MonomialIdeal want_left = parse_ideal("n = 3\nx1*x2\nx1*x3\nx2*x3").ideal;
    j["expected"]["colon_x1"] = want_colon.to_string();
    j["expected"]["restriction"] = want_left.to_string();
    match = col == want_colon && left == want_left && sq.value == 1 && si.value == 2 &&
            depth.depth_quotient == 1 && vq.ok && vi.ok && dq.sdepth() >= 1 && di.sdepth() >= 2;
  } else {
    throw UsageError("unknown example '" + name + "' (expected embedded-prime or veronese)");
  }
  j["matches_expected"] = match;
  emit(c, j, out);
  return match ? kExitOk : kExitViolation;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const std::string& cmd = config.command;
    if (cmd == "ass") return cmd_ass(config, out, err);
    if (cmd == "depth") return cmd_depth(config, out, err);
    if (cmd == "sdepth") return cmd_sdepth(config, out, err);
    if (cmd == "decompose") return cmd_decompose(config, out, err);
    if (cmd == "verify") return cmd_verify(config, out, err);
    if (cmd == "check") return cmd_check(config, out, err);
    if (cmd == "sweep") return cmd_sweep(config, out, err);
    if (cmd == "example") return cmd_example(config, out, err);
    err << "error: unknown command '" << cmd << "'\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const LimitExceeded& e) {
    err << "limit exceeded [" << e.cap() << "]: " << e.what() << "\n";
  } catch (const DegenerateIdealError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Monomial ideal invariants and verified Stanley decompositions", "monodepth"};
  app.require_subcommand(1);

  std::string mode = "quotient", field = "q", format = "text", filter = "all";
  auto add_common = [&](CLI::App* sub, bool takes_ideal) {
    if (takes_ideal) {
      sub->add_option("input", config.input, "Ideal file (text or JSON), '-' for stdin");
      sub->add_option("--ideal", config.inline_ideal, "Inline ideal, e.g. \"x1^2, x1*x2\"");
    }
    sub->add_option("--format", format, "text|json")->envname("MONODEPTH_FORMAT");
    sub->add_option("--max-box", config.max_box, "Cap on characteristic poset points")
        ->envname("MONODEPTH_MAX_BOX");
    sub->add_option("--timeout-ms", config.timeout_ms, "Exact search time limit (0 = none)")
        ->envname("MONODEPTH_TIMEOUT_MS");
    sub->add_option("--max-exponent", config.max_exponent, "Cap on input exponents")
        ->envname("MONODEPTH_MAX_EXPONENT");
    sub->add_option("--max-polarized-vars", config.max_polarized_vars,
                    "Cap on variables after polarization")
        ->envname("MONODEPTH_MAX_POLARIZED_VARS");
  };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", mode, "quotient|ideal")->envname("MONODEPTH_MODE");
  };
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--field", field, "q|fp:<p>")->envname("MONODEPTH_FIELD");
  };

  auto* ass = app.add_subcommand("ass", "Associated primes, big height and height");
  add_common(ass, true);
  auto* depth = app.add_subcommand("depth", "depth(S/I) via Hochster's formula");
  add_common(depth, true);
  add_field(depth);
  depth->add_flag("--betti", config.betti, "Include the multigraded Betti table");
  auto* sdepth = app.add_subcommand("sdepth", "Stanley depth of S/I or I");
  add_common(sdepth, true);
  add_mode(sdepth);
  sdepth->add_flag("--exact", config.exact, "Exact value by interval partitions");
  auto* decompose_cmd = app.add_subcommand("decompose", "Constructed Stanley decomposition");
  add_common(decompose_cmd, true);
  add_mode(decompose_cmd);
  auto* verify_cmd = app.add_subcommand("verify", "Verify a decomposition certificate");
  add_common(verify_cmd, false);
  verify_cmd->add_option("certificate", config.input, "Certificate JSON file, '-' for stdin")
      ->required();
  auto* check = app.add_subcommand("check", "depth vs sdepth for S/I and I");
  add_common(check, true);
  add_field(check);
  check->add_flag("--certificates", config.certificates, "Embed certificates in the report");
  auto* sweep = app.add_subcommand("sweep", "Check many seeded random ideals");
  add_common(sweep, false);
  add_field(sweep);
  sweep->add_option("--n", config.n, "Number of variables");
  sweep->add_option("--max-m", config.max_m, "Maximum number of sampled generators");
  sweep->add_option("--max-exp", config.max_exp, "Maximum exponent");
  sweep->add_option("--count", config.count, "Number of instances");
  sweep->add_option("--seed", config.seed, "Random seed")->envname("MONODEPTH_SEED");
  sweep->add_option("--filter", filter, "all|aci");
  sweep->add_flag("--certificates", config.certificates, "Embed certificates in each line");
  auto* example = app.add_subcommand("example", "Reproduce a worked instance");
  add_common(example, false);
  example->add_option("--name", config.example_name, "embedded-prime|veronese")->required();

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
    config.mode = parse_mode(mode);
    config.field = Field::parse(field);
    config.filter = parse_filter(filter);
    if (format == "text") {
      config.format = OutputFormat::text;
    } else if (format == "json") {
      config.format = OutputFormat::json;
    } else {
      throw std::invalid_argument("unknown format '" + format + "' (expected text or json)");
    }
    if (config.max_box == 0 || config.max_polarized_vars == 0)
      throw std::invalid_argument("caps must be positive");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  config.command = app.get_subcommands().front()->get_name();
  return run(config, out, err);
}

}  // namespace monodepth
