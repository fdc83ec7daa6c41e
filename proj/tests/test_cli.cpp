#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "monodepth/cli.hpp"
#include "monodepth/io.hpp"

using namespace monodepth;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("monodepth_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

const char* kEmbedded = "x1^3, x1*x2, x2*x3, x3*x4, x4^2";

}  // namespace

TEST_CASE("worked instances") {
  const Run a = run({"example", "--name", "1.6", "--format", "json"});
  CHECK(a.code == kExitOk);
  const json j = json::parse(a.out);
  CHECK(j["matches_expected"] == true);
  CHECK(j["k"] == 4);
  CHECK(j["ceil_m_over_k"] == 2);
  CHECK(j["heavy_variable"]["t"] == 2);
  const Run b = run({"example", "--name", "veronese"});
  CHECK(b.code == kExitOk);
  CHECK(b.out.find("matches_expected: true") != std::string::npos);
  CHECK(run({"example", "--name", "embedded-prime"}).out == run({"example", "--name", "1.6"}).out);
  CHECK(run({"example", "--name", "nonesuch"}).code == kExitUsage);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"ass"}).code == kExitUsage);
  CHECK(run({"ass", "--ideal", "x1*"}).code == kExitUsage);
  CHECK(run({"depth", "--ideal", "x1", "--field", "fp:6"}).code == kExitUsage);
  CHECK(run({"sdepth", "--ideal", "x1", "--mode", "module"}).code == kExitUsage);
  CHECK(run({"ass", "--ideal", "x1", "--format", "yaml"}).code == kExitUsage);
  CHECK(run({"ass", "/nonexistent/path"}).code == kExitUsage);
  CHECK(run({"sdepth", "--exact", "--ideal", "x1^9*x2^9*x3^9", "--max-box", "50"}).code == kExitUsage);
  CHECK(run({"ass", "--ideal", "x1", "--max-box", "0"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("subcommands") {
  const Run ass = run({"ass", "--ideal", kEmbedded, "--format", "json"});
  REQUIRE(ass.code == kExitOk);
  CHECK(json::parse(ass.out)["k"] == 4);
  const Run depth = run({"depth", "--ideal", kEmbedded, "--format", "json", "--betti"});
  REQUIRE(depth.code == kExitOk);
  CHECK(json::parse(depth.out)["depth_quotient"] == 0);
  const Run sd = run({"sdepth", "--ideal", kEmbedded, "--exact", "--mode", "ideal", "--format", "json"});
  REQUIRE(sd.code == kExitOk);
  CHECK(json::parse(sd.out)["verified"] == true);
  const Run check = run({"check", "--ideal", kEmbedded, "--format", "json", "--certificates"});
  REQUIRE(check.code == kExitOk);
  const json c = json::parse(check.out);
  CHECK(c["verdict_quotient"] == "holds");
  CHECK(c["verdict_ideal"] == "holds");
  const Run nonminimal = run({"ass", "--ideal", "x1, x1*x2"});
  CHECK(nonminimal.code == kExitOk);
  CHECK(nonminimal.err.find("warning") != std::string::npos);
}

TEST_CASE("decompose, verify, and tampering") {
  const Run d = run({"decompose", "--ideal", kEmbedded, "--mode", "ideal", "--format", "json"});
  REQUIRE(d.code == kExitOk);
  const json cert = json::parse(d.out)["certificate"];
  const std::string good = temp_file("good.json", cert.dump());
  CHECK(run({"verify", good}).code == kExitOk);

  json tampered = cert;
  tampered["spaces"].erase(tampered["spaces"].begin());
  const std::string bad = temp_file("bad.json", tampered.dump());
  const Run v = run({"verify", bad, "--format", "json"});
  CHECK(v.code == kExitViolation);
  CHECK(json::parse(v.out)["ok"] == false);

  json overlap = cert;
  overlap["spaces"].push_back(overlap["spaces"][0]);
  CHECK(run({"verify", temp_file("overlap.json", overlap.dump())}).code == kExitViolation);
  CHECK(run({"verify", temp_file("garbage.json", "{not json")}).code == kExitUsage);
}

TEST_CASE("sweep output is deterministic") {
  const std::vector<std::string> args = {"sweep", "--n", "4", "--max-m", "5", "--max-exp", "2",
                                         "--count", "200", "--seed", "7", "--format", "json"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  std::istringstream lines(a.out);
  std::string line;
  std::size_t count = 0;
  json last;
  while (std::getline(lines, line)) {
    last = json::parse(line);
    ++count;
  }
  CHECK(count == 201);
  CHECK(last["summary"] == true);
  CHECK(last["instances"] == 200);
  CHECK(last["verdicts"]["quotient"].value("violated", 0) == 0);
}

TEST_CASE("environment overrides") {
  ::setenv("MONODEPTH_FORMAT", "json", 1);
  const Run r = run({"ass", "--ideal", "x1*x2"});
  ::unsetenv("MONODEPTH_FORMAT");
  CHECK(r.code == kExitOk);
  CHECK(json::accept(r.out));
  // Flags win over the environment.
  ::setenv("MONODEPTH_FORMAT", "json", 1);
  const Run t = run({"ass", "--ideal", "x1*x2", "--format", "text"});
  ::unsetenv("MONODEPTH_FORMAT");
  CHECK(t.out.find("k: 1") != std::string::npos);
}
