#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qtriad/cli.hpp"
#include "qtriad/document.hpp"

using namespace qtriad;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "qtriad-cli-test";
  fs::create_directories(dir);
  return dir / name;
}

std::string golden(const std::string& name) { return std::string(QTRIAD_DATA_DIR "/golden/") + name; }

void write(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("generate then verify sol") {
  const auto doc = scratch("t.doc").string();
  CHECK(cli({"generate", "duality", "--size", "2", "--emit", doc}).code == 0);
  auto r = cli({"verify", doc, "--theorem", "sol"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("zero pairing is not strong") {
  auto r = cli({"check", golden("zero-chain3-chain2.triad.json"), "--props", "strong"});
  CHECK(r.code == 1);
  CHECK(r.out.find("NotStrong(L)") != std::string::npos);
}

TEST_CASE("malformed input exits 2") {
  const auto bad = scratch("bad.json");
  write(bad, "{\"version\": 1, \"kind\": ");
  auto r = cli({"validate", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.out.find("Syntax") != std::string::npos);

  write(bad, R"({"version": 1, "kind": "quantale", "payload": {"order": [[1, 1], [0, 1]], "mult": [[0, 0], [0]]}})");
  auto s = cli({"validate", bad.string()});
  CHECK(s.code == 2);
  CHECK(s.out.find("/payload/mult/1") != std::string::npos);

  CHECK(cli({"validate", scratch("missing.json").string()}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"generate", "nonsense"}).code == 2);
}

TEST_CASE("law violations in a document exit 1") {
  const auto bad = scratch("nonassoc.json");
  write(bad, R"({"version": 1, "kind": "quantale", "payload": {"order": [[1, 1], [0, 1]], "mult": [[0, 1], [0, 1]]}})");
  auto r = cli({"validate", bad.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("ZeroAnnihilation") != std::string::npos);
}

TEST_CASE("size guard exits 3") {
  CHECK(cli({"--max-space", "1000", "solve", golden("orthomodular-mo2.triad.json")}).code == 3);
  CHECK(cli({"solve", golden("orthomodular-mo2.triad.json")}).code == 0);
}

TEST_CASE("every verify theorem passes on MO2") {
  for (const auto& th : {"sol", "str", "gir", "central", "girard-consequences"}) {
    CAPTURE(std::string(th));
    CHECK(cli({"verify", golden("orthomodular-mo2.triad.json"), "--theorem", th}).code == 0);
  }
  // Involutions are data: a bare triad document is not enough.
  CHECK(cli({"verify", golden("orthomodular-mo2.triad.json"), "--theorem", "involutive"}).code == 2);
  CHECK(cli({"verify", golden("orthomodular-mo2.involution.json"), "--theorem", "involutive"}).code == 0);
}

TEST_CASE("preconditions: consequences need a strict Girard triad") {
  CHECK(cli({"verify", golden("zero-chain3-chain2.triad.json"), "--theorem", "girard-consequences"}).code == 2);
}

TEST_CASE("check props") {
  auto r = cli({"check", golden("duality-chain2.triad.json")});
  CHECK(r.code == 0);
  CHECK(cli({"check", golden("duality-boolean2.involution.json"), "--props", "involutive"}).code == 0);
  CHECK(cli({"check", golden("zero-chain3-chain2.triad.json"), "--props", "girard"}).code == 1);
}

TEST_CASE("solve emits documents that validate and re-serialize identically") {
  const auto out = scratch("mo2.json").string();
  CHECK(cli({"solve", golden("orthomodular-mo2.triad.json"), "--which", "both", "--emit", out}).code == 0);
  for (const auto& f : {scratch("mo2.q0.json"), scratch("mo2.q1.json")}) {
    REQUIRE(fs::exists(f));
    CHECK(cli({"validate", f.string()}).code == 0);
    auto d = read_document(f.string());
    std::ifstream in(f, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    CHECK(serialize(d) == s.str());
  }
}

TEST_CASE("factorize a solution through Q0 and Q1") {
  CHECK(cli({"factorize", golden("duality-chain2.triad.json"), golden("duality-chain2.q0.json")}).code == 0);
  CHECK(cli({"factorize", golden("duality-chain2.triad.json"), golden("duality-chain2.q1.json")}).code == 0);
  CHECK(cli({"factorize", golden("galois-chain3.triad.json"), golden("duality-chain2.q1.json")}).code == 2);
}

TEST_CASE("machine reports are stable and schema-shaped") {
  const std::vector<std::string> args{"--format", "machine", "verify", golden("orthomodular-mo2.triad.json"),
                                      "--theorem", "gir"};
  auto a = cli(args), b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = Json::parse(a.out);
  CHECK(j["format"] == "qtriad-report");
  CHECK(j["version"] == 1);
  CHECK(j["exit_code"] == 0);
  REQUIRE(j["verdicts"].is_array());
  for (const auto& v : j["verdicts"]) {
    CHECK(v["check"].is_string());
    CHECK(v["pass"].is_boolean());
    CHECK(v["witnesses"].is_array());
  }
  CHECK(canonical_json(j) == a.out);

  auto f = cli({"--format", "machine", "check", golden("zero-chain3-chain2.triad.json"), "--props", "strong"});
  auto jf = Json::parse(f.out);
  CHECK(jf["exit_code"] == 1);
  for (const auto& v : jf["verdicts"])
    if (!v["pass"].get<bool>()) CHECK_FALSE(v["witnesses"].empty());
}

TEST_CASE("machine report golden") {
  auto r = cli({"--format", "machine", "verify", golden("duality-chain2.triad.json"), "--theorem", "sol"});
  std::ifstream in(QTRIAD_DATA_DIR "/reports/verify-sol-duality-chain2.json", std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  CHECK(r.out == s.str());
}

TEST_CASE("quiet prints failures only") {
  auto r = cli({"--quiet", "verify", golden("duality-chain2.triad.json"), "--theorem", "sol"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") == std::string::npos);
}

}  // TEST_SUITE
