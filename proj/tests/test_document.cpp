#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "qtriad/document.hpp"

using namespace qtriad;
using namespace qtriad::test;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

DocumentError parse_error(const std::string& text) {
  try {
    parse_document(text);
  } catch (const DocumentError& e) {
    return e;
  }
  FAIL("document parsed: " << text);
  return DocumentError("", "", "");
}

DocumentError load_error(const std::string& text) {
  try {
    load_document(parse_document(text));
  } catch (const DocumentError& e) {
    return e;
  }
  FAIL("document loaded: " << text);
  return DocumentError("", "", "");
}

const std::string two_chain = R"({"version": 1, "kind": "lattice", "payload": {"order": [[1, 1], [0, 1]]}})";

}  // namespace

TEST_SUITE("document") {

TEST_CASE("golden files round-trip byte for byte") {
  std::size_t seen = 0;
  for (const auto& e : fs::directory_iterator(QTRIAD_DATA_DIR "/golden")) {
    if (e.path().extension() != ".json") continue;
    CAPTURE(e.path().string());
    const auto text = slurp(e.path());
    const auto d = parse_document(text);
    CHECK(serialize(d) == text);
    CHECK(parse_document(serialize(d)) == d);
    CHECK(load_document(d, wide_limits()).violations.empty());
    ++seen;
  }
  CHECK(seen >= 10);
}

TEST_CASE("builders round-trip through loading") {
  auto t = orthomodular_triad(ortho_mo(2));
  auto d = triad_document(*t);
  auto loaded = load_document(parse_document(serialize(d)));
  REQUIRE(loaded.triad);
  CHECK(loaded.triad->pairing.table() == t->pairing.table());
  CHECK(loaded.triad->L.action.table() == t->L.action.table());
  CHECK(loaded.triad->R.action.table() == t->R.action.table());
  CHECK(loaded.triad->T->mult.table() == t->T->mult.table());

  auto q0 = build_q0(t);
  auto sd = load_document(parse_document(serialize(solution_document(*t, q0.solution))));
  REQUIRE(sd.solution);
  CHECK(same_solution(*sd.solution, q0.solution));

  auto q = endo_quantale(chain(3)).quantale;
  auto qd = load_document(parse_document(serialize(quantale_document(*q))));
  REQUIRE(qd.quantale);
  CHECK(qd.quantale->mult.table() == q->mult.table());
  CHECK(qd.quantale->unit == q->unit);
}

TEST_CASE("canonical form") {
  auto d = parse_document(R"({"payload":{"order":[[1,1],[0,1]]},"version":1,"kind":"lattice"})");
  CHECK(serialize(d) ==
        "{\n"
        "  \"kind\": \"lattice\",\n"
        "  \"payload\": {\n"
        "    \"order\": [\n"
        "      [1, 1],\n"
        "      [0, 1]\n"
        "    ]\n"
        "  },\n"
        "  \"version\": 1\n"
        "}\n");
}

TEST_CASE("syntax errors carry line and column") {
  auto e = parse_error("{\n  \"version\": 1,\n  \"kind\": \"lattice\" \"payload\": {}\n}");
  CHECK(e.kind() == "Syntax");
  CHECK(e.where().rfind("3:", 0) == 0);
}

TEST_CASE("schema errors carry a path") {
  CHECK(parse_error(R"({"version": 2, "kind": "lattice", "payload": {}})").where() == "/version");
  CHECK(parse_error(R"({"version": 1, "payload": {}})").kind() == "Schema");
  CHECK(parse_error(R"({"version": 1, "kind": "lattice", "payload": {}, "extra": 0})").kind() == "Schema");
  auto e = load_error(R"({"version": 1, "kind": "lattice", "payload": {"order": [[1, 1], [0]]}})");
  CHECK(e.kind() == "Schema");
  CHECK(e.where() == "/payload/order/1");
  CHECK(load_error(R"({"version": 1, "kind": "bogus", "payload": {}})").where() == "/kind");
}

TEST_CASE("index out of range") {
  auto e = load_error(
      R"({"version": 1, "kind": "quantale", "payload": {"order": [[1, 1], [0, 1]], "mult": [[0, 0], [0, 5]]}})");
  CHECK(e.kind() == "IndexOutOfRange");
  CHECK(e.where() == "/payload/mult/1/1");
}

TEST_CASE("labels are checked against carriers") {
  CHECK_NOTHROW(parse_document(
      R"({"version": 1, "kind": "lattice", "labels": {"S": ["bot", "top"]}, "payload": {"order": [[1, 1], [0, 1]]}})"));
  CHECK(parse_error(R"({"version": 1, "kind": "lattice", "labels": {"S": ["x", "x"]}, "payload": {"order": [[1, 1], [0, 1]]}})")
            .kind() == "Schema");
  CHECK(parse_error(R"({"version": 1, "kind": "lattice", "labels": {"S": ["x"]}, "payload": {"order": [[1, 1], [0, 1]]}})")
            .kind() == "Schema");
  CHECK(parse_error(R"({"version": 1, "kind": "lattice", "labels": {"Q": ["a", "b"]}, "payload": {"order": [[1, 1], [0, 1]]}})")
            .kind() == "Schema");
}

TEST_CASE("law failures are reported, not thrown") {
  auto l = load_document(parse_document(two_chain));
  CHECK(l.violations.empty());
  CHECK(l.lattice);

  auto bad = load_document(parse_document(
      R"({"version": 1, "kind": "quantale", "payload": {"order": [[1, 1], [0, 1]], "mult": [[0, 1], [0, 1]]}})"));
  CHECK_FALSE(bad.quantale);
  REQUIRE_FALSE(bad.violations.empty());
  CHECK(bad.violations[0].kind == "ZeroAnnihilation");
  CHECK(bad.violations[0].tag.rfind("Q", 0) == 0);

  auto anti = load_document(parse_document(R"({"version": 1, "kind": "lattice", "payload": {"order": [[1, 0], [0, 1]]}})"));
  CHECK_FALSE(anti.lattice);
  CHECK(has_kind(anti.violations, "MissingJoin"));
}

TEST_CASE("file io") {
  const auto path = fs::temp_directory_path() / "qtriad-doc-test.json";
  auto d = lattice_document(*diamond());
  write_document(path.string(), d);
  CHECK(read_document(path.string()) == d);
  CHECK(slurp(path) == serialize(d));
  fs::remove(path);
  CHECK_THROWS_AS(read_document((fs::temp_directory_path() / "qtriad-missing.json").string()), InputError);
}

}  // TEST_SUITE
