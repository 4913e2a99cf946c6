#include "qtriad/report.hpp"

#include <cstdio>

namespace qtriad {

bool Report::all_pass() const {
  for (const auto& v : verdicts)
    if (!v.pass) return false;
  return true;
}

Json witness_json(const Violation& v) {
  return Json{{"kind", v.kind}, {"tag", v.tag}, {"elements", v.witnesses}, {"detail", v.detail}};
}

namespace {

std::string duration(double s) {
  char buf[32];
  if (s < 1) std::snprintf(buf, sizeof buf, "%.1f ms", s * 1000);
  else std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

}  // namespace

std::string render_text(const Report& r, bool quiet) {
  std::string out;
  for (const auto& v : r.verdicts) {
    if (quiet && v.pass) continue;
    out += (v.pass ? "PASS  " : "FAIL  ") + v.check + "  (" + duration(v.seconds) + ")\n";
    if (!quiet && !v.info.empty())
      for (const auto& [k, x] : v.info.items()) out += "      " + k + " = " + x.dump() + "\n";
    for (const auto& w : v.witnesses) out += "      " + w.str() + "\n";
  }
  if (!r.error.empty()) out += "error (" + r.error_kind + "): " + r.error + "\n";
  if (!quiet) {
    std::size_t failed = 0;
    for (const auto& v : r.verdicts) failed += !v.pass;
    out += r.command + ": " + std::to_string(r.verdicts.size() - failed) + " passed, " +
           std::to_string(failed) + " failed, exit " + std::to_string(r.exit_code) + "\n";
  }
  return out;
}

std::string render_machine(const Report& r) {
  Json j;
  j["format"] = "qtriad-report";
  j["version"] = 1;
  j["command"] = r.command;
  j["exit_code"] = r.exit_code;
  Json vs = Json::array();
  for (const auto& v : r.verdicts) {
    Json w = Json::array();
    for (const auto& x : v.witnesses) w.push_back(witness_json(x));
    vs.push_back(Json{{"check", v.check}, {"pass", v.pass}, {"witnesses", w}, {"info", v.info}});
  }
  j["verdicts"] = vs;
  if (!r.structures.empty()) {
    Json s = Json::object();
    for (const auto& [name, d] : r.structures) s[name] = Json::parse(serialize(d));
    j["structures"] = s;
  }
  if (!r.error.empty()) j["error"] = Json{{"kind", r.error_kind}, {"message", r.error}};
  return canonical_json(j);
}

}  // namespace qtriad
