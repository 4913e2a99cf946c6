#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "qtriad/document.hpp"

namespace qtriad {

struct Verdict {
  std::string check;
  bool pass = false;
  Violations witnesses;  // non-empty when the check fails
  Json info = Json::object();
  double seconds = 0;
};

struct Report {
  std::string command;
  std::vector<Verdict> verdicts;
  std::vector<std::pair<std::string, Document>> structures;
  std::string error_kind;  // set for input errors and exceeded guards
  std::string error;
  int exit_code = 0;

  /// Runs `body` and records a verdict with its duration. A failing verdict
  /// with no witnesses gets one naming the check.
  template <class F>
  Verdict& run(const std::string& check, F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    v.check = check;
    body(v);
    v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!v.pass && v.witnesses.empty()) v.witnesses.push_back({"CheckFailed", check, {}, ""});
    verdicts.push_back(std::move(v));
    return verdicts.back();
  }

  bool all_pass() const;
};

/// Human-readable; with `quiet` only failures and errors are printed.
std::string render_text(const Report& r, bool quiet);
/// Canonical JSON, documented in docs/report-format.md. Durations are left
/// out so that reports are byte-stable across runs.
std::string render_machine(const Report& r);
Json witness_json(const Violation& v);

}  // namespace qtriad
