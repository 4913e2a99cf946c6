#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "qtriad/solve.hpp"

namespace qtriad {

using Json = nlohmann::json;

/// Syntax(line, col), Schema(path, reason) or IndexOutOfRange(path).
class DocumentError : public InputError {
 public:
  DocumentError(std::string kind, std::string where, const std::string& reason)
      : InputError(kind + " at " + where + ": " + reason),
        kind_(std::move(kind)),
        where_(std::move(where)) {}
  const std::string& kind() const { return kind_; }
  /// "line:col" for syntax errors, a slash path otherwise.
  const std::string& where() const { return where_; }

 private:
  std::string kind_;
  std::string where_;
};

/// version 1; kind is lattice, quantale, module, triad, solution or involution.
/// labels maps carrier names (S, Q, M, T, L, R) to element names.
struct Document {
  int version = 1;
  std::string kind;
  Json labels = Json::object();
  Json payload = Json::object();

  bool operator==(const Document&) const = default;
};

/// Parses and checks shape and index ranges. Laws are not checked here.
Document parse_document(const std::string& text);
/// Canonical form: sorted keys, two-space indent, scalar arrays on one line,
/// one row per line for tables, trailing newline.
std::string serialize(const Document& d);
std::string canonical_json(const Json& j);

Document read_document(const std::string& path);
void write_document(const std::string& path, const Document& d);

Document lattice_document(const SupLattice& s);
Document quantale_document(const Quantale& q);
Document module_document(const ModuleAction& m);
Document triad_document(const Triad& t);
Document solution_document(const Triad& t, const Solution& s);
Document involution_document(const Triad& t, const TriadInvolution& inv);

/// Structures rebuilt from a document. `violations` lists law failures; the
/// pointers are set only for the parts that validated.
struct Loaded {
  std::string kind;
  LatticePtr lattice;
  QuantalePtr quantale;
  std::optional<ModuleAction> module;
  TriadPtr triad;
  std::optional<Solution> solution;
  std::optional<TriadInvolution> involution;
  Violations violations;
};

Loaded load_document(const Document& d, const Limits& limits = {});

}  // namespace qtriad
