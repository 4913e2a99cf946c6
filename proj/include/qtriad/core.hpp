#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace qtriad {

/// Dense element index into a finite carrier, 0..n-1.
using Elem = std::uint32_t;

/// Set of join-irreducible positions (or any small index set).
using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Thrown when an enumeration or construction would exceed its configured bound.
class SearchSpaceExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a construction that is guaranteed correct by theory fails its
/// own verification. Always a bug or a falsified claim, never bad input.
class DefectError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Thrown on malformed input to library entry points (wrong table shape,
/// index out of range).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Violation {
  std::string kind;                // e.g. "Associativity", "LawViolation"
  std::string tag;                 // law tag or side, may be empty
  std::vector<Elem> witnesses;     // first witness in scan order
  std::string detail;

  std::string str() const {
    std::ostringstream os;
    os << kind;
    if (!tag.empty()) os << "(" << tag << ")";
    if (!witnesses.empty()) {
      os << " at [";
      for (std::size_t i = 0; i < witnesses.size(); ++i) os << (i ? "," : "") << witnesses[i];
      os << "]";
    }
    if (!detail.empty()) os << ": " << detail;
    return os.str();
  }
};

using Violations = std::vector<Violation>;

inline void append(Violations& into, Violations more) {
  for (auto& v : more) into.push_back(std::move(v));
}

/// Either a validated value or the list of violations that prevented it.
template <class T>
class Validated {
 public:
  Validated(T value) : data_(std::move(value)) {}
  Validated(Violations v) : data_(std::move(v)) {}

  bool ok() const { return std::holds_alternative<T>(data_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!ok()) throw DefectError("Validated::value on invalid result: " + summary());
    return std::get<T>(data_);
  }
  T&& value() && {
    if (!ok()) throw DefectError("Validated::value on invalid result: " + summary());
    return std::get<T>(std::move(data_));
  }
  const Violations& violations() const {
    static const Violations none;
    return ok() ? none : std::get<Violations>(data_);
  }

  std::string summary() const {
    std::string out;
    for (const auto& v : violations()) out += v.str() + "; ";
    return out;
  }

 private:
  std::variant<T, Violations> data_;
};

}  // namespace qtriad
