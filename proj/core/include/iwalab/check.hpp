#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

namespace iwalab {

enum class Status { Pass, Fail, Indeterminate };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Indeterminate: return "indeterminate";
  }
  return "?";
}

/// Outcome of one verification check. `data` holds measured values and
/// witnesses; it must not contain timings so that reports stay reproducible.
struct CheckResult {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
  nlohmann::json data = nlohmann::json::object();

  bool passed() const { return status == Status::Pass; }
  /// Downgrades to Fail and appends a witness line.
  void fail(const std::string& witness) {
    status = Status::Fail;
    data["failures"].push_back(witness);
  }
};

}  // namespace iwalab
