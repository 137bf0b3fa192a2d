#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bsomega/json_io.hpp"

namespace bsomega {

// A replayable counterexample: the elements involved, the property
// violated, and the recorded intermediate comparisons, all exact.
struct Witness {
  std::string property;
  Json elements;  // name -> full element JSON
  Json details;   // recorded verdicts / values at each step

  Json to_json() const {
    return {{"property", property},
            {"elements", elements},
            {"details", details}};
  }
  static Witness from_json(const Json& j) {
    return {j.at("property").get<std::string>(), j.at("elements"),
            j.at("details")};
  }
};

struct AuditCheck {
  enum class Status { Pass, Fail, Counterexample };

  std::string name;
  Status status = Status::Pass;
  std::optional<Witness> witness;
  Json detail;  // optional pass-side metrics (counts, bounds)

  static const char* status_string(Status s) {
    switch (s) {
      case Status::Pass: return "pass";
      case Status::Fail: return "fail";
      default: return "counterexample";
    }
  }
};

struct AuditReport {
  std::string suite;
  std::vector<AuditCheck> checks;

  Json to_json() const;
  const AuditCheck* find(const std::string& name) const;
  bool all_pass() const;
};

// Re-runs the comparisons a witness records and reports whether the
// violation reproduces exactly.
bool replay_witness(const Witness& w);

}  // namespace bsomega
