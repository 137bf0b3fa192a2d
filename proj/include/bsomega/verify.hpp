#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bsomega/audits.hpp"
#include "bsomega/realization.hpp"

namespace bsomega {

struct RunConfig {
  std::uint64_t seed = 1;
  int samples = 10000;
  int radius = 5;
  int n_range = 16;
  ShiftConvention shift = ShiftConvention::RelationFixed;
  long precision_bits = 64;

  // Fixed parameters of the shipped suites.
  static constexpr int kGBallRadius = 8;
  static constexpr int kCofinalityNMax = 1 << 20;
  static constexpr int kRealizeRadius = 4;
  static constexpr int kSolvabilitySamples = 1000;
  static constexpr int kSolvabilityPoolRadius = 3;

  Json to_json() const;
};

// Per-check outcome against the expected-status table.
struct CheckOutcome {
  std::string suite;
  std::string check;
  AuditCheck::Status status;
  AuditCheck::Status expected;
  bool witness_replayed = true;  // vacuously true without a witness
  bool ok() const {
    return status == expected && witness_replayed;
  }
};

struct VerifyOutcome {
  RunConfig config;
  std::vector<AuditReport> reports;
  std::vector<CheckOutcome> outcomes;

  bool all_expected() const;
  Json to_json() const;  // {"config", "suites"}; deterministic
};

// Suite names: relations, orders, lemma, conditions, derived, freeness;
// "all" expands to every suite in that order.
std::vector<std::string> expand_suites(const std::vector<std::string>& names);

// Expected status of a check; counterexample-expected entries carry
// derived counterexamples that the audits re-derive at run time.
AuditCheck::Status expected_status(const std::string& report_suite,
                                   const std::string& check,
                                   const RunConfig& cfg);

VerifyOutcome run_suites(const std::vector<std::string>& suites,
                         const RunConfig& cfg);

}  // namespace bsomega
