#pragma once

// Verification reports: one record per checked case, deterministic for a
// given configuration apart from the timing fields.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rcq/json_io.hpp"

namespace rcq {

inline constexpr int kReportSchema = 1;

/// 64-bit FNV-1a of the text, as 16 hex digits.
std::string fnv1a_digest(const std::string& text);

struct CaseOutcome {
  bool pass = false;
  Json witness;  // lhs, rhs and anything else needed to see the failure

  static CaseOutcome ok() { return {true, Json()}; }
  static CaseOutcome fail(Json witness) { return {false, std::move(witness)}; }
  template <class T>
  static CaseOutcome compare(const T& lhs, const T& rhs) {
    if (lhs == rhs) return ok();
    Json w = Json::object();
    w["lhs"] = to_json(lhs);
    w["rhs"] = to_json(rhs);
    return fail(std::move(w));
  }
};

struct CaseRecord {
  std::string id;
  std::string claim;
  Json inputs;
  std::string digest;
  bool pass = false;
  Json witness;
  double seconds = 0;
};

struct VerificationReport {
  std::string suite;
  Json config = Json::object();
  Json notes = Json::object();
  std::vector<CaseRecord> cases;
  double seconds = 0;

  bool passed() const;
  int failures() const;
  Json to_json(bool with_timing = true) const;
  /// Human-readable summary; lists every failing case with its witness.
  std::string to_text(bool verbose = false) const;
};

/// Write through a temporary file and rename, so readers never see a partial report.
void write_atomically(const std::string& path, const std::string& content);

}  // namespace rcq
