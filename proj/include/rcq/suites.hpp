#pragma once

// The verification suites behind `rcq verify` and the acceptance binary.
// A suite is a list of named cases built deterministically from the
// configuration; running a case is independent of every other case, which is
// what makes a single failing case replayable.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rcq/report.hpp"

namespace rcq {

struct SuiteConfig {
  std::optional<int> order;       // hbar / bracket order; each suite has its own default
  std::optional<int> prec;        // q-precision
  int germ_order = kDefaultGermOrder;
  std::uint64_t seed = 7;
  std::optional<int> samples;     // random cases per configuration
  std::optional<LaurentPoly2> mu;  // restrict connection-dependent suites to one mu

  Json to_json() const;
  static SuiteConfig from_json(const Json& j);
};

struct CaseSpec {
  std::string id;
  std::string claim;
  Json inputs;
  std::function<CaseOutcome()> run;
};

struct Suite {
  std::string name;
  int criterion = 0;
  std::string title;
  std::string tolerance;
  Json config = Json::object();  // resolved orders, precisions, seed
  Json notes = Json::object();
  std::vector<CaseSpec> cases;
  /// Evaluated after the cases; findings that are reported but never fail the suite.
  std::function<Json()> diagnostics;
};

/// hopf, module, moyal, moment, invariance, curvature, fedosov, rc, modular, poisson.
const std::vector<std::string>& suite_names();
/// Accepts the names above, a criterion number, or an alias such as prop61.
std::string canonical_suite(const std::string& name);

Suite build_suite(const std::string& name, const SuiteConfig& cfg);

/// Run every case (or only the one with the given id); exceptions inside a
/// case become a FAIL whose witness carries the message.
VerificationReport run_suite(const Suite& suite, const std::optional<std::string>& only_id = std::nullopt);

}  // namespace rcq
