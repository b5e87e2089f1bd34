#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "kldecomp/decompose.hpp"

namespace kldecomp {

// One expected report field, kept as a decimal string and parsed at check
// time so the recorded digits are never re-rounded by hand.
struct ExpectedField {
  std::string field;    // "KL_full", "Direct_C_Pk", "I_sums.3", ...
  std::string decimal;  // expected value, full precision
  double tolerance;     // absolute
};

// A bundled end-to-end validation case: a population spec plus the expected
// decomposition outputs.
struct CaseFixture {
  std::string name;
  std::map<std::string, std::uint64_t> counts;
  int draw_count;
  std::vector<ExpectedField> expected;
};

// Three cases covering k = 2, 3, 4 with symmetric and asymmetric
// populations.
const std::vector<CaseFixture>& shipped_cases();

struct FieldCheck {
  std::string field;
  double expected;
  double actual;
  double abs_error;
  double tolerance;
  bool pass;
};

struct CaseResult {
  std::string name;
  DecompositionReport report;
  std::vector<FieldCheck> checks;
  bool pass;
};

// Pulls the named field out of a report ("I_sums.r" addresses the order-r
// interaction total). Throws Error for unknown names.
double report_field(const DecompositionReport& report, const std::string& field);

CaseResult run_case(const CaseFixture& fixture);
std::vector<CaseResult> run_all_cases();
bool all_passed(const std::vector<CaseResult>& results);

nlohmann::json validation_summary_json(const std::vector<CaseResult>& results);

}  // namespace kldecomp
