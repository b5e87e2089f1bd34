#include "kldecomp/validation.hpp"

#include <cmath>
#include <cstdlib>

#include "kldecomp/errors.hpp"
#include "kldecomp/hypergeom.hpp"

namespace kldecomp {

namespace {

constexpr double kValueTolerance = 1e-13;
constexpr double kResidualTolerance = 1e-12;

double parse_decimal(const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') {
    throw Error("fixture value \"" + text + "\" is not a valid decimal");
  }
  return v;
}

}  // namespace

const std::vector<CaseFixture>& shipped_cases() {
  static const std::vector<CaseFixture> cases = {
      {"k3-symmetric",
       {{"0", 2}, {"1", 2}, {"2", 2}},
       3,
       {
           {"KL_full", "0.24799690655495005", kValueTolerance},
           {"KL_marginals_sum", "0.000000e+00", kResidualTolerance},
           {"TotalCorrelation_C_Pk", "0.24799690655495005", kValueTolerance},
           {"Direct_C_Pk", "0.24799690655495027", kValueTolerance},
           {"Residual", "1.665335e-16", kResidualTolerance},
           {"I_sums.2", "0.1891032175013815", kValueTolerance},
           {"I_sums.3", "0.05889368905356852", kValueTolerance},
       }},
      {"k2-asymmetric",
       {{"0", 3}, {"1", 2}},
       2,
       {
           {"KL_full", "0.04643934467101547", kValueTolerance},
           {"KL_marginals_sum", "0.000000e+00", kResidualTolerance},
           {"TotalCorrelation_C_Pk", "0.04643934467101547", kValueTolerance},
           {"Direct_C_Pk", "0.04643934467101547", kValueTolerance},
           {"Residual", "6.938894e-17", kResidualTolerance},
           {"I_sums.2", "0.04643934467101547", kValueTolerance},
       }},
      {"k4-symmetric-binary",
       {{"A", 4}, {"B", 4}},
       4,
       {
           {"KL_full", "0.11441198342591395", kValueTolerance},
           {"KL_marginals_sum", "6.406853e-16", kResidualTolerance},
           {"TotalCorrelation_C_Pk", "0.1144119834259133", kValueTolerance},
           {"Direct_C_Pk", "0.11441198342591374", kValueTolerance},
           {"Residual", "5.689893e-16", kResidualTolerance},
           {"I_sums.2", "0.08863118379449125", kValueTolerance},
           {"I_sums.3", "0.02188937275202964", kValueTolerance},
           {"I_sums.4", "0.0038914268793929755", kValueTolerance},
       }},
  };
  return cases;
}

double report_field(const DecompositionReport& report, const std::string& field) {
  if (field == "KL_full") return report.kl_full;
  if (field == "KL_marginals_sum") return report.marginal_kl_sum;
  if (field == "TotalCorrelation_C_Pk") return report.total_correlation_interactions;
  if (field == "Direct_C_Pk") return report.total_correlation_entropy;
  if (field == "Recomposed_KL") return report.recomposed_kl;
  if (field == "Residual") return report.residual_decomposition;
  if (field == "Residual_Lemma") return report.residual_lemma;
  if (field.rfind("I_sums.", 0) == 0) {
    const int r = std::stoi(field.substr(7));
    if (r < 2 || r > report.k) {
      throw Error("report has no interaction total of order " + std::to_string(r));
    }
    return report.interaction_total(r);
  }
  throw Error("unknown report field \"" + field + "\"");
}

CaseResult run_case(const CaseFixture& fixture) {
  PopulationSpec population(fixture.counts, fixture.draw_count);
  JointPmf joint = joint_from_population(population);
  ReferenceSpec reference = reference_from_population(population);

  CaseResult result{fixture.name, decompose(joint, reference), {}, true};
  for (const ExpectedField& expected : fixture.expected) {
    FieldCheck check;
    check.field = expected.field;
    check.expected = parse_decimal(expected.decimal);
    check.actual = report_field(result.report, expected.field);
    check.abs_error = std::abs(check.actual - check.expected);
    check.tolerance = expected.tolerance;
    check.pass = check.abs_error <= check.tolerance;
    result.pass = result.pass && check.pass;
    result.checks.push_back(std::move(check));
  }
  return result;
}

std::vector<CaseResult> run_all_cases() {
  std::vector<CaseResult> results;
  for (const CaseFixture& fixture : shipped_cases()) {
    results.push_back(run_case(fixture));
  }
  return results;
}

bool all_passed(const std::vector<CaseResult>& results) {
  for (const CaseResult& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

nlohmann::json validation_summary_json(const std::vector<CaseResult>& results) {
  nlohmann::json cases = nlohmann::json::array();
  for (const CaseResult& r : results) {
    nlohmann::json fields = nlohmann::json::array();
    for (const FieldCheck& c : r.checks) {
      fields.push_back({{"field", c.field},
                        {"expected", c.expected},
                        {"actual", c.actual},
                        {"abs_error", c.abs_error},
                        {"tolerance", c.tolerance},
                        {"pass", c.pass}});
    }
    cases.push_back({{"name", r.name}, {"pass", r.pass}, {"fields", std::move(fields)}});
  }
  return nlohmann::json{{"pass", all_passed(results)}, {"cases", std::move(cases)}};
}

}  // namespace kldecomp
