// Command-line frontend: build exact hypergeometric distributions, run KL
// decompositions, check the bundled validation cases, and emit plot data.
//
// Exit codes: 0 success, 1 check failed (validation mismatch or residual
// above threshold), 2 input parse error, 3 invariant violation, 4 divergence
// undefined (reference not positive / absolute continuity), 5 resource cap.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kldecomp/decompose.hpp"
#include "kldecomp/errors.hpp"
#include "kldecomp/hypergeom.hpp"
#include "kldecomp/json_io.hpp"
#include "kldecomp/validation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitDivergenceUndefined = 4;
constexpr int kExitResourceCap = 5;

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw kldecomp::ParseError("cannot open \"" + path + "\" for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return kldecomp::parse_json_text(buffer.str());
}

void write_output(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(output_path);
  if (!out) {
    throw kldecomp::ParseError("cannot open \"" + output_path + "\" for writing");
  }
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

struct DecomposeFlags {
  std::string distribution_path;
  std::string reference_path;
  std::string output_path;
  std::string format = "json";
  double residual_tolerance = 1e-12;
  double norm_tolerance = kldecomp::kDefaultNormTolerance;
  bool dump_tables = false;
  bool allow_zero_reference = false;
};

int cmd_hypergeom(const std::string& population_path, const std::string& output_path) {
  const nlohmann::json doc = read_json_file(population_path);
  const kldecomp::PopulationSpec spec = kldecomp::population_from_json(doc);
  const kldecomp::JointPmf joint = kldecomp::joint_from_population(spec);
  const kldecomp::ReferenceSpec reference = kldecomp::reference_from_population(spec);

  nlohmann::json out{{"population", kldecomp::population_to_json(spec)},
                     {"distribution", kldecomp::distribution_to_json(joint)},
                     {"reference", kldecomp::reference_to_json(reference)}};
  write_output(out.dump(2), output_path);
  return kExitOk;
}

int cmd_decompose(const DecomposeFlags& flags) {
  const nlohmann::json dist_doc = read_json_file(flags.distribution_path);
  const nlohmann::json ref_doc = read_json_file(flags.reference_path);

  const kldecomp::JointPmf joint =
      kldecomp::distribution_from_json(dist_doc, flags.norm_tolerance);
  const kldecomp::ReferenceSpec reference = kldecomp::reference_from_json(
      ref_doc, flags.norm_tolerance, flags.allow_zero_reference);

  kldecomp::DecomposeOptions options;
  options.zero_policy = flags.allow_zero_reference
                            ? kldecomp::ZeroReferencePolicy::kAllowMatchedZeros
                            : kldecomp::ZeroReferencePolicy::kStrict;
  options.include_tables = flags.dump_tables;

  const kldecomp::DecompositionReport report = kldecomp::decompose(joint, reference, options);

  if (flags.format == "csv") {
    write_output(kldecomp::plot_rows_to_csv(kldecomp::plot_rows(report)), flags.output_path);
  } else {
    write_output(kldecomp::report_to_json(report).dump(2), flags.output_path);
  }

  if (report.residual_decomposition > flags.residual_tolerance) {
    std::cerr << "decomposition residual " << report.residual_decomposition
              << " exceeds tolerance " << flags.residual_tolerance << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_validate(const std::string& output_path) {
  const std::vector<kldecomp::CaseResult> results = kldecomp::run_all_cases();
  for (const kldecomp::CaseResult& result : results) {
    std::cerr << (result.pass ? "[PASS] " : "[FAIL] ") << result.name << "\n";
    for (const kldecomp::FieldCheck& check : result.checks) {
      if (!check.pass) {
        std::cerr << "       " << check.field << ": expected " << check.expected
                  << ", got " << check.actual << " (|diff| " << check.abs_error << " > "
                  << check.tolerance << ")\n";
      }
    }
  }
  write_output(kldecomp::validation_summary_json(results).dump(2), output_path);
  return kldecomp::all_passed(results) ? kExitOk : kExitCheckFailed;
}

int cmd_plotdata(const std::string& report_path, const std::string& output_path) {
  const nlohmann::json doc = read_json_file(report_path);
  const auto rows = kldecomp::plot_rows_from_report_json(doc);
  write_output(kldecomp::plot_rows_to_csv(rows), output_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact decomposition of KL divergence against product references\n"
               "into marginal divergences and interaction-order contributions."};
  app.set_version_flag("--version", "kldecomp 0.1.0");
  app.require_subcommand(1);

  std::string population_path;
  std::string hypergeom_output;
  CLI::App* hypergeom =
      app.add_subcommand("hypergeom",
                         "Build the exact joint distribution of k ordered draws without "
                         "replacement from a population, plus its reference");
  hypergeom->add_option("population", population_path, "population JSON file")->required();
  hypergeom->add_option("-o,--output", hypergeom_output, "write to file instead of stdout");

  DecomposeFlags flags;
  CLI::App* decompose_cmd = app.add_subcommand(
      "decompose", "Decompose KL(joint || product reference) into marginal and "
                   "interaction components");
  decompose_cmd->add_option("distribution", flags.distribution_path, "distribution JSON file")
      ->required();
  decompose_cmd->add_option("reference", flags.reference_path, "reference JSON file")
      ->required();
  decompose_cmd->add_option("--tolerance", flags.residual_tolerance,
                            "residual threshold for exit status")
      ->capture_default_str();
  decompose_cmd->add_option("--norm-tolerance", flags.norm_tolerance,
                            "normalization tolerance for float inputs")
      ->capture_default_str();
  decompose_cmd->add_flag("--dump-tables", flags.dump_tables,
                          "include full entropy/interaction tables in the report");
  decompose_cmd->add_flag("--allow-zero-reference", flags.allow_zero_reference,
                          "permit reference zeros where the joint carries no mass");
  decompose_cmd->add_option("--format", flags.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  decompose_cmd->add_option("-o,--output", flags.output_path,
                            "write to file instead of stdout");

  std::string validate_output;
  CLI::App* validate =
      app.add_subcommand("validate", "Run the bundled end-to-end validation cases");
  validate->add_option("-o,--output", validate_output, "write to file instead of stdout");

  std::string report_path;
  std::string plot_output;
  CLI::App* plotdata = app.add_subcommand(
      "plotdata", "Emit stacked-bar CSV for the components of a decomposition report");
  plotdata->add_option("report", report_path, "report JSON file")->required();
  plotdata->add_option("-o,--output", plot_output, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help/version are "successful" parse errors with exit code 0.
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (hypergeom->parsed()) return cmd_hypergeom(population_path, hypergeom_output);
    if (decompose_cmd->parsed()) return cmd_decompose(flags);
    if (validate->parsed()) return cmd_validate(validate_output);
    if (plotdata->parsed()) return cmd_plotdata(report_path, plot_output);
  } catch (const kldecomp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed document: " << e.what() << "\n";
    return kExitParse;
  } catch (const kldecomp::ReferenceNotPositive& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDivergenceUndefined;
  } catch (const kldecomp::AbsoluteContinuityViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDivergenceUndefined;
  } catch (const kldecomp::DimensionCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const kldecomp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}
