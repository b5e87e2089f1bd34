#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kldecomp/decompose.hpp"
#include "kldecomp/hypergeom.hpp"
#include "kldecomp/pmf.hpp"

namespace kldecomp {

// Document formats
//
// distribution: {"k": int, "alphabets": [[sym, ...], ...],
//                "probs": [float, ...] (row-major, dimension 1 slowest),
//                "mode": "float64" | "rational",
//                "rational_probs": [[num, den], ...] (rational mode)}
// reference:    {"k": int, "alphabets": [[sym, ...], ...],
//                "pmfs": [[float, ...], ...], "homogeneous": bool,
//                "rational_pmfs": [[[num, den], ...], ...] (optional)}
// population:   {"counts": {"sym": int, ...}, "k": int}
// tables:       {"k": int, "values": [float, ...]} indexed by subset mask
//
// Alphabets may list symbols in any order on input; tensors are remapped to
// the canonical (lexicographically sorted) symbol order at ingest.
// Rational numerators/denominators are emitted as JSON integers when they
// fit in 64 bits and as decimal strings otherwise; both forms are accepted.
//
// Loaders accept either a bare document or a combined document (such as the
// hypergeom output) holding it under the matching key.

nlohmann::json distribution_to_json(const JointPmf& pmf);
JointPmf distribution_from_json(const nlohmann::json& j,
                                double norm_tolerance = kDefaultNormTolerance);

nlohmann::json reference_to_json(const ReferenceSpec& ref);
ReferenceSpec reference_from_json(const nlohmann::json& j,
                                  double norm_tolerance = kDefaultNormTolerance,
                                  bool allow_zeros = false);

nlohmann::json population_to_json(const PopulationSpec& spec);
PopulationSpec population_from_json(const nlohmann::json& j);

nlohmann::json table_to_json(int k, const std::vector<double>& values);

nlohmann::json report_to_json(const DecompositionReport& report);

// Stacked-bar components of the recomposed divergence: the marginal-KL sum,
// one row per interaction order, then the directly computed total as the
// reference line. The component rows (all but "kl_full") sum to the
// recomposed divergence.
std::vector<std::pair<std::string, double>> plot_rows(const DecompositionReport& report);
std::vector<std::pair<std::string, double>> plot_rows_from_report_json(const nlohmann::json& j);
std::string plot_rows_to_csv(const std::vector<std::pair<std::string, double>>& rows);

// Wraps nlohmann parsing, rethrowing malformed input as ParseError.
nlohmann::json parse_json_text(const std::string& text);

}  // namespace kldecomp
