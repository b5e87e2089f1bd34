#include "kldecomp/json_io.hpp"

#include <cstdint>
#include <limits>
#include <sstream>

#include "kldecomp/errors.hpp"

namespace kldecomp {

namespace {

using nlohmann::json;

const json& require_field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) {
    throw ParseError(std::string("missing required field \"") + name + "\"");
  }
  return *it;
}

json big_int_to_json(const BigInt& value) {
  static const BigInt kMin = BigInt(std::numeric_limits<std::int64_t>::min());
  static const BigInt kMax = BigInt(std::numeric_limits<std::int64_t>::max());
  if (value >= kMin && value <= kMax) {
    return json(value.convert_to<std::int64_t>());
  }
  return json(value.str());
}

BigInt big_int_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    return BigInt(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("invalid integer string \"" + j.get<std::string>() + "\"");
    }
  }
  throw ParseError("expected an integer or integer string");
}

json rational_to_json(const Rational& value) {
  return json::array({big_int_to_json(boost::multiprecision::numerator(value)),
                      big_int_to_json(boost::multiprecision::denominator(value))});
}

Rational rational_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw ParseError("rational values must be [numerator, denominator] pairs");
  }
  const BigInt num = big_int_from_json(j[0]);
  const BigInt den = big_int_from_json(j[1]);
  if (den == 0) throw ParseError("rational denominator is zero");
  return Rational(num, den);
}

std::vector<std::string> symbols_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw ParseError("each alphabet must be a nonempty array of symbol strings");
  }
  std::vector<std::string> symbols;
  symbols.reserve(j.size());
  for (const json& s : j) {
    if (!s.is_string()) throw ParseError("alphabet symbols must be strings");
    symbols.push_back(s.get<std::string>());
  }
  return symbols;
}

// Index permutation from the order symbols were listed in to the canonical
// sorted order; empty when already canonical.
std::vector<std::size_t> ingest_permutation(const std::vector<std::string>& given,
                                            const Alphabet& sorted) {
  bool identity = true;
  std::vector<std::size_t> perm(given.size());
  for (std::size_t i = 0; i < given.size(); ++i) {
    perm[i] = sorted.index_of(given[i]);
    identity = identity && perm[i] == i;
  }
  if (identity) perm.clear();
  return perm;
}

template <typename T>
std::vector<T> remap_tensor(const std::vector<T>& values,
                            const std::vector<std::size_t>& sizes,
                            const std::vector<std::vector<std::size_t>>& perms) {
  bool identity = true;
  for (const auto& p : perms) identity = identity && p.empty();
  if (identity) return values;

  const std::vector<std::size_t> strides = row_major_strides(sizes);
  std::vector<T> out(values.size());
  std::vector<std::size_t> idx(sizes.size(), 0);
  for (std::size_t lin = 0; lin < values.size(); ++lin) {
    std::size_t target = 0;
    for (std::size_t d = 0; d < sizes.size(); ++d) {
      const std::size_t v = perms[d].empty() ? idx[d] : perms[d][idx[d]];
      target += v * strides[d];
    }
    out[target] = values[lin];
    for (std::size_t d = idx.size(); d-- > 0;) {
      if (++idx[d] < sizes[d]) break;
      idx[d] = 0;
    }
  }
  return out;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

nlohmann::json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json distribution_to_json(const JointPmf& pmf) {
  json alphabets = json::array();
  for (const Alphabet& a : pmf.alphabets()) {
    alphabets.push_back(a.symbols());
  }
  json out{{"k", pmf.dimension_count()},
           {"alphabets", std::move(alphabets)},
           {"probs", std::vector<double>(pmf.probs().begin(), pmf.probs().end())},
           {"mode", pmf.is_rational() ? "rational" : "float64"}};
  if (pmf.is_rational()) {
    json exact = json::array();
    for (const Rational& p : pmf.rational_probs()) {
      exact.push_back(rational_to_json(p));
    }
    out["rational_probs"] = std::move(exact);
  }
  return out;
}

JointPmf distribution_from_json(const json& j, double norm_tolerance) {
  if (j.is_object() && j.contains("distribution")) {
    return distribution_from_json(j.at("distribution"), norm_tolerance);
  }
  if (!j.is_object()) throw ParseError("distribution document must be a JSON object");

  const int k = require_field(j, "k").get<int>();
  const json& alphabet_list = require_field(j, "alphabets");
  if (!alphabet_list.is_array() || static_cast<int>(alphabet_list.size()) != k || k < 1) {
    throw ParseError("\"alphabets\" must list exactly k alphabets (k >= 1)");
  }

  std::vector<Alphabet> alphabets;
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> sizes;
  for (const json& a : alphabet_list) {
    std::vector<std::string> given = symbols_from_json(a);
    Alphabet alphabet(given);
    perms.push_back(ingest_permutation(given, alphabet));
    sizes.push_back(alphabet.size());
    alphabets.push_back(std::move(alphabet));
  }
  const std::size_t expected_len = tensor_length(sizes);

  const std::string mode = require_field(j, "mode").get<std::string>();
  if (mode == "rational") {
    const json& exact = require_field(j, "rational_probs");
    if (!exact.is_array() || exact.size() != expected_len) {
      throw ParseError("\"rational_probs\" length does not match the alphabet sizes");
    }
    std::vector<Rational> values;
    values.reserve(exact.size());
    for (const json& r : exact) values.push_back(rational_from_json(r));
    values = remap_tensor(values, sizes, perms);
    return JointPmf::from_rationals(std::move(alphabets), std::move(values));
  }
  if (mode != "float64") {
    throw ParseError("\"mode\" must be \"float64\" or \"rational\"");
  }
  const json& probs_json = require_field(j, "probs");
  if (!probs_json.is_array() || probs_json.size() != expected_len) {
    throw ParseError("\"probs\" length does not match the alphabet sizes");
  }
  std::vector<double> probs;
  probs.reserve(probs_json.size());
  for (const json& p : probs_json) {
    if (!p.is_number()) throw ParseError("\"probs\" entries must be numbers");
    probs.push_back(p.get<double>());
  }
  probs = remap_tensor(probs, sizes, perms);
  return JointPmf::from_floats(std::move(alphabets), std::move(probs), norm_tolerance);
}

json reference_to_json(const ReferenceSpec& ref) {
  json alphabets = json::array();
  json pmfs = json::array();
  bool any_rational = false;
  for (const DimensionPmf& d : ref.dimensions()) {
    alphabets.push_back(d.alphabet.symbols());
    pmfs.push_back(d.probs);
    any_rational = any_rational || d.rational_probs.has_value();
  }
  json out{{"k", ref.dimension_count()},
           {"alphabets", std::move(alphabets)},
           {"pmfs", std::move(pmfs)},
           {"homogeneous", ref.is_homogeneous()}};
  if (any_rational) {
    json exact = json::array();
    for (const DimensionPmf& d : ref.dimensions()) {
      json dim = json::array();
      if (d.rational_probs) {
        for (const Rational& p : *d.rational_probs) dim.push_back(rational_to_json(p));
      }
      exact.push_back(std::move(dim));
    }
    out["rational_pmfs"] = std::move(exact);
  }
  return out;
}

ReferenceSpec reference_from_json(const json& j, double norm_tolerance, bool allow_zeros) {
  if (j.is_object() && j.contains("reference")) {
    return reference_from_json(j.at("reference"), norm_tolerance, allow_zeros);
  }
  if (!j.is_object()) throw ParseError("reference document must be a JSON object");

  const int k = require_field(j, "k").get<int>();
  const json& alphabet_list = require_field(j, "alphabets");
  const json& pmf_list = require_field(j, "pmfs");
  if (!alphabet_list.is_array() || static_cast<int>(alphabet_list.size()) != k || k < 1) {
    throw ParseError("\"alphabets\" must list exactly k alphabets (k >= 1)");
  }
  if (!pmf_list.is_array() || static_cast<int>(pmf_list.size()) != k) {
    throw ParseError("\"pmfs\" must list exactly k probability vectors");
  }
  const json* exact_list = nullptr;
  if (j.contains("rational_pmfs")) {
    exact_list = &j.at("rational_pmfs");
    if (!exact_list->is_array() || static_cast<int>(exact_list->size()) != k) {
      throw ParseError("\"rational_pmfs\" must list exactly k vectors");
    }
  }

  std::vector<DimensionPmf> dims;
  dims.reserve(static_cast<std::size_t>(k));
  for (int d = 0; d < k; ++d) {
    std::vector<std::string> given = symbols_from_json(alphabet_list[d]);
    Alphabet alphabet(given);
    const std::vector<std::size_t> perm = ingest_permutation(given, alphabet);
    const std::vector<std::vector<std::size_t>> perms{perm};
    const std::vector<std::size_t> size{alphabet.size()};

    // An empty per-dimension array in rational_pmfs means "floats only" for
    // that dimension (mixed-mode references round-trip this way).
    bool has_exact = false;
    if (exact_list) {
      const json& exact_dim = (*exact_list)[d];
      if (!exact_dim.is_array()) {
        throw ParseError("\"rational_pmfs\" entries must be arrays");
      }
      has_exact = !exact_dim.empty();
    }
    if (has_exact) {
      const json& exact_dim = (*exact_list)[d];
      if (exact_dim.size() != alphabet.size()) {
        throw ParseError("rational PMF length does not match its alphabet");
      }
      std::vector<Rational> values;
      values.reserve(exact_dim.size());
      for (const json& r : exact_dim) values.push_back(rational_from_json(r));
      values = remap_tensor(values, size, perms);
      dims.push_back(DimensionPmf::from_rationals(std::move(alphabet), std::move(values)));
      continue;
    }

    const json& pmf_json = pmf_list[d];
    if (!pmf_json.is_array() || pmf_json.size() != alphabet.size()) {
      throw ParseError("PMF length does not match its alphabet in dimension " +
                       std::to_string(d + 1));
    }
    std::vector<double> probs;
    probs.reserve(pmf_json.size());
    for (const json& p : pmf_json) {
      if (!p.is_number()) throw ParseError("\"pmfs\" entries must be numbers");
      probs.push_back(p.get<double>());
    }
    probs = remap_tensor(probs, size, perms);
    dims.push_back(
        DimensionPmf::from_floats(std::move(alphabet), std::move(probs), norm_tolerance));
  }
  return ReferenceSpec::per_dimension(std::move(dims), allow_zeros);
}

json population_to_json(const PopulationSpec& spec) {
  json counts = json::object();
  for (const auto& [symbol, count] : spec.counts()) {
    counts[symbol] = count;
  }
  return json{{"counts", std::move(counts)}, {"k", spec.draw_count()}};
}

PopulationSpec population_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("population document must be a JSON object");
  const json& counts_json = require_field(j, "counts");
  if (!counts_json.is_object() || counts_json.empty()) {
    throw ParseError("\"counts\" must be a nonempty object of symbol -> count");
  }
  std::map<std::string, std::uint64_t> counts;
  for (const auto& [symbol, value] : counts_json.items()) {
    if (!value.is_number_integer() || value.is_number_float()) {
      throw ParseError("count for symbol \"" + symbol + "\" must be an integer");
    }
    if (value.is_number_unsigned()) {
      counts[symbol] = value.get<std::uint64_t>();
    } else {
      const std::int64_t signed_count = value.get<std::int64_t>();
      if (signed_count < 0) {
        throw ParseError("count for symbol \"" + symbol + "\" must be nonnegative");
      }
      counts[symbol] = static_cast<std::uint64_t>(signed_count);
    }
  }
  const json& k_json = require_field(j, "k");
  if (!k_json.is_number_integer()) throw ParseError("\"k\" must be an integer");
  return PopulationSpec(std::move(counts), k_json.get<int>());
}

json table_to_json(int k, const std::vector<double>& values) {
  return json{{"k", k}, {"values", values}};
}

json report_to_json(const DecompositionReport& report) {
  json i_sums = json::object();
  for (int r = 2; r <= report.k; ++r) {
    i_sums[std::to_string(r)] = report.interaction_total(r);
  }
  json out{{"k", report.k},
           {"KL_full", report.kl_full},
           {"KL_marginals", report.marginal_kls},
           {"KL_marginals_sum", report.marginal_kl_sum},
           {"TotalCorrelation_C_Pk", report.total_correlation_interactions},
           {"Direct_C_Pk", report.total_correlation_entropy},
           {"Recomposed_KL", report.recomposed_kl},
           {"Residual", report.residual_decomposition},
           {"Residual_Lemma", report.residual_lemma},
           {"I_sums", std::move(i_sums)}};
  if (report.subset_entropies) {
    out["EntropyTable"] = table_to_json(report.subset_entropies->k,
                                        report.subset_entropies->values);
  }
  if (report.per_subset_interactions) {
    out["InteractionTable"] = table_to_json(report.per_subset_interactions->k,
                                            report.per_subset_interactions->values);
  }
  return out;
}

std::vector<std::pair<std::string, double>> plot_rows(const DecompositionReport& report) {
  std::vector<std::pair<std::string, double>> rows;
  rows.emplace_back("marginal_sum", report.marginal_kl_sum);
  for (int r = 2; r <= report.k; ++r) {
    rows.emplace_back("I^(" + std::to_string(r) + ")", report.interaction_total(r));
  }
  rows.emplace_back("kl_full", report.kl_full);
  return rows;
}

std::vector<std::pair<std::string, double>> plot_rows_from_report_json(const json& j) {
  if (!j.is_object()) throw ParseError("report document must be a JSON object");
  const int k = require_field(j, "k").get<int>();
  const json& i_sums = require_field(j, "I_sums");
  std::vector<std::pair<std::string, double>> rows;
  rows.emplace_back("marginal_sum", require_field(j, "KL_marginals_sum").get<double>());
  for (int r = 2; r <= k; ++r) {
    const std::string key = std::to_string(r);
    if (!i_sums.contains(key)) {
      throw ParseError("report is missing I_sums entry \"" + key + "\"");
    }
    rows.emplace_back("I^(" + key + ")", i_sums.at(key).get<double>());
  }
  rows.emplace_back("kl_full", require_field(j, "KL_full").get<double>());
  return rows;
}

std::string plot_rows_to_csv(const std::vector<std::pair<std::string, double>>& rows) {
  std::ostringstream os;
  os << "component,value_bits\n";
  for (const auto& [name, value] : rows) {
    os << name << "," << format_double(value) << "\n";
  }
  return os.str();
}

}  // namespace kldecomp
