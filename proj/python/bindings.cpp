#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include <json.hpp>

#include "kldecomp/decompose.hpp"
#include "kldecomp/errors.hpp"
#include "kldecomp/hypergeom.hpp"
#include "kldecomp/json_io.hpp"
#include "kldecomp/validation.hpp"

namespace py = pybind11;
using namespace kldecomp;

namespace {

py::object big_int_to_py(const BigInt& value) {
  const std::string digits = value.str();
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(digits.c_str(), nullptr, 10));
}

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null:
      return py::none();
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
      return out;
    }
    default:
      return py::none();
  }
}

std::vector<Alphabet> alphabets_from_lists(const std::vector<std::vector<std::string>>& lists) {
  std::vector<Alphabet> out;
  out.reserve(lists.size());
  for (const auto& symbols : lists) out.emplace_back(symbols);
  return out;
}

SubsetMask mask_from_dims(const std::vector<int>& dims, int k) {
  SubsetMask mask{0, k};
  for (int d : dims) {
    if (d < 0 || d >= 32) throw InvalidSubset("dimension index out of range");
    mask.bits |= std::uint32_t{1} << d;
  }
  return mask;
}

ZeroReferencePolicy policy_from_flag(bool allow_zero_reference) {
  return allow_zero_reference ? ZeroReferencePolicy::kAllowMatchedZeros
                              : ZeroReferencePolicy::kStrict;
}

py::list rationals_to_py(std::span<const Rational> values) {
  py::list out;
  for (const Rational& v : values) {
    out.append(py::make_tuple(big_int_to_py(boost::multiprecision::numerator(v)),
                              big_int_to_py(boost::multiprecision::denominator(v))));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact decomposition of multivariate KL divergence into marginal "
            "divergences and interaction-order contributions";
  m.attr("__version__") = "0.1.0";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

  py::class_<Alphabet>(m, "Alphabet")
      .def(py::init<std::vector<std::string>>(), py::arg("symbols"))
      .def_property_readonly("symbols", &Alphabet::symbols)
      .def("index_of", &Alphabet::index_of, py::arg("symbol"))
      .def("__len__", &Alphabet::size);

  py::class_<JointPmf>(m, "JointPmf")
      .def_static(
          "from_probs",
          [](const std::vector<std::vector<std::string>>& alphabets,
             const std::vector<double>& probs, double norm_tolerance) {
            return JointPmf::from_floats(alphabets_from_lists(alphabets), probs,
                                         norm_tolerance);
          },
          py::arg("alphabets"), py::arg("probs"),
          py::arg("norm_tolerance") = kDefaultNormTolerance,
          "Dense joint PMF; probs are row-major over lexicographically sorted "
          "symbols, dimension 1 slowest")
      .def_property_readonly("k", &JointPmf::dimension_count)
      .def_property_readonly("alphabets",
                             [](const JointPmf& p) {
                               std::vector<std::vector<std::string>> out;
                               for (const Alphabet& a : p.alphabets())
                                 out.push_back(a.symbols());
                               return out;
                             })
      .def_property_readonly("probs",
                             [](const JointPmf& p) {
                               return std::vector<double>(p.probs().begin(), p.probs().end());
                             })
      .def_property_readonly("is_rational", &JointPmf::is_rational)
      .def_property_readonly("rational_probs",
                             [](const JointPmf& p) { return rationals_to_py(p.rational_probs()); },
                             "Exact probabilities as (numerator, denominator) tuples")
      .def("to_json", [](const JointPmf& p) { return distribution_to_json(p).dump(); });

  py::class_<MarginalPmf>(m, "MarginalPmf")
      .def_property_readonly("dims",
                             [](const MarginalPmf& p) { return p.subset().dimensions(); })
      .def_property_readonly("probs",
                             [](const MarginalPmf& p) {
                               return std::vector<double>(p.probs().begin(), p.probs().end());
                             })
      .def_property_readonly("is_rational", &MarginalPmf::is_rational)
      .def_property_readonly("rational_probs", [](const MarginalPmf& p) {
        return rationals_to_py(p.rational_probs());
      });

  py::class_<ReferenceSpec>(m, "ReferenceSpec")
      .def_static(
          "from_pmfs",
          [](const std::vector<std::vector<std::string>>& alphabets,
             const std::vector<std::vector<double>>& pmfs, bool allow_zeros) {
            if (alphabets.size() != pmfs.size()) {
              throw ArityMismatch("need one PMF per alphabet");
            }
            std::vector<DimensionPmf> dims;
            for (std::size_t i = 0; i < pmfs.size(); ++i) {
              dims.push_back(DimensionPmf::from_floats(Alphabet(alphabets[i]), pmfs[i]));
            }
            return ReferenceSpec::per_dimension(std::move(dims), allow_zeros);
          },
          py::arg("alphabets"), py::arg("pmfs"), py::arg("allow_zeros") = false)
      .def_property_readonly("k", &ReferenceSpec::dimension_count)
      .def_property_readonly("homogeneous", &ReferenceSpec::is_homogeneous)
      .def_property_readonly("pmfs", [](const ReferenceSpec& r) {
        std::vector<std::vector<double>> out;
        for (const DimensionPmf& d : r.dimensions()) out.push_back(d.probs);
        return out;
      });

  py::class_<PopulationSpec>(m, "PopulationSpec")
      .def(py::init<std::map<std::string, std::uint64_t>, int>(), py::arg("counts"),
           py::arg("k"))
      .def_property_readonly("counts", &PopulationSpec::counts)
      .def_property_readonly("k", &PopulationSpec::draw_count)
      .def_property_readonly("population_size",
                             [](const PopulationSpec& s) {
                               return big_int_to_py(s.population_size());
                             })
      .def_property_readonly("symbols",
                             [](const PopulationSpec& s) { return s.alphabet().symbols(); });

  py::class_<DecompositionReport>(m, "DecompositionReport")
      .def_readonly("k", &DecompositionReport::k)
      .def_readonly("kl_full", &DecompositionReport::kl_full)
      .def_readonly("marginal_kls", &DecompositionReport::marginal_kls)
      .def_readonly("marginal_kl_sum", &DecompositionReport::marginal_kl_sum)
      .def_readonly("interaction_totals", &DecompositionReport::interaction_totals)
      .def_readonly("total_correlation_interactions",
                    &DecompositionReport::total_correlation_interactions)
      .def_readonly("total_correlation_entropy",
                    &DecompositionReport::total_correlation_entropy)
      .def_readonly("recomposed_kl", &DecompositionReport::recomposed_kl)
      .def_readonly("residual_decomposition", &DecompositionReport::residual_decomposition)
      .def_readonly("residual_lemma", &DecompositionReport::residual_lemma)
      .def("interaction_total", &DecompositionReport::interaction_total, py::arg("r"))
      .def_property_readonly("subset_entropies",
                             [](const DecompositionReport& r) -> py::object {
                               if (!r.subset_entropies) return py::none();
                               return py::cast(r.subset_entropies->values);
                             })
      .def_property_readonly("per_subset_interactions",
                             [](const DecompositionReport& r) -> py::object {
                               if (!r.per_subset_interactions) return py::none();
                               return py::cast(r.per_subset_interactions->values);
                             })
      .def("to_dict", [](const DecompositionReport& r) { return json_to_py(report_to_json(r)); })
      .def("to_json", [](const DecompositionReport& r) { return report_to_json(r).dump(); });

  m.def("joint_from_population", &joint_from_population, py::arg("population"),
        "Exact joint PMF of k ordered draws without replacement");
  m.def("reference_from_population", &reference_from_population, py::arg("population"));
  m.def("sequence_probability",
        [](const PopulationSpec& spec, const std::vector<std::string>& draws) {
          const Rational p = sequence_probability(spec, draws);
          return py::make_tuple(big_int_to_py(boost::multiprecision::numerator(p)),
                                big_int_to_py(boost::multiprecision::denominator(p)));
        },
        py::arg("population"), py::arg("draws"),
        "Exact probability of one ordered draw sequence as (numerator, denominator)");

  m.def("marginalize",
        [](const JointPmf& joint, const std::vector<int>& dims) {
          return marginalize(joint, mask_from_dims(dims, joint.dimension_count()));
        },
        py::arg("joint"), py::arg("dims"));
  m.def("product_reference_pmf", &product_reference_pmf, py::arg("reference"));

  m.def("kl_divergence",
        [](const std::vector<double>& p, const std::vector<double>& q,
           bool allow_zero_reference) {
          return kl_divergence_bits(p, q, policy_from_flag(allow_zero_reference));
        },
        py::arg("p"), py::arg("q"), py::arg("allow_zero_reference") = false,
        "KL(p || q) in bits");
  m.def("kl_joint_vs_product",
        [](const JointPmf& joint, const ReferenceSpec& ref, bool allow_zero_reference) {
          return kl_joint_vs_product(joint, ref, policy_from_flag(allow_zero_reference));
        },
        py::arg("joint"), py::arg("reference"), py::arg("allow_zero_reference") = false);

  m.def("subset_entropies",
        [](const JointPmf& joint) { return entropy_table(joint).values; }, py::arg("joint"),
        "Shannon entropies of all subset marginals, indexed by subset bitmask");
  m.def("subset_interactions",
        [](const JointPmf& joint) {
          return interaction_table_fast(entropy_table(joint)).values;
        },
        py::arg("joint"),
        "Interaction information of all subsets, indexed by subset bitmask");
  m.def("total_correlation", &total_correlation_entropy, py::arg("joint"));
  m.def("check_lemma_identity", &check_lemma_identity, py::arg("joint"));

  m.def("decompose",
        [](const JointPmf& joint, const ReferenceSpec& ref, bool include_tables,
           bool allow_zero_reference) {
          DecomposeOptions options;
          options.include_tables = include_tables;
          options.zero_policy = policy_from_flag(allow_zero_reference);
          return decompose(joint, ref, options);
        },
        py::arg("joint"), py::arg("reference"), py::arg("include_tables") = false,
        py::arg("allow_zero_reference") = false);

  m.def("run_validation_cases",
        []() { return json_to_py(validation_summary_json(run_all_cases())); },
        "Run the bundled end-to-end validation cases and return the summary");
}
