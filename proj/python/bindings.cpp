#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "compcent/analysis.hpp"
#include "compcent/edge_list.hpp"
#include "compcent/errors.hpp"
#include "compcent/parallel.hpp"
#include "compcent/simulate.hpp"
#include "compcent/svg.hpp"

namespace py = pybind11;
using namespace compcent;

namespace {

InheritanceScheme scheme_from(const std::string& id_or_json) {
  for (const auto& id : InheritanceScheme::builtin_ids())
    if (id == id_or_json) return InheritanceScheme::builtin(id);
  return InheritanceScheme::from_json(nlohmann::json::parse(id_or_json));
}

std::string analyze_edges(const std::string& csv_text, const std::string& input_name, double threshold,
                          const std::string& scheme, const std::string& measures, std::uint64_t seed,
                          std::size_t replicates, std::optional<int> year) {
  std::istringstream in(csv_text);
  AnalysisOptions o;
  o.input_name = input_name;
  o.year = year;
  o.threshold = threshold;
  o.scheme = scheme_from(scheme);
  o.measure_set = parse_measure_set(measures);
  o.seed = seed;
  o.replicates = replicates;
  return dump_json(report_to_json(analyze(build_graph(parse_edge_list(in)), o)));
}

py::dict standardize_values(const std::vector<double>& values, const std::string& name, bool bigger) {
  const auto sm = standardize({name, values, bigger});
  const auto& p = *sm.transform;
  py::dict t;
  t["pre_shift"] = p.pre_shift;
  t["mean_scale"] = p.mean_scale;
  t["lambda"] = p.lambda ? py::cast(*p.lambda) : py::none();
  t["post_mean"] = p.post_mean;
  t["post_std"] = p.post_std;
  t["flipped"] = p.flipped;
  py::dict d;
  d["name"] = sm.name;
  d["values"] = sm.values;
  d["transform"] = t;
  return d;
}

py::dict gof_dict(const GoFReport& r) {
  py::dict d;
  d["test"] = r.test_name;
  d["statistic"] = r.statistic;
  d["p_value"] = r.p_value;
  d["replicates"] = r.replicates;
  d["seed"] = r.seed;
  d["decision"] = to_string(r.decision);
  return d;
}

std::vector<double> combine_values(const std::vector<std::vector<double>>& columns) {
  std::vector<StandardizedMeasure> ms;
  for (std::size_t k = 0; k < columns.size(); ++k)
    ms.push_back({"m" + std::to_string(k), columns[k], std::nullopt});
  return combine_set(ms).values;
}

std::string study_csv(const std::vector<std::size_t>& sizes, std::size_t p_realizations,
                      std::size_t ks_realizations, std::size_t replicates, std::uint64_t seed, bool control) {
  StudyOptions o;
  o.sizes = sizes;
  o.p_realizations = p_realizations;
  o.ks_realizations = ks_realizations;
  o.replicates = replicates;
  o.seed = seed;
  o.normal_control = control;
  return study_to_csv(gof_vs_n_study(o));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Composite centrality for weighted directed networks";
  m.attr("__version__") = COMPCENT_VERSION;

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<Degenerate>(m, "Degenerate", base.ptr());
  py::register_exception<NotConnected>(m, "NotConnected", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  m.def("analyze_edges", &analyze_edges, py::arg("csv_text"), py::arg("input_name") = "",
        py::arg("threshold") = kTradeBaseThreshold, py::arg("scheme") = "drt", py::arg("measures") = "sf",
        py::arg("seed") = 0, py::arg("replicates") = kDefaultReplicates, py::arg("year") = py::none(),
        "Run the full analysis on edge-list CSV text; returns the report as JSON text.");
  m.def("standardize", &standardize_values, py::arg("values"), py::arg("name") = "x",
        py::arg("bigger_is_better") = true);
  m.def("combine", &combine_values, py::arg("columns"),
        "Normalized sum of already standardized score vectors.");
  m.def("box_cox", &box_cox, py::arg("x"), py::arg("lam"));
  m.def("fit_lambda", [](const std::vector<double>& xs) { return fit_lambda(xs); }, py::arg("values"));
  m.def("skewness", [](const std::vector<double>& xs) { return skewness(xs); }, py::arg("values"));
  m.def("ks_statistic", [](const std::vector<double>& xs) { return ks_statistic(xs); }, py::arg("sample"));
  m.def(
      "ks_test",
      [](const std::vector<double>& xs, std::size_t replicates, std::uint64_t seed) {
        return gof_dict(ks_p_value(xs, replicates, seed));
      },
      py::arg("sample"), py::arg("replicates") = kDefaultReplicates, py::arg("seed") = 0);
  m.def(
      "anderson_darling", [](const std::vector<double>& xs) { return gof_dict(anderson_darling(xs)); },
      py::arg("sample"));
  m.def("study_csv", &study_csv, py::arg("sizes"), py::arg("p_realizations") = 10,
        py::arg("ks_realizations") = 100, py::arg("replicates") = kDefaultReplicates, py::arg("seed") = 0,
        py::arg("control") = false);
  m.def(
      "render_cdf", [](const std::vector<double>& xs, const std::string& title) { return render_cdf_overlay(xs, title); },
      py::arg("scores"), py::arg("title") = "");
  m.def("set_thread_count", &set_thread_count, py::arg("n"));
}
