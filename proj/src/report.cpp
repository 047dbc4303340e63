#include "compcent/analysis.hpp"
#include "compcent/errors.hpp"

namespace compcent {
namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

json summary_json(const GraphSummary& s) {
  return {{"nodes", s.nodes},
          {"edges", s.edges},
          {"diameter", s.diameter},
          {"mean_aspl", s.mean_aspl},
          {"mean_maxflow", s.mean_maxflow},
          {"mean_degree", s.mean_degree},
          {"mean_strength", s.mean_strength},
          {"asymmetry", s.asymmetry},
          {"edge_density", s.edge_density},
          {"mean_clustering", s.mean_clustering},
          {"algebraic_connectivity", s.algebraic_connectivity},
          {"assortativity", optional_json(s.assortativity)},
          {"coverage", s.coverage}};
}

GraphSummary summary_from(const json& j) {
  GraphSummary s;
  s.nodes = j.at("nodes").get<std::size_t>();
  s.edges = j.at("edges").get<std::size_t>();
  s.diameter = j.at("diameter").get<std::size_t>();
  s.mean_aspl = j.at("mean_aspl").get<double>();
  s.mean_maxflow = j.at("mean_maxflow").get<double>();
  s.mean_degree = j.at("mean_degree").get<double>();
  s.mean_strength = j.at("mean_strength").get<double>();
  s.asymmetry = j.at("asymmetry").get<double>();
  s.edge_density = j.at("edge_density").get<double>();
  s.mean_clustering = j.at("mean_clustering").get<double>();
  s.algebraic_connectivity = j.at("algebraic_connectivity").get<double>();
  s.assortativity = optional_from<double>(j.at("assortativity"));
  s.coverage = j.at("coverage").get<double>();
  return s;
}

json transform_json(const TransformParams& p) {
  return {{"pre_shift", p.pre_shift},   {"mean_scale", p.mean_scale},
          {"lambda", optional_json(p.lambda)}, {"post_mean", p.post_mean},
          {"post_std", p.post_std},     {"flipped", p.flipped}};
}

TransformParams transform_from(const json& j) {
  TransformParams p;
  p.pre_shift = j.at("pre_shift").get<double>();
  p.mean_scale = j.at("mean_scale").get<double>();
  p.lambda = optional_from<double>(j.at("lambda"));
  p.post_mean = j.at("post_mean").get<double>();
  p.post_std = j.at("post_std").get<double>();
  p.flipped = j.at("flipped").get<bool>();
  return p;
}

}  // namespace

json report_to_json(const AnalysisReport& r) {
  json raw = json::array();
  for (std::size_t k = 0; k < r.raw_measures.size(); ++k) {
    const auto& m = r.raw_measures[k];
    raw.push_back({{"name", m.name},
                   {"bigger_is_better", m.bigger_is_better},
                   {"values", m.values},
                   {"transform", transform_json(r.transforms.at(k))}});
  }
  json generations = json::array();
  for (const auto& n : r.scheme_nodes) {
    generations.push_back({{"name", n.name},
                           {"generation", n.generation},
                           {"normalizer", n.normalizer},
                           {"values", n.values},
                           {"display_height", n.display_height}});
  }
  json gof = json::array();
  for (const auto& g : r.gof) {
    gof.push_back({{"measure", g.measure},
                   {"test", g.report.test_name},
                   {"statistic", g.report.statistic},
                   {"p_value", g.report.p_value},
                   {"replicates", g.report.replicates},
                   {"seed", g.report.seed},
                   {"decision", to_string(g.report.decision)}});
  }
  return {{"schema_version", kSchemaVersion},
          {"tool_version", r.tool_version},
          {"seed", r.seed},
          {"replicates", r.replicates},
          {"input",
           {{"file", r.input_name},
            {"year", optional_json(r.year)},
            {"threshold", r.threshold},
            {"measure_set", to_string(r.measure_set)},
            {"replaced_measure", optional_json(r.replaced_measure)}}},
          {"summary", r.summary ? summary_json(*r.summary) : json(nullptr)},
          {"nodes", r.nodes},
          {"raw_measures", raw},
          {"scheme", {{"id", r.scheme_id}, {"tree", r.scheme_tree}}},
          {"generations", generations},
          {"gof", gof}};
}

AnalysisReport report_from_json(const json& j) {
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion) {
      throw InvalidInput("unsupported report schema version");
    }
    AnalysisReport r;
    r.tool_version = j.at("tool_version").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.replicates = j.at("replicates").get<std::size_t>();
    const auto& in = j.at("input");
    r.input_name = in.at("file").get<std::string>();
    r.year = optional_from<int>(in.at("year"));
    r.threshold = in.at("threshold").get<double>();
    r.measure_set = parse_measure_set(in.at("measure_set").get<std::string>());
    r.replaced_measure = optional_from<std::string>(in.at("replaced_measure"));
    if (!j.at("summary").is_null()) r.summary = summary_from(j.at("summary"));
    r.nodes = j.at("nodes").get<std::vector<std::string>>();
    for (const auto& m : j.at("raw_measures")) {
      r.raw_measures.push_back({m.at("name").get<std::string>(),
                                m.at("values").get<std::vector<double>>(),
                                m.at("bigger_is_better").get<bool>()});
      r.transforms.push_back(transform_from(m.at("transform")));
    }
    r.scheme_id = j.at("scheme").at("id").get<std::string>();
    r.scheme_tree = j.at("scheme").at("tree");
    for (const auto& g : j.at("generations")) {
      r.scheme_nodes.push_back({g.at("name").get<std::string>(), g.at("generation").get<int>(),
                                g.at("normalizer").get<double>(),
                                g.at("values").get<std::vector<double>>(),
                                g.at("display_height").get<std::vector<double>>()});
    }
    if (r.scheme_nodes.empty()) throw InvalidInput("report has no scheme scores");
    for (const auto& g : j.at("gof")) {
      GoFReport rep;
      rep.test_name = g.at("test").get<std::string>();
      rep.statistic = g.at("statistic").get<double>();
      rep.p_value = g.at("p_value").get<double>();
      rep.replicates = g.at("replicates").get<std::size_t>();
      rep.seed = g.at("seed").get<std::uint64_t>();
      const auto decision = g.at("decision").get<std::string>();
      if (decision != "accept" && decision != "reject") throw InvalidInput("bad decision value");
      rep.decision = decision == "accept" ? Decision::Accept : Decision::Reject;
      r.gof.push_back({g.at("measure").get<std::string>(), std::move(rep)});
    }
    return r;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed analysis report: ") + e.what());
  }
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace compcent
