// compcent: composite-centrality analysis of weighted directed networks.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "compcent/analysis.hpp"
#include "compcent/edge_list.hpp"
#include "compcent/errors.hpp"
#include "compcent/parallel.hpp"
#include "compcent/simulate.hpp"
#include "compcent/svg.hpp"

namespace {

using namespace compcent;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << text;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

InheritanceScheme load_scheme(const std::string& id) {
  for (const auto& b : InheritanceScheme::builtin_ids()) {
    if (b == id) return InheritanceScheme::builtin(id);
  }
  auto scheme = InheritanceScheme::from_json(nlohmann::json::parse(slurp(id)));
  if (scheme.id().empty()) scheme.set_id(std::filesystem::path(id).stem().string());
  return scheme;
}

AnalysisReport load_report(const std::string& path) {
  return report_from_json(nlohmann::json::parse(slurp(path)));
}

std::vector<double> read_numbers(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::vector<double> xs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      std::size_t used = 0;
      xs.push_back(std::stod(line, &used));
      if (line.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError("not a number", line_no, 1);
    }
  }
  return xs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Composite centrality for weighted directed networks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(COMPCENT_VERSION));
  std::size_t threads = 0;
  app.add_option("--threads", threads, "Worker threads (default: all cores)");

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "Run the full pipeline on an edge list");
  std::string edges_path, factor_path, scheme_id = "drt", measures = "sf", out_path;
  double threshold = kTradeBaseThreshold;
  std::optional<int> year;
  std::uint64_t seed = 0;
  std::size_t replicates = kDefaultReplicates;
  analyze_cmd->add_option("--edges", edges_path, "Edge list CSV (source,target,weight)")
      ->required()
      ->check(CLI::ExistingFile);
  analyze_cmd->add_option("--threshold", threshold, "Base edge threshold")->capture_default_str();
  auto* factor_opt =
      analyze_cmd->add_option("--factor-file", factor_path, "Per-year threshold factors (year,factor)")
          ->check(CLI::ExistingFile);
  auto* year_opt = analyze_cmd->add_option("--year", year, "Year tag of the input");
  factor_opt->needs(year_opt);
  analyze_cmd->add_option("--scheme", scheme_id, "Built-in scheme (drt, rtd, tdr) or JSON file")
      ->capture_default_str();
  analyze_cmd->add_option("--measures", measures, "Measure set")
      ->check(CLI::IsMember({"sf", "alt"}))
      ->capture_default_str();
  analyze_cmd->add_option("--seed", seed, "Seed for Monte-Carlo tests")->capture_default_str();
  analyze_cmd->add_option("--replicates", replicates, "KS Monte-Carlo replicates")
      ->capture_default_str();
  analyze_cmd->add_option("--out", out_path, "Report JSON (default: stdout)");

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "Goodness-of-fit versus sample size study");
  StudyOptions study;
  bool exp_rate = false;
  std::string sim_out;
  sim_cmd->add_option("--sizes", study.sizes, "Sample sizes")->delimiter(',')->capture_default_str();
  sim_cmd->add_option("--p-realizations", study.p_realizations, "Realizations for p-values")
      ->capture_default_str();
  sim_cmd->add_option("--ks-realizations", study.ks_realizations,
                      "Realizations for KS statistics")
      ->capture_default_str();
  sim_cmd->add_option("--replicates", study.replicates, "KS Monte-Carlo replicates")
      ->capture_default_str();
  sim_cmd->add_option("--seed", study.seed, "Master seed")->capture_default_str();
  sim_cmd->add_flag("--control", study.normal_control, "Use five i.i.d. standard normals");
  sim_cmd->add_flag("--exp-rate", exp_rate, "Read the exponential parameter as a rate");
  sim_cmd->add_option("--out", sim_out, "Output stem; writes <stem>.csv and <stem>.json");

  // ngfp
  auto* ngfp_cmd = app.add_subcommand("ngfp", "Render a node's genetic fingerprint as SVG");
  std::vector<std::string> report_paths;
  std::string node, svg_out;
  ngfp_cmd->add_option("--report", report_paths, "Analysis report JSON (repeatable)")
      ->required()
      ->check(CLI::ExistingFile);
  ngfp_cmd->add_option("--node", node, "Node label")->required();
  ngfp_cmd->add_option("--out", svg_out, "SVG file (default: stdout)");

  // cdf
  auto* cdf_cmd = app.add_subcommand("cdf", "Empirical CDF of composite scores against N(0,1)");
  std::vector<std::string> cdf_reports;
  std::string scores_path, title, cdf_out;
  auto* cdf_rep = cdf_cmd->add_option("--report", cdf_reports, "Reports to pool (repeatable)")
                      ->check(CLI::ExistingFile);
  auto* cdf_scores =
      cdf_cmd->add_option("--scores", scores_path, "Text file, one score per line")
          ->check(CLI::ExistingFile);
  cdf_rep->excludes(cdf_scores);
  cdf_cmd->add_option("--title", title, "Chart title");
  cdf_cmd->add_option("--out", cdf_out, "SVG file (default: stdout)");

  // standardize
  auto* std_cmd = app.add_subcommand("standardize", "Standardize a raw value vector");
  std::string input_path, name = "measure", std_out;
  bool lower_is_better = false;
  std_cmd->add_option("--input", input_path, "Text file, one value per line")
      ->required()
      ->check(CLI::ExistingFile);
  std_cmd->add_option("--name", name, "Measure name")->capture_default_str();
  std_cmd->add_flag("--lower-is-better", lower_is_better, "Negate after standardizing");
  std_cmd->add_option("--out", std_out, "JSON file (default: stdout)");

  CLI11_PARSE(app, argc, argv);
  if (threads > 0) set_thread_count(threads);

  try {
    if (*analyze_cmd) {
      AnalysisOptions options;
      options.input_name = edges_path;
      options.year = year;
      options.threshold = threshold;
      if (!factor_path.empty()) {
        options.threshold = adjust_threshold(threshold, parse_factor_file(factor_path), *year);
      }
      options.scheme = load_scheme(scheme_id);
      options.measure_set = parse_measure_set(measures);
      options.seed = seed;
      options.replicates = replicates;
      const auto edges = parse_edge_list(std::filesystem::path(edges_path));
      const auto report = analyze(build_graph(edges), options);
      write_output(out_path, dump_json(report_to_json(report)));
    } else if (*sim_cmd) {
      if (exp_rate) study.spec.exponential_param = ArbMeasureSpec::ExponentialParam::Rate;
      const auto result = gof_vs_n_study(study);
      if (sim_out.empty()) {
        std::cout << study_to_csv(result);
      } else {
        write_output(sim_out + ".csv", study_to_csv(result));
        write_output(sim_out + ".json", dump_json(study_to_json(result)));
      }
    } else if (*ngfp_cmd) {
      std::vector<AnalysisReport> reports;
      for (const auto& p : report_paths) reports.push_back(load_report(p));
      write_output(svg_out, render_ngfp(reports, node));
    } else if (*cdf_cmd) {
      std::vector<double> scores;
      if (!scores_path.empty()) {
        scores = read_numbers(scores_path);
      } else if (!cdf_reports.empty()) {
        for (const auto& p : cdf_reports) {
          const auto& root = load_report(p).root();
          scores.insert(scores.end(), root.values.begin(), root.values.end());
        }
      } else {
        throw InvalidInput("cdf needs --report or --scores");
      }
      write_output(cdf_out, render_cdf_overlay(scores, title));
    } else if (*std_cmd) {
      const MeasureVector m{name, read_numbers(input_path), !lower_is_better};
      const auto sm = standardize(m);
      const auto& p = *sm.transform;
      nlohmann::json j = {
          {"name", sm.name},
          {"values", sm.values},
          {"transform",
           {{"pre_shift", p.pre_shift},
            {"mean_scale", p.mean_scale},
            {"lambda", p.lambda ? nlohmann::json(*p.lambda) : nlohmann::json(nullptr)},
            {"post_mean", p.post_mean},
            {"post_std", p.post_std},
            {"flipped", p.flipped}}}};
      write_output(std_out, dump_json(j));
    }
  } catch (const std::exception& e) {
    std::cerr << "compcent: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
