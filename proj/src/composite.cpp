#include "compcent/composite.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "compcent/errors.hpp"
#include "compcent/measures.hpp"

namespace compcent {
namespace {

struct Normalized {
  std::vector<double> values;
  double sigma = 0.0;
};

/// sum / sigma_s(sum); Degenerate when the sum is (numerically) constant.
Normalized normalize_sum(std::vector<double> sum, double input_scale) {
  const double sigma = sample_std(sum);
  if (!(sigma > 1e-12 * input_scale)) throw Degenerate("combination of measures is constant");
  for (double& v : sum) v /= sigma;
  return {std::move(sum), sigma};
}

double rms(const std::vector<double>& v) {
  double ss = 0.0;
  for (double x : v) ss += x * x;
  return std::sqrt(ss / static_cast<double>(v.size()));
}

Normalized combine_values(std::span<const StandardizedMeasure* const> parts) {
  const std::size_t n = parts.front()->values.size();
  if (n < 2) throw InvalidInput("combination needs at least 2 graph nodes");
  std::vector<double> sum(n, 0.0);
  double scale = 0.0;
  for (const auto* m : parts) {
    if (m->values.size() != n) throw InvalidInput("combined measures differ in length");
    for (std::size_t i = 0; i < n; ++i) sum[i] += m->values[i];
    scale += rms(m->values);
  }
  return normalize_sum(std::move(sum), scale);
}

std::string joined_name(std::span<const StandardizedMeasure* const> parts) {
  std::string name = "(";
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) name += "+";
    name += parts[k]->name;
  }
  return name + ")";
}

// Scheme over the eight direction/range/texture codes that merges the
// attributes in `merge_order` (positions 0 = D, 1 = R, 2 = T), first entry first.
nlohmann::json drt_family_tree(std::array<int, 3> merge_order) {
  static const std::array<std::array<std::string, 2>, 3> kValues = {
      {{"IN", "OUT"}, {"LO", "SH"}, {"QL", "QN"}}};
  std::array<int, 3> top_down = {merge_order[2], merge_order[1], merge_order[0]};
  std::function<nlohmann::json(std::array<int, 3>, int)> build =
      [&](std::array<int, 3> assign, int depth) -> nlohmann::json {
    std::string name;
    for (int a = 0; a < 3; ++a) {
      if (assign[a] < 0) continue;
      if (!name.empty()) name += "-";
      name += kValues[a][assign[a]];
    }
    if (depth == 3) return {{"name", name}};
    nlohmann::json node = {{"name", depth == 0 ? std::string("COMP") : name}};
    const int attr = top_down[depth];
    for (int v = 0; v < 2; ++v) {
      auto child = assign;
      child[attr] = v;
      node["children"].push_back(build(child, depth + 1));
    }
    return node;
  };
  return build({-1, -1, -1}, 0);
}

}  // namespace

StandardizedMeasure combine(const StandardizedMeasure& a, const StandardizedMeasure& b,
                            std::string name) {
  const std::array<const StandardizedMeasure*, 2> parts = {&a, &b};
  auto r = combine_values(parts);
  if (name.empty()) name = joined_name(parts);
  return {std::move(name), std::move(r.values), std::nullopt};
}

StandardizedMeasure combine_set(std::span<const StandardizedMeasure> ms, std::string name) {
  if (ms.size() < 2) throw InvalidInput("combine_set needs at least 2 measures");
  std::vector<const StandardizedMeasure*> parts;
  for (const auto& m : ms) parts.push_back(&m);
  auto r = combine_values(parts);
  if (name.empty()) name = joined_name(parts);
  return {std::move(name), std::move(r.values), std::nullopt};
}

InheritanceScheme InheritanceScheme::from_json(const nlohmann::json& j) {
  InheritanceScheme s;
  std::set<std::string> names;
  std::function<int(const nlohmann::json&, int)> parse = [&](const nlohmann::json& node,
                                                              int parent) -> int {
    if (!node.is_object() || !node.contains("name") || !node["name"].is_string()) {
      throw InvalidInput("scheme node must be an object with a string 'name'");
    }
    const std::string name = node["name"].get<std::string>();
    if (name.empty()) throw InvalidInput("scheme node name is empty");
    if (!names.insert(name).second) throw InvalidInput("duplicate scheme node '" + name + "'");
    const int index = static_cast<int>(s.nodes_.size());
    s.nodes_.push_back({name, -1, -1, parent, 1});
    if (node.contains("children")) {
      const auto& children = node["children"];
      if (!children.is_array() || children.size() != 2) {
        throw InvalidInput("scheme node '" + name + "' must have exactly two children");
      }
      const int left = parse(children[0], index);
      const int right = parse(children[1], index);
      auto& self = s.nodes_[static_cast<std::size_t>(index)];
      self.left = left;
      self.right = right;
      self.generation = 1 + std::max(s.nodes_[static_cast<std::size_t>(left)].generation,
                                     s.nodes_[static_cast<std::size_t>(right)].generation);
    }
    return index;
  };
  s.root_ = static_cast<std::size_t>(parse(j, -1));
  if (s.nodes_.size() < 3) throw InvalidInput("scheme must combine at least two measures");
  if (j.contains("id") && j["id"].is_string()) s.id_ = j["id"].get<std::string>();
  return s;
}

nlohmann::json InheritanceScheme::to_json() const {
  std::function<nlohmann::json(std::size_t)> emit = [&](std::size_t i) -> nlohmann::json {
    const Node& n = nodes_[i];
    nlohmann::json out = {{"name", n.name}};
    if (!n.is_leaf()) {
      out["children"] = nlohmann::json::array(
          {emit(static_cast<std::size_t>(n.left)), emit(static_cast<std::size_t>(n.right))});
    }
    return out;
  };
  return emit(root_);
}

InheritanceScheme InheritanceScheme::builtin(std::string_view id) {
  std::array<int, 3> order{};
  if (id == "drt") {
    order = {2, 1, 0};
  } else if (id == "rtd") {
    order = {0, 2, 1};
  } else if (id == "tdr") {
    order = {1, 0, 2};
  } else {
    throw InvalidInput("unknown built-in scheme '" + std::string(id) + "'");
  }
  auto s = from_json(drt_family_tree(order));
  s.id_ = std::string(id);
  return s;
}

std::vector<std::string> InheritanceScheme::builtin_ids() { return {"drt", "rtd", "tdr"}; }

std::vector<std::string> InheritanceScheme::leaves() const {
  std::vector<std::string> out;
  for (std::size_t i : post_order()) {
    if (nodes_[i].is_leaf()) out.push_back(nodes_[i].name);
  }
  return out;
}

void InheritanceScheme::rename_leaf(const std::string& from, const std::string& to) {
  Node* target = nullptr;
  for (auto& n : nodes_) {
    if (n.name == to) throw InvalidInput("scheme already has a node named '" + to + "'");
    if (n.name == from && n.is_leaf()) target = &n;
  }
  if (!target) throw InvalidInput("scheme has no leaf named '" + from + "'");
  target->name = to;
}

std::vector<std::size_t> InheritanceScheme::post_order() const {
  std::vector<std::size_t> order;
  order.reserve(nodes_.size());
  std::function<void(std::size_t)> visit = [&](std::size_t i) {
    const Node& n = nodes_[i];
    if (!n.is_leaf()) {
      visit(static_cast<std::size_t>(n.left));
      visit(static_cast<std::size_t>(n.right));
    }
    order.push_back(i);
  };
  visit(root_);
  return order;
}

const GenerationScores::Entry& GenerationScores::find(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return e;
  }
  throw InvalidInput("no scheme node named '" + std::string(name) + "'");
}

GenerationScores run_scheme(const InheritanceScheme& scheme,
                            std::span<const StandardizedMeasure> g1) {
  std::map<std::string, const StandardizedMeasure*> by_name;
  for (const auto& m : g1) {
    if (!by_name.emplace(m.name, &m).second) {
      throw InvalidInput("duplicate input measure '" + m.name + "'");
    }
  }
  const auto leaves = scheme.leaves();
  if (leaves.size() != g1.size()) {
    throw InvalidInput("scheme has " + std::to_string(leaves.size()) + " leaves but " +
                       std::to_string(g1.size()) + " measures were given");
  }

  const auto& nodes = scheme.nodes();
  GenerationScores out;
  out.root = scheme.root();
  out.entries.resize(nodes.size());
  for (std::size_t i : scheme.post_order()) {
    const auto& node = nodes[i];
    auto& entry = out.entries[i];
    entry.name = node.name;
    entry.generation = node.generation;
    if (node.is_leaf()) {
      const auto it = by_name.find(node.name);
      if (it == by_name.end()) throw InvalidInput("no measure for scheme leaf '" + node.name + "'");
      entry.measure = *it->second;
      entry.normalizer = 1.0;
      continue;
    }
    const auto& left = out.entries[static_cast<std::size_t>(node.left)].measure;
    const auto& right = out.entries[static_cast<std::size_t>(node.right)].measure;
    const std::array<const StandardizedMeasure*, 2> parts = {&left, &right};
    auto r = combine_values(parts);
    entry.measure = {node.name, std::move(r.values), std::nullopt};
    entry.normalizer = r.sigma;
  }

  // Top-down: scale[i] = product of the normalizers of i's ancestors.
  std::vector<double> scale(nodes.size(), 1.0);
  const auto order = scheme.post_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto& node = nodes[*it];
    if (node.parent >= 0) {
      const auto p = static_cast<std::size_t>(node.parent);
      scale[*it] = scale[p] / out.entries[p].normalizer;
    }
    auto& entry = out.entries[*it];
    entry.display_height = entry.measure.values;
    for (double& h : entry.display_height) h *= scale[*it];
  }
  return out;
}

double scheme_invariance(std::span<const StandardizedMeasure> g1,
                         std::span<const InheritanceScheme> schemes) {
  if (schemes.size() < 2) throw InvalidInput("scheme invariance needs at least 2 schemes");
  std::vector<std::vector<double>> roots;
  for (const auto& s : schemes) roots.push_back(run_scheme(s, g1).root_entry().measure.values);
  double worst = 0.0;
  for (std::size_t a = 0; a < roots.size(); ++a) {
    for (std::size_t b = a + 1; b < roots.size(); ++b) {
      for (std::size_t i = 0; i < roots[a].size(); ++i) {
        worst = std::max(worst, std::abs(roots[a][i] - roots[b][i]));
      }
    }
  }
  return worst;
}

}  // namespace compcent
