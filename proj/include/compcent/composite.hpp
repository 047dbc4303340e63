#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "compcent/standardize.hpp"

namespace compcent {

/// (a + b) / sigma_s(a + b). Throws Degenerate when a + b is constant and
/// InvalidInput on a length mismatch.
StandardizedMeasure combine(const StandardizedMeasure& a, const StandardizedMeasure& b,
                            std::string name = {});

/// Flat sum of all inputs, renormalised once.
StandardizedMeasure combine_set(std::span<const StandardizedMeasure> ms, std::string name = {});

/// Full binary tree over measure names. Leaves are first-generation
/// measures; internal nodes are named abstract measures.
class InheritanceScheme {
 public:
  struct Node {
    std::string name;
    int left = -1;  // child indices into nodes(), -1 for leaves
    int right = -1;
    int parent = -1;
    int generation = 1;  // 1 for leaves, 1 + max child generation otherwise

    bool is_leaf() const noexcept { return left < 0; }
  };

  /// Parses {"name": ..., "children": [left, right]}; leaves omit children.
  /// Throws InvalidInput on non-binary nodes or duplicate names.
  static InheritanceScheme from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  /// Built-in trees over the eight standard codes: "drt" combines texture
  /// first, then range, then direction; "rtd" and "tdr" rotate that order.
  static InheritanceScheme builtin(std::string_view id);
  static std::vector<std::string> builtin_ids();

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  std::size_t root() const noexcept { return root_; }
  int generations() const noexcept { return nodes_.at(root_).generation; }

  /// Leaf names in left-to-right order.
  std::vector<std::string> leaves() const;

  /// Renames a leaf in place. Throws InvalidInput if absent or clashing.
  void rename_leaf(const std::string& from, const std::string& to);

  /// Nodes in post-order (children before parents, left before right).
  std::vector<std::size_t> post_order() const;

  const std::string& id() const noexcept { return id_; }
  void set_id(std::string id) { id_ = std::move(id); }

 private:
  std::vector<Node> nodes_;
  std::size_t root_ = 0;
  std::string id_;
};

/// Scores of every tree node plus the per-node bar heights used by the
/// genetic fingerprint chart.
struct GenerationScores {
  struct Entry {
    std::string name;
    int generation = 1;
    StandardizedMeasure measure;
    double normalizer = 1.0;  // sigma_s of the child sum; 1 for leaves
    std::vector<double> display_height;
  };
  std::vector<Entry> entries;  // aligned with InheritanceScheme::nodes()
  std::size_t root = 0;

  const Entry& root_entry() const { return entries.at(root); }
  const Entry& find(std::string_view name) const;
};

/// Combines `g1` bottom-up along `scheme`. display_height of a node is its
/// value divided by the product of the normalizers of all its ancestors, so
/// sibling heights add up to the parent's height.
GenerationScores run_scheme(const InheritanceScheme& scheme,
                            std::span<const StandardizedMeasure> g1);

/// Largest |root_i - root_j| over scheme pairs and graph nodes.
double scheme_invariance(std::span<const StandardizedMeasure> g1,
                         std::span<const InheritanceScheme> schemes);

}  // namespace compcent
