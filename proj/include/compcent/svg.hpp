#pragma once

#include <span>
#include <string>

#include "compcent/analysis.hpp"

namespace compcent {

/// Genetic-fingerprint chart of one node across reports (one bar group per
/// report). Inside a group, columns run from the top generation down to the
/// first; each column stacks the node's display heights of that generation,
/// positives above and negatives below a zero baseline.
/// Throws InvalidInput if the node is missing or the schemes differ.
std::string render_ngfp(std::span<const AnalysisReport> reports, const std::string& node);

/// Empirical CDF of `scores` as a step line, overlaid with the standard
/// normal CDF and annotated with the KS distance. Needs at least 5 scores.
std::string render_cdf_overlay(std::span<const double> scores, const std::string& title = {});

}  // namespace compcent
