#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <vector>

#include "compcent/graph.hpp"

namespace compcent {

/// Default base threshold for trade-style inputs (currency units).
inline constexpr double kTradeBaseThreshold = 1e7;
/// Default base threshold for migration-style inputs (persons).
inline constexpr double kMigrationBaseThreshold = 2000.0;

/// Reads `source,target,weight` CSV. Throws ParseError with the line and
/// column of a missing header, malformed row, non-positive weight,
/// self-loop or repeated (source, target) pair.
std::vector<LabeledEdge> parse_edge_list(std::istream& in);
std::vector<LabeledEdge> parse_edge_list(const std::filesystem::path& path);

/// Reads `year,factor` CSV with strictly positive factors.
std::map<int, double> parse_factor_file(std::istream& in);
std::map<int, double> parse_factor_file(const std::filesystem::path& path);

double adjust_threshold(double base, double factor);

/// base * factors[year]; throws InvalidInput when the year is missing.
double adjust_threshold(double base, const std::map<int, double>& factors, int year);

}  // namespace compcent
