#include "compcent/edge_list.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "compcent/errors.hpp"

namespace compcent {
namespace {

struct Field {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::string_view trim(std::string_view s, std::size_t& offset) {
  std::size_t a = 0, b = s.size();
  while (a < b && (s[a] == ' ' || s[a] == '\t')) ++a;
  while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\r')) --b;
  offset += a;
  return s.substr(a, b - a);
}

std::vector<Field> split(std::string_view line) {
  std::vector<Field> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? line.size() : comma;
    std::size_t offset = start;
    const auto text = trim(line.substr(start, end - start), offset);
    out.push_back({text, offset + 1});
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_number(const Field& f, std::size_t line, const char* what) {
  double value = 0.0;
  const char* first = f.text.data();
  const char* last = first + f.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (f.text.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw ParseError(std::string("non-numeric ") + what + " '" + std::string(f.text) + "'", line,
                     f.column);
  }
  return value;
}

template <typename RowFn>
void read_csv(std::istream& in, std::string_view header, RowFn&& on_row) {
  std::string raw;
  std::size_t line_no = 0;
  bool seen_header = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
    std::size_t ignored = 0;
    if (trim(line, ignored).empty()) continue;
    if (!seen_header) {
      std::string normalized;
      for (const auto& f : split(line)) {
        if (!normalized.empty()) normalized += ',';
        normalized += f.text;
      }
      if (normalized != header) {
        throw ParseError("expected header '" + std::string(header) + "'", line_no, 1);
      }
      seen_header = true;
      continue;
    }
    const auto fields = split(line);
    if (fields.size() != 3) {
      throw ParseError("expected 3 comma-separated fields, found " + std::to_string(fields.size()),
                       line_no, 1);
    }
    on_row(fields, line_no);
  }
  if (!seen_header) throw ParseError("missing header '" + std::string(header) + "'", 1, 1);
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

std::vector<LabeledEdge> parse_edge_list(std::istream& in) {
  std::vector<LabeledEdge> edges;
  std::set<std::pair<std::string, std::string>> seen;
  read_csv(in, "source,target,weight", [&](const std::vector<Field>& f, std::size_t line) {
    if (f[0].text.empty()) throw ParseError("empty source label", line, f[0].column);
    if (f[1].text.empty()) throw ParseError("empty target label", line, f[1].column);
    LabeledEdge e{std::string(f[0].text), std::string(f[1].text), parse_number(f[2], line, "weight")};
    if (!(e.weight > 0.0)) throw ParseError("non-positive weight", line, f[2].column);
    if (e.source == e.target) throw ParseError("self-loop on '" + e.source + "'", line, f[1].column);
    if (!seen.emplace(e.source, e.target).second) {
      throw ParseError("duplicate edge '" + e.source + "' -> '" + e.target + "'", line, 1);
    }
    edges.push_back(std::move(e));
  });
  return edges;
}

std::vector<LabeledEdge> parse_edge_list(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_edge_list(in);
}

std::map<int, double> parse_factor_file(std::istream& in) {
  std::map<int, double> factors;
  std::string raw;
  std::size_t line_no = 0;
  bool seen_header = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::size_t ignored = 0;
    std::string_view line(raw);
    if (trim(line, ignored).empty()) continue;
    const auto fields = split(line);
    if (!seen_header) {
      if (fields.size() != 2 || fields[0].text != "year" || fields[1].text != "factor") {
        throw ParseError("expected header 'year,factor'", line_no, 1);
      }
      seen_header = true;
      continue;
    }
    if (fields.size() != 2) throw ParseError("expected 2 comma-separated fields", line_no, 1);
    int year = 0;
    const auto& y = fields[0].text;
    const auto [ptr, ec] = std::from_chars(y.data(), y.data() + y.size(), year);
    if (y.empty() || ec != std::errc() || ptr != y.data() + y.size()) {
      throw ParseError("non-integer year '" + std::string(y) + "'", line_no, fields[0].column);
    }
    const double factor = parse_number(fields[1], line_no, "factor");
    if (!(factor > 0.0)) throw ParseError("non-positive factor", line_no, fields[1].column);
    if (!factors.emplace(year, factor).second) {
      throw ParseError("duplicate year " + std::to_string(year), line_no, fields[0].column);
    }
  }
  if (!seen_header) throw ParseError("missing header 'year,factor'", 1, 1);
  return factors;
}

std::map<int, double> parse_factor_file(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_factor_file(in);
}

double adjust_threshold(double base, double factor) {
  if (!(base > 0.0) || !(factor > 0.0)) throw InvalidInput("threshold and factor must be positive");
  return base * factor;
}

double adjust_threshold(double base, const std::map<int, double>& factors, int year) {
  const auto it = factors.find(year);
  if (it == factors.end()) throw InvalidInput("no threshold factor for year " + std::to_string(year));
  return adjust_threshold(base, it->second);
}

}  // namespace compcent
