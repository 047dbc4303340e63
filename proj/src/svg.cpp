#include "compcent/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "compcent/errors.hpp"
#include "compcent/gof.hpp"

namespace compcent {
namespace {

constexpr std::array<const char*, 12> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#ad494a"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string group_label(const AnalysisReport& r, std::size_t k) {
  if (r.year) return std::to_string(*r.year);
  if (!r.input_name.empty()) return r.input_name;
  return "#" + std::to_string(k + 1);
}

}  // namespace

std::string render_ngfp(std::span<const AnalysisReport> reports, const std::string& node) {
  if (reports.empty()) throw InvalidInput("fingerprint needs at least one report");
  const auto& tree = reports.front().scheme_tree;
  for (const auto& r : reports) {
    if (r.scheme_tree != tree) throw InvalidInput("fingerprint reports use different schemes");
  }

  const auto& layout = reports.front().scheme_nodes;
  int top = 1;
  for (const auto& s : layout) top = std::max(top, s.generation);

  // heights[report][generation column][segment]
  struct Segment {
    std::size_t scheme_index;
    double height;
  };
  std::vector<std::vector<std::vector<Segment>>> bars(reports.size());
  double extent = 0.0;
  for (std::size_t k = 0; k < reports.size(); ++k) {
    const auto& r = reports[k];
    const auto it = std::find(r.nodes.begin(), r.nodes.end(), node);
    if (it == r.nodes.end()) {
      throw InvalidInput("node '" + node + "' missing from report " + group_label(r, k));
    }
    const auto idx = static_cast<std::size_t>(it - r.nodes.begin());
    bars[k].resize(static_cast<std::size_t>(top));
    for (int g = top; g >= 1; --g) {
      auto& column = bars[k][static_cast<std::size_t>(top - g)];
      double pos = 0.0, neg = 0.0;
      for (std::size_t s = 0; s < r.scheme_nodes.size(); ++s) {
        if (r.scheme_nodes[s].generation != g) continue;
        const double h = r.scheme_nodes[s].display_height.at(idx);
        column.push_back({s, h});
        (h >= 0.0 ? pos : neg) += h;
      }
      extent = std::max({extent, pos, -neg});
    }
  }
  if (extent <= 0.0) extent = 1.0;

  constexpr double kBar = 16.0, kBarGap = 4.0, kGroupGap = 28.0, kLeft = 50.0;
  constexpr double kHalf = 140.0, kTop = 40.0, kLegendWidth = 150.0;
  const double group_width = static_cast<double>(top) * (kBar + kBarGap) - kBarGap;
  const double plot_width =
      static_cast<double>(reports.size()) * (group_width + kGroupGap) - kGroupGap;
  const double width = kLeft + plot_width + 20.0 + kLegendWidth;
  const double baseline = kTop + kHalf;
  const double height = kTop + 2.0 * kHalf + 50.0;
  const double scale = kHalf / extent;

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" "
      "viewBox=\"0 0 {:.0f} {:.0f}\" font-family=\"sans-serif\" font-size=\"11\">\n",
      width, height, width, height);
  svg += fmt::format("<rect width=\"{:.0f}\" height=\"{:.0f}\" fill=\"white\"/>\n", width, height);
  svg += fmt::format("<text x=\"{:.1f}\" y=\"20\" font-size=\"13\">Fingerprint: {}</text>\n", kLeft,
                     escape(node));
  svg += fmt::format(
      "<text x=\"10\" y=\"{:.1f}\" text-anchor=\"middle\" transform=\"rotate(-90 10 {:.1f})\">"
      "height [sigma], scale {:.3f}</text>\n",
      baseline, baseline, extent);

  for (std::size_t k = 0; k < reports.size(); ++k) {
    const double x0 = kLeft + static_cast<double>(k) * (group_width + kGroupGap);
    for (std::size_t c = 0; c < bars[k].size(); ++c) {
      const double x = x0 + static_cast<double>(c) * (kBar + kBarGap);
      double up = baseline, down = baseline;
      for (const auto& seg : bars[k][c]) {
        const double h = std::abs(seg.height) * scale;
        double y;
        if (seg.height >= 0.0) {
          up -= h;
          y = up;
        } else {
          y = down;
          down += h;
        }
        svg += fmt::format(
            "<rect class=\"{}\" x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" "
            "fill=\"{}\" stroke=\"white\" stroke-width=\"0.5\"><title>{} {:.4f}</title></rect>\n",
            seg.height >= 0.0 ? "pos" : "neg", x, y, kBar, h, kPalette[seg.scheme_index % kPalette.size()],
            escape(reports[k].scheme_nodes[seg.scheme_index].name), seg.height);
      }
      svg += fmt::format(
          "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\" font-size=\"9\">G{}</text>\n",
          x + kBar / 2.0, baseline + kHalf + 14.0, top - static_cast<int>(c));
    }
    svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n",
                       x0 + group_width / 2.0, baseline + kHalf + 32.0,
                       escape(group_label(reports[k], k)));
  }
  svg += fmt::format(
      "<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"black\" "
      "stroke-width=\"1.5\"/>\n",
      kLeft - 6.0, baseline, kLeft + plot_width + 6.0, baseline);

  const double lx = kLeft + plot_width + 24.0;
  for (std::size_t s = 0; s < layout.size(); ++s) {
    const double ly = kTop + static_cast<double>(s) * 14.0;
    svg += fmt::format(
        "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"10\" height=\"10\" fill=\"{}\"/>"
        "<text x=\"{:.2f}\" y=\"{:.2f}\">G{} {}</text>\n",
        lx, ly, kPalette[s % kPalette.size()], lx + 14.0, ly + 9.0, layout[s].generation,
        escape(layout[s].name));
  }
  svg += "</svg>\n";
  return svg;
}

std::string render_cdf_overlay(std::span<const double> scores, const std::string& title) {
  if (scores.size() < 5) throw InvalidInput("CDF overlay needs at least 5 scores");
  std::vector<double> x(scores.begin(), scores.end());
  std::sort(x.begin(), x.end());
  const double d = ks_statistic(x);
  const std::size_t n = x.size();

  // Location of the largest gap, for the marker.
  double gap_x = x.front(), gap_lo = 0.0, gap_hi = 0.0, best = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double cdf = normal_cdf(x[i]);
    const double above = static_cast<double>(i + 1) / static_cast<double>(n);
    const double below = static_cast<double>(i) / static_cast<double>(n);
    if (above - cdf > best) {
      best = above - cdf;
      gap_x = x[i];
      gap_lo = cdf;
      gap_hi = above;
    }
    if (cdf - below > best) {
      best = cdf - below;
      gap_x = x[i];
      gap_lo = below;
      gap_hi = cdf;
    }
  }

  const double xmin = std::floor(std::min(-4.0, x.front())) - 0.5;
  const double xmax = std::ceil(std::max(4.0, x.back())) + 0.5;
  constexpr double kLeft = 50.0, kTop = 30.0, kW = 440.0, kH = 280.0;
  auto px = [&](double v) { return kLeft + (v - xmin) / (xmax - xmin) * kW; };
  auto py = [&](double p) { return kTop + (1.0 - p) * kH; };

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" "
      "viewBox=\"0 0 {:.0f} {:.0f}\" font-family=\"sans-serif\" font-size=\"11\" "
      "data-ks=\"{}\" data-n=\"{}\">\n",
      kLeft + kW + 20.0, kTop + kH + 45.0, kLeft + kW + 20.0, kTop + kH + 45.0, d, n);
  svg += fmt::format("<rect width=\"{:.0f}\" height=\"{:.0f}\" fill=\"white\"/>\n",
                     kLeft + kW + 20.0, kTop + kH + 45.0);
  if (!title.empty()) {
    svg += fmt::format("<text x=\"{:.1f}\" y=\"18\" font-size=\"13\">{}</text>\n", kLeft,
                       escape(title));
  }
  svg += fmt::format(
      "<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"{:.1f}\" height=\"{:.1f}\" fill=\"none\" "
      "stroke=\"black\"/>\n",
      kLeft, kTop, kW, kH);
  for (int t = static_cast<int>(std::ceil(xmin)); t <= static_cast<int>(std::floor(xmax)); ++t) {
    svg += fmt::format(
        "<line x1=\"{0:.2f}\" y1=\"{1:.1f}\" x2=\"{0:.2f}\" y2=\"{2:.1f}\" stroke=\"black\"/>"
        "<text x=\"{0:.2f}\" y=\"{3:.1f}\" text-anchor=\"middle\">{4}</text>\n",
        px(t), kTop + kH, kTop + kH + 4.0, kTop + kH + 16.0, t);
  }
  for (int t = 0; t <= 4; ++t) {
    const double p = t / 4.0;
    svg += fmt::format(
        "<line x1=\"{0:.1f}\" y1=\"{1:.2f}\" x2=\"{2:.1f}\" y2=\"{1:.2f}\" stroke=\"black\"/>"
        "<text x=\"{3:.1f}\" y=\"{4:.2f}\" text-anchor=\"end\">{5:.2f}</text>\n",
        kLeft - 4.0, py(p), kLeft, kLeft - 6.0, py(p) + 4.0, p);
  }

  std::string steps = fmt::format("M{:.2f},{:.2f}", px(xmin), py(0.0));
  for (std::size_t i = 0; i < n; ++i) {
    steps += fmt::format(" H{:.2f} V{:.2f}", px(x[i]),
                         py(static_cast<double>(i + 1) / static_cast<double>(n)));
  }
  steps += fmt::format(" H{:.2f}", px(xmax));
  svg += "<path d=\"" + steps + "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.2\"/>\n";

  std::string curve;
  constexpr int kSamples = 200;
  for (int k = 0; k <= kSamples; ++k) {
    const double v = xmin + (xmax - xmin) * k / kSamples;
    curve += fmt::format("{}{:.2f},{:.2f}", k ? " " : "", px(v), py(normal_cdf(v)));
  }
  svg += "<polyline points=\"" + curve + "\" fill=\"none\" stroke=\"red\" stroke-width=\"1.5\"/>\n";

  svg += fmt::format(
      "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" stroke=\"black\" "
      "stroke-dasharray=\"3,2\" stroke-width=\"1.5\"/>\n",
      px(gap_x), py(gap_lo), py(gap_hi));
  svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\">n = {}, KS D = {:.6f}</text>\n", kLeft + 8.0,
                     kTop + 16.0, n, d);
  svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">score</text>\n",
                     kLeft + kW / 2.0, kTop + kH + 34.0);
  svg += "</svg>\n";
  return svg;
}

}  // namespace compcent
