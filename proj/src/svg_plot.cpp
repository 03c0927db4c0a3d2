#include "skelsig/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <optional>
#include <sstream>

namespace skelsig {

namespace {

constexpr double kWidth = 900;
constexpr double kHeight = 700;
constexpr double kLeft = 60;
constexpr double kRight = 200;
constexpr double kTop = 30;
constexpr double kBottom = 50;

constexpr std::array<const char*, 12> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#e7ba52",
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

double to_double(const Rational& x) { return static_cast<double>(x.num()) / static_cast<double>(x.den()); }

struct Canvas {
  double h_max, r_max;

  double x(const Rational& h) const { return kLeft + to_double(h) / h_max * (kWidth - kLeft - kRight); }
  double y(const Rational& r) const { return kHeight - kBottom - to_double(r) / r_max * (kHeight - kTop - kBottom); }
};

// Segment of the line inside [0, h_max] x [0, r_max], computed exactly.
std::optional<std::pair<RationalPoint, RationalPoint>> clip(const RationalLine& line, std::int64_t h_max,
                                                           std::int64_t r_max) {
  const std::array<RationalLine, 4> edges = {RationalLine(1, 0, 0), RationalLine(1, 0, h_max), RationalLine(0, 1, 0),
                                             RationalLine(0, 1, r_max)};
  std::vector<RationalPoint> hits;
  for (const auto& e : edges) {
    auto p = intersect(line, e);
    if (!p) continue;
    if (p->h < Rational(0) || p->h > Rational(h_max) || p->r < Rational(0) || p->r > Rational(r_max)) continue;
    if (std::find(hits.begin(), hits.end(), *p) == hits.end()) hits.push_back(*p);
  }
  if (hits.size() < 2) return std::nullopt;
  auto by_h = [](const RationalPoint& a, const RationalPoint& b) { return a.h < b.h || (a.h == b.h && a.r < b.r); };
  std::sort(hits.begin(), hits.end(), by_h);
  return std::make_pair(hits.front(), hits.back());
}

const char* status_color(PointStatus s) {
  switch (s) {
    case PointStatus::admissible: return kPalette[7];
    case PointStatus::realized: return kPalette[10];
    case PointStatus::gap: return kPalette[3];
    case PointStatus::exception_realized: return kPalette[2];
    case PointStatus::exception_excluded: return kPalette[1];
  }
  return kPalette[7];
}

}  // namespace

std::string render_svg(const FigureDataset& d, const std::string& metadata) {
  const Canvas cv{static_cast<double>(d.h_max), static_cast<double>(d.r_max)};
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth) << "\" height=\"" << num(kHeight)
     << "\" viewBox=\"0 0 " << num(kWidth) << ' ' << num(kHeight) << "\">\n";
  if (!metadata.empty()) os << "<metadata>" << escape(metadata) << "</metadata>\n";
  os << "<title>(h,r)-plane for genus " << d.sigma << "</title>\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << num(kWidth) << "\" height=\"" << num(kHeight) << "\" fill=\"white\"/>\n";

  // Axes and ticks.
  const Rational zero(0);
  os << "<g id=\"axes\" stroke=\"black\" stroke-width=\"1\" font-family=\"sans-serif\" font-size=\"10\">\n";
  os << "<line x1=\"" << num(cv.x(zero)) << "\" y1=\"" << num(cv.y(zero)) << "\" x2=\"" << num(cv.x(Rational(d.h_max)))
     << "\" y2=\"" << num(cv.y(zero)) << "\"/>\n";
  os << "<line x1=\"" << num(cv.x(zero)) << "\" y1=\"" << num(cv.y(zero)) << "\" x2=\"" << num(cv.x(zero))
     << "\" y2=\"" << num(cv.y(Rational(d.r_max))) << "\"/>\n";
  const std::int64_t h_step = std::max<std::int64_t>(1, (d.h_max + 11) / 12);
  const std::int64_t r_step = std::max<std::int64_t>(1, (d.r_max + 9) / 10);
  for (std::int64_t h = 0; h <= d.h_max; h += h_step) {
    os << "<text x=\"" << num(cv.x(Rational(h))) << "\" y=\"" << num(cv.y(zero) + 15)
       << "\" text-anchor=\"middle\" stroke=\"none\">" << h << "</text>\n";
  }
  for (std::int64_t r = 0; r <= d.r_max; r += r_step) {
    os << "<text x=\"" << num(cv.x(zero) - 6) << "\" y=\"" << num(cv.y(Rational(r)) + 3)
       << "\" text-anchor=\"end\" stroke=\"none\">" << r << "</text>\n";
  }
  os << "<text x=\"" << num(cv.x(Rational(d.h_max)) / 2 + kLeft / 2) << "\" y=\"" << num(kHeight - 12)
     << "\" text-anchor=\"middle\" stroke=\"none\">h</text>\n";
  os << "<text x=\"16\" y=\"" << num(kHeight / 2) << "\" stroke=\"none\">r</text>\n";
  os << "</g>\n";

  // Gaps, clipped to r >= 0.
  os << "<g id=\"gaps\" fill=\"" << kPalette[11] << "\" fill-opacity=\"0.25\" stroke=\"none\">\n";
  for (const auto& g : d.gaps) {
    if (g.corner.r < zero) continue;
    const RationalPoint right_upper{Rational(g.boundary_upper.c(), g.boundary_upper.a()), zero};
    const RationalPoint right_lower{Rational(g.boundary_lower.c(), g.boundary_lower.a()), zero};
    os << "<polygon points=\"" << num(cv.x(g.corner.h)) << ',' << num(cv.y(g.corner.r)) << ' '
       << num(cv.x(right_upper.h)) << ',' << num(cv.y(right_upper.r)) << ' ' << num(cv.x(right_lower.h)) << ','
       << num(cv.y(right_lower.r)) << "\"/>\n";
  }
  os << "</g>\n";

  // Lines.
  os << "<g id=\"lines\" stroke-width=\"1.5\" fill=\"none\">\n";
  for (std::size_t i = 0; i < d.lines.size(); ++i) {
    const auto seg = clip(d.lines[i].line, d.h_max, d.r_max);
    if (!seg) continue;
    os << "<line data-name=\"" << escape(d.lines[i].name) << "\" x1=\"" << num(cv.x(seg->first.h)) << "\" y1=\""
       << num(cv.y(seg->first.r)) << "\" x2=\"" << num(cv.x(seg->second.h)) << "\" y2=\"" << num(cv.y(seg->second.r))
       << "\" stroke=\"" << kPalette[i % kPalette.size()] << "\"/>\n";
  }
  if (const auto seg = clip(d.guide, d.h_max, d.r_max)) {
    os << "<line data-name=\"r=1\" x1=\"" << num(cv.x(seg->first.h)) << "\" y1=\"" << num(cv.y(seg->first.r))
       << "\" x2=\"" << num(cv.x(seg->second.h)) << "\" y2=\"" << num(cv.y(seg->second.r)) << "\" stroke=\""
       << kPalette[9] << "\" stroke-dasharray=\"4 3\"/>\n";
  }
  os << "</g>\n";

  // Points.
  os << "<g id=\"points\" stroke=\"none\">\n";
  for (const auto& p : d.points) {
    os << "<circle data-h=\"" << p.point.h << "\" data-r=\"" << p.point.r << "\" data-status=\""
       << to_string(p.status) << "\" cx=\"" << num(cv.x(Rational(p.point.h))) << "\" cy=\""
       << num(cv.y(Rational(p.point.r))) << "\" r=\"2.50\" fill=\"" << status_color(p.status) << "\"/>\n";
  }
  os << "</g>\n";

  // Legend.
  os << "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"11\">\n";
  double ly = kTop + 10;
  const double lx = kWidth - kRight + 20;
  for (std::size_t i = 0; i < d.lines.size(); ++i, ly += 18) {
    os << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(lx + 20) << "\" y2=\"" << num(ly)
       << "\" stroke=\"" << kPalette[i % kPalette.size()] << "\" stroke-width=\"1.5\"/>";
    os << "<text x=\"" << num(lx + 26) << "\" y=\"" << num(ly + 4) << "\">" << escape(d.lines[i].name) << ": "
       << escape(d.lines[i].line.str()) << "</text>\n";
  }
  const std::array<PointStatus, 5> statuses = {PointStatus::admissible, PointStatus::realized, PointStatus::gap,
                                               PointStatus::exception_realized, PointStatus::exception_excluded};
  for (auto s : statuses) {
    if (std::none_of(d.points.begin(), d.points.end(), [&](const DatasetPoint& p) { return p.status == s; })) continue;
    os << "<circle cx=\"" << num(lx + 10) << "\" cy=\"" << num(ly) << "\" r=\"3.00\" fill=\"" << status_color(s)
       << "\"/><text x=\"" << num(lx + 26) << "\" y=\"" << num(ly + 4) << "\">" << to_string(s) << "</text>\n";
    ly += 18;
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace skelsig
