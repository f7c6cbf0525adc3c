#include "bnba/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace bnba {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#e377c2"};
constexpr int kPaletteSize = 8;

constexpr int kMarginLeft = 64;
constexpr int kMarginRight = 16;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 48;

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string escape_text(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  bool log2_scale = false;
  double px_lo = 0.0;
  double px_hi = 1.0;

  double to_px(double v) const {
    double t;
    if (log2_scale)
      t = (std::log2(v) - std::log2(lo)) / (std::log2(hi) - std::log2(lo));
    else
      t = (v - lo) / (hi - lo);
    return px_lo + t * (px_hi - px_lo);
  }
};

std::vector<double> linear_ticks(double lo, double hi) {
  const double span = hi - lo;
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
    if (mag * m >= raw) {
      step = mag * m;
      break;
    }
  }
  std::vector<double> ticks;
  for (double v = std::ceil(lo / step) * step; v <= hi + step * 1e-9; v += step) {
    double snapped = std::round(v / step) * step;
    if (std::abs(snapped) < step * 1e-9) snapped = 0.0;
    ticks.push_back(snapped);
  }
  return ticks;
}

std::vector<double> log2_ticks(double lo, double hi) {
  std::vector<double> ticks;
  const int k_lo = static_cast<int>(std::ceil(std::log2(lo) - 1e-9));
  const int k_hi = static_cast<int>(std::floor(std::log2(hi) + 1e-9));
  for (int k = k_lo; k <= k_hi; ++k) ticks.push_back(std::pow(2.0, k));
  if (ticks.empty()) ticks = {lo, hi};
  return ticks;
}

void draw_frame(std::ostringstream& out, const Axis& x, const Axis& y,
                const RenderOptions& opt) {
  out << "<rect x=\"0\" y=\"0\" width=\"" << opt.width << "\" height=\"" << opt.height
      << "\" fill=\"#ffffff\"/>\n";
  out << "<line x1=\"" << px(x.px_lo) << "\" y1=\"" << px(y.px_lo) << "\" x2=\""
      << px(x.px_hi) << "\" y2=\"" << px(y.px_lo)
      << "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << px(x.px_lo) << "\" y1=\"" << px(y.px_lo) << "\" x2=\""
      << px(x.px_lo) << "\" y2=\"" << px(y.px_hi)
      << "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";

  const auto x_ticks = x.log2_scale ? log2_ticks(x.lo, x.hi) : linear_ticks(x.lo, x.hi);
  for (double v : x_ticks) {
    if (v < x.lo - 1e-12 || v > x.hi * (1 + 1e-12) + 1e-12) continue;
    const double xp = x.to_px(v);
    out << "<line x1=\"" << px(xp) << "\" y1=\"" << px(y.px_lo) << "\" x2=\"" << px(xp)
        << "\" y2=\"" << px(y.px_lo + 4) << "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << px(xp) << "\" y=\"" << px(y.px_lo + 18)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\" "
           "fill=\"#333333\">"
        << tick_label(v) << "</text>\n";
  }
  for (double v : linear_ticks(y.lo, y.hi)) {
    if (v < y.lo - 1e-12 || v > y.hi + 1e-12) continue;
    const double yp = y.to_px(v);
    out << "<line x1=\"" << px(x.px_lo - 4) << "\" y1=\"" << px(yp) << "\" x2=\""
        << px(x.px_lo) << "\" y2=\"" << px(yp)
        << "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << px(x.px_lo - 8) << "\" y=\"" << px(yp + 4)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\" "
           "fill=\"#333333\">"
        << tick_label(v) << "</text>\n";
  }

  if (!opt.title.empty())
    out << "<text x=\"" << px((x.px_lo + x.px_hi) / 2) << "\" y=\"22\" "
           "font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" "
           "fill=\"#111111\">"
        << escape_text(opt.title) << "</text>\n";
  if (!opt.x_label.empty())
    out << "<text x=\"" << px((x.px_lo + x.px_hi) / 2) << "\" y=\""
        << px(static_cast<double>(opt.height) - 10)
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" "
           "fill=\"#333333\">"
        << escape_text(opt.x_label) << "</text>\n";
  if (!opt.y_label.empty())
    out << "<text x=\"14\" y=\"" << px((y.px_lo + y.px_hi) / 2)
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 14 "
        << px((y.px_lo + y.px_hi) / 2) << ")\" fill=\"#333333\">" << escape_text(opt.y_label)
        << "</text>\n";
}

void draw_legend(std::ostringstream& out, const std::vector<std::string>& labels,
                 const Axis& x, const Axis& y) {
  const double x0 = x.px_lo + 12;
  double yc = y.px_hi + 14;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const char* color = kPalette[i % kPaletteSize];
    out << "<line x1=\"" << px(x0) << "\" y1=\"" << px(yc) << "\" x2=\"" << px(x0 + 22)
        << "\" y2=\"" << px(yc) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << px(x0 + 28) << "\" y=\"" << px(yc + 4)
        << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#333333\">"
        << escape_text(labels[i]) << "</text>\n";
    yc += 16;
  }
}

std::string open_svg(const RenderOptions& opt) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width << "\" height=\""
      << opt.height << "\" viewBox=\"0 0 " << opt.width << " " << opt.height << "\">\n";
  return out.str();
}

}  // namespace

std::string render_svg(const std::vector<ProfileCurve>& curves, const RenderOptions& options) {
  if (curves.empty()) throw std::invalid_argument("render_svg: no curves");

  double x_min = 0.0, x_max = 0.0;
  bool have_points = false;
  for (const ProfileCurve& c : curves) {
    for (const CurvePoint& p : c.points) {
      x_min = have_points ? std::min(x_min, p.x) : p.x;
      x_max = have_points ? std::max(x_max, p.x) : p.x;
      have_points = true;
    }
  }
  if (!have_points) {
    x_min = options.log_x ? 1.0 : 0.0;
    x_max = options.log_x ? 2.0 : 1.0;
  }
  if (!options.log_x && x_min > 0.0) x_min = 0.0;
  if (options.log_x && x_min <= 0.0)
    throw std::invalid_argument("render_svg: log axis needs positive x values");
  if (x_max <= x_min) x_max = options.log_x ? x_min * 2.0 : x_min + 1.0;

  Axis x{x_min, x_max, options.log_x, static_cast<double>(kMarginLeft),
         static_cast<double>(options.width - kMarginRight)};
  Axis y{0.0, 1.0, false, static_cast<double>(options.height - kMarginBottom),
         static_cast<double>(kMarginTop + 12)};

  std::ostringstream out;
  out << open_svg(options);
  draw_frame(out, x, y, options);

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const ProfileCurve& c = curves[i];
    labels.push_back(c.label);
    if (c.points.empty()) continue;
    const char* color = kPalette[i % kPaletteSize];
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    double frac = 0.0;
    out << px(x.to_px(x.lo)) << "," << px(y.to_px(frac));
    for (const CurvePoint& p : c.points) {
      out << " " << px(x.to_px(p.x)) << "," << px(y.to_px(frac));
      frac = p.fraction;
      out << " " << px(x.to_px(p.x)) << "," << px(y.to_px(frac));
    }
    out << " " << px(x.to_px(x.hi)) << "," << px(y.to_px(frac));
    out << "\"/>\n";
  }
  draw_legend(out, labels, x, y);
  out << "</svg>\n";
  return out.str();
}

std::string render_svg(const std::vector<SpeedupCurve>& curves, const RenderOptions& options) {
  if (curves.empty()) throw std::invalid_argument("render_svg: no curves");

  double x_max = 1.0, y_max = 1.0;
  int x_min = std::numeric_limits<int>::max();
  std::vector<SpeedupPoint> ideal;
  for (const SpeedupCurve& c : curves) {
    for (const SpeedupPoint& p : c.points) {
      x_min = std::min(x_min, p.cores);
      x_max = std::max(x_max, static_cast<double>(p.cores));
      y_max = std::max(y_max, p.value);
    }
    if (c.ideal.size() > ideal.size()) ideal = c.ideal;
  }
  for (const SpeedupPoint& p : ideal) y_max = std::max(y_max, p.value);
  if (x_min == std::numeric_limits<int>::max()) x_min = 1;

  const double x_lo = options.log_x ? static_cast<double>(x_min) : 0.0;
  Axis x{x_lo, x_max, options.log_x, static_cast<double>(kMarginLeft),
         static_cast<double>(options.width - kMarginRight)};
  Axis y{0.0, y_max * 1.05, false, static_cast<double>(options.height - kMarginBottom),
         static_cast<double>(kMarginTop + 12)};

  std::ostringstream out;
  out << open_svg(options);
  draw_frame(out, x, y, options);

  if (!ideal.empty()) {
    out << "<path fill=\"none\" stroke=\"#999999\" stroke-width=\"1\" "
           "stroke-dasharray=\"5,4\" d=\"";
    for (std::size_t i = 0; i < ideal.size(); ++i)
      out << (i == 0 ? "M" : " L") << px(x.to_px(ideal[i].cores)) << " "
          << px(y.to_px(ideal[i].value));
    out << "\"/>\n";
  }

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const SpeedupCurve& c = curves[i];
    labels.push_back(c.label);
    if (c.points.empty()) continue;
    const char* color = kPalette[i % kPaletteSize];
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < c.points.size(); ++k) {
      if (k) out << " ";
      out << px(x.to_px(c.points[k].cores)) << "," << px(y.to_px(c.points[k].value));
    }
    out << "\"/>\n";
    for (const SpeedupPoint& p : c.points)
      out << "<circle cx=\"" << px(x.to_px(p.cores)) << "\" cy=\"" << px(y.to_px(p.value))
          << "\" r=\"3\" fill=\"" << color << "\"/>\n";
  }
  draw_legend(out, labels, x, y);
  out << "</svg>\n";
  return out.str();
}

}  // namespace bnba
