#include "optrig/report/svg_plots.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "optrig/errors.hpp"

namespace optrig::report {

namespace {

// Fixed two-decimal pixel coordinates keep the output bytes independent of
// locale and formatting defaults.
std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string num_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

constexpr const char* kSvgHeader =
    "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%d\" height=\"%d\" "
    "viewBox=\"0 0 %d %d\">\n";

std::string svg_open(int w, int h) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), kSvgHeader, w, h, w, h);
  return buf;
}

}  // namespace

std::string render_plot_circle(
    const std::vector<std::pair<pyth::TripleParams, pyth::PythTriple>>& triples) {
  if (triples.empty()) throw Error(Errc::empty_input, "no triples to plot");

  constexpr int kSize = 480;
  constexpr double kCx = 240, kCy = 240, kR = 190;
  std::ostringstream svg;
  svg << svg_open(kSize, kSize);
  svg << "  <rect x=\"0\" y=\"0\" width=\"480\" height=\"480\" fill=\"white\"/>\n";
  svg << "  <line x1=\"" << px(kCx - kR - 20) << "\" y1=\"" << px(kCy) << "\" x2=\""
      << px(kCx + kR + 20) << "\" y2=\"" << px(kCy) << "\" stroke=\"#999\"/>\n";
  svg << "  <line x1=\"" << px(kCx) << "\" y1=\"" << px(kCy - kR - 20) << "\" x2=\"" << px(kCx)
      << "\" y2=\"" << px(kCy + kR + 20) << "\" stroke=\"#999\"/>\n";
  svg << "  <circle cx=\"" << px(kCx) << "\" cy=\"" << px(kCy) << "\" r=\"" << px(kR)
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (const auto& [params, t] : triples) {
    const double cos_phi = static_cast<double>(t.a) / static_cast<double>(t.c);
    const double sin_phi = static_cast<double>(t.b) / static_cast<double>(t.c);
    const double x = kCx + kR * cos_phi;
    const double y = kCy - kR * sin_phi;  // SVG y runs downward
    svg << "  <circle cx=\"" << px(x) << "\" cy=\"" << px(y)
        << "\" r=\"3\" fill=\"#c22\"/>\n";
    svg << "  <text x=\"" << px(x + 6) << "\" y=\"" << px(y - 6)
        << "\" font-family=\"monospace\" font-size=\"10\">(" << t.a << ", " << t.b << ", "
        << t.c << ")</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string render_plot_angle(double lambda_min, double lambda_max, int steps) {
  if (!(lambda_min >= 1) || !(lambda_min < lambda_max) || steps < 2)
    throw Error(Errc::bad_range, "need 1 <= lambda_min < lambda_max and steps >= 2");

  constexpr int kW = 480, kH = 320;
  constexpr double kLeft = 60, kRight = 460, kTop = 20, kBottom = 280;
  constexpr double kPhiMax = std::numbers::pi / 2;
  const auto x_of = [&](double k) {
    return kLeft + (kRight - kLeft) * (k - lambda_min) / (lambda_max - lambda_min);
  };
  const auto y_of = [&](double phi) { return kBottom - (kBottom - kTop) * phi / kPhiMax; };

  std::ostringstream svg;
  svg << svg_open(kW, kH);
  svg << "  <rect x=\"0\" y=\"0\" width=\"480\" height=\"320\" fill=\"white\"/>\n";
  // axes
  svg << "  <line x1=\"" << px(kLeft) << "\" y1=\"" << px(kBottom) << "\" x2=\"" << px(kRight)
      << "\" y2=\"" << px(kBottom) << "\" stroke=\"black\"/>\n";
  svg << "  <line x1=\"" << px(kLeft) << "\" y1=\"" << px(kBottom) << "\" x2=\"" << px(kLeft)
      << "\" y2=\"" << px(kTop) << "\" stroke=\"black\"/>\n";
  for (int deg = 0; deg <= 90; deg += 30) {
    const double y = y_of(deg * std::numbers::pi / 180);
    svg << "  <line x1=\"" << px(kLeft - 4) << "\" y1=\"" << px(y) << "\" x2=\"" << px(kLeft)
        << "\" y2=\"" << px(y) << "\" stroke=\"black\"/>\n";
    svg << "  <text x=\"" << px(kLeft - 36) << "\" y=\"" << px(y + 4)
        << "\" font-family=\"monospace\" font-size=\"10\">" << deg << "&#176;</text>\n";
  }
  svg << "  <text x=\"" << px((kLeft + kRight) / 2 - 60) << "\" y=\"" << px(kBottom + 28)
      << "\" font-family=\"monospace\" font-size=\"10\">condition number &#954; from "
      << num_label(lambda_min) << " to " << num_label(lambda_max) << "</text>\n";

  svg << "  <polyline fill=\"none\" stroke=\"#22c\" stroke-width=\"1.5\" points=\"";
  for (int i = 0; i < steps; ++i) {
    const double k =
        lambda_min + (lambda_max - lambda_min) * static_cast<double>(i) / (steps - 1);
    const double cos_phi = std::min(1.0, 2 * std::sqrt(k) / (1 + k));
    const double phi = std::acos(cos_phi);
    if (i) svg << ' ';
    svg << px(x_of(k)) << ',' << px(y_of(phi));
  }
  svg << "\"/>\n</svg>\n";
  return svg.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io_error, "cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw Error(Errc::io_error, "write to '" + path + "' failed");
}

}  // namespace optrig::report
