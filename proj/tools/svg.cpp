#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace berge5::cli {

namespace {

std::string colour(double t) {
  // dark blue -> teal -> yellow
  t = std::clamp(t, 0.0, 1.0);
  const double stops[3][3] = {{68, 1, 84}, {33, 145, 140}, {253, 231, 37}};
  const int seg = t < 0.5 ? 0 : 1;
  const double u = t < 0.5 ? t * 2.0 : (t - 0.5) * 2.0;
  char buf[8];
  int rgb[3];
  for (int i = 0; i < 3; ++i) {
    rgb[i] = static_cast<int>(stops[seg][i] + u * (stops[seg + 1][i] - stops[seg][i]) + 0.5);
  }
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
  return buf;
}

}  // namespace

std::string bound_heatmap_svg(const BoundCurve& curve, std::size_t resolution) {
  const double size = 400.0;
  const double margin = 50.0;
  const double cell = size / static_cast<double>(resolution);
  const double lo = bound_function(1.0, 0.0);
  const double hi = curve.maximum;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size + 2 * margin << "\" height=\""
      << size + 2 * margin << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < resolution; ++i) {
    for (std::size_t j = 0; i + j < resolution; ++j) {
      const double a1 = (static_cast<double>(i) + 0.5) / static_cast<double>(resolution);
      const double a2 = (static_cast<double>(j) + 0.5) / static_cast<double>(resolution);
      const double b = bound_function(std::min(a1, 1.0), std::min(a2, 1.0 - std::min(a1, 1.0)));
      const double x = margin + static_cast<double>(i) * cell;
      const double y = margin + size - static_cast<double>(j + 1) * cell;
      svg << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell + 0.05 << "\" height=\""
          << cell + 0.05 << "\" fill=\"" << colour((b - lo) / (hi - lo)) << "\"/>\n";
    }
  }
  const double mx = margin + curve.alpha1 * size;
  const double my = margin + size - curve.alpha2 * size;
  svg << "<circle cx=\"" << mx << "\" cy=\"" << my
      << "\" r=\"6\" fill=\"none\" stroke=\"red\" stroke-width=\"2\"/>\n";
  svg << "<text x=\"" << mx + 10 << "\" y=\"" << my - 8 << "\">max " << curve.maximum << "</text>\n";
  svg << "<line x1=\"" << margin << "\" y1=\"" << margin + size << "\" x2=\"" << margin + size
      << "\" y2=\"" << margin + size << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
      << margin + size << "\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << margin + size / 2 << "\" y=\"" << margin + size + 30
      << "\" text-anchor=\"middle\">alpha1</text>\n";
  svg << "<text x=\"" << margin - 30 << "\" y=\"" << margin + size / 2
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 " << margin - 30 << ' '
      << margin + size / 2 << ")\">alpha2</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace berge5::cli
