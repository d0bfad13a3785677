#include <cmath>
#include <cstdio>
#include <string>

#include "lamina/io.hpp"

namespace lamina {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

struct Point {
  double x = 0, y = 0;
};

Point on_circle(const Angle& angle, double radius = 1.0) {
  const double t = kTau * static_cast<double>(angle.value());
  return {radius * std::cos(t), radius * std::sin(t)};
}

std::string num(double v) {
  if (v > -5e-7 && v < 0) v = 0;  // keep "-0.000000" out of the output
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6f", v);
  return buffer;
}

std::string leaf_path(const Chord& leaf, bool hyperbolic) {
  const Point u = on_circle(leaf.a());
  const Point v = on_circle(leaf.b());
  const double dot = u.x * v.x + u.y * v.y;
  if (hyperbolic && std::abs(1 + dot) > 1e-9) {
    // Geodesic arc: the circle through both endpoints orthogonal to the unit
    // circle has center (u+v)/(1+u.v); the minor arc lies inside the disk.
    const Point c{(u.x + v.x) / (1 + dot), (u.y + v.y) / (1 + dot)};
    const double r = std::sqrt((1 - dot) / (1 + dot));
    const double cross =
        (u.x - c.x) * (v.y - c.y) - (u.y - c.y) * (v.x - c.x);
    const char sweep = cross > 0 ? '1' : '0';
    return "M " + num(u.x) + " " + num(u.y) + " A " + num(r) + " " + num(r) +
           " 0 0 " + sweep + " " + num(v.x) + " " + num(v.y);
  }
  return "M " + num(u.x) + " " + num(u.y) + " L " + num(v.x) + " " + num(v.y);
}

}  // namespace

std::string render_svg(const Lamination& lamination, const RenderOptions& options) {
  if (options.size < 64) throw std::invalid_argument("size must be at least 64");
  if (!*validate(lamination).unlinked_ok)
    throw std::invalid_argument("cannot render a lamination with crossing leaves");

  const std::string size = std::to_string(options.size);
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + size +
         "\" height=\"" + size + "\" viewBox=\"-1.1 -1.1 2.2 2.2\">\n";
  svg += "<g transform=\"scale(1,-1)\" fill=\"none\" stroke=\"black\">\n";
  svg += "<circle cx=\"0\" cy=\"0\" r=\"1\" stroke-width=\"0.012\"/>\n";
  for (const Chord& leaf : lamination.leaves()) {
    svg += "<path d=\"" + leaf_path(leaf, options.hyperbolic) +
           "\" stroke-width=\"0.008\"";
    if (is_critical(lamination.degree(), leaf))
      svg += " stroke-dasharray=\"0.04 0.025\"";
    svg += "/>\n";
  }
  svg += "</g>\n";
  if (options.label) {
    std::set<Angle> endpoints;
    for (const Chord& leaf : lamination.leaves()) {
      endpoints.insert(leaf.a());
      endpoints.insert(leaf.b());
    }
    svg += "<g font-size=\"0.05\" text-anchor=\"middle\" fill=\"black\">\n";
    for (const Angle& p : endpoints) {
      const Point at = on_circle(p, 1.05);
      svg += "<text x=\"" + num(at.x) + "\" y=\"" + num(-at.y) + "\">" + p.str() +
             "</text>\n";
    }
    svg += "</g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace lamina
