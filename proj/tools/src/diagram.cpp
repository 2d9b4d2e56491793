#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "cyclic/cli.hpp"

namespace cyclic::cli {
namespace {

constexpr double kSize = 480.0;
constexpr double kCenter = kSize / 2;
constexpr double kRadius = 180.0;
constexpr double kLabelRadius = 204.0;
constexpr double kDot = 4.5;
constexpr const char* kFixedColor = "#1f5fbf";

// Two decimals, with -0.00 folded into 0.00 so output is stable.
std::string num(double v) {
  if (std::fabs(v) < 0.005) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Point {
  double x;
  double y;
};

// Angle 0 on the right, increasing counterclockwise.
Point on_circle(const Rational& t, double radius) {
  const double theta = 2 * std::numbers::pi * t.get_d();
  return {kCenter + radius * std::cos(theta), kCenter - radius * std::sin(theta)};
}

}  // namespace

std::string render_diagram(const Orbit& orbit, const Cycle& sigma) {
  const int q = orbit.q();
  const int k = orbit.k();
  const Integer& den = orbit.denominator();
  std::ostringstream svg;

  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kSize)
      << "\" height=\"" << num(kSize + 40) << "\" viewBox=\"0 0 "
      << num(kSize) << ' ' << num(kSize + 40) << "\">\n";
  svg << "<defs><marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"10\" "
         "refY=\"5\" markerWidth=\"7\" markerHeight=\"7\" "
         "orient=\"auto-start-reverse\"><path d=\"M0,0 L10,5 L0,10 z\" "
         "fill=\"#555\"/></marker></defs>\n";
  svg << "<title>" << sigma.to_string() << " under m_" << k << "</title>\n";
  svg << "<circle cx=\"" << num(kCenter) << "\" cy=\"" << num(kCenter)
      << "\" r=\"" << num(kRadius)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.2\"/>\n";

  // Arrows stop short of the target dot.
  for (int i = 1; i <= q; ++i) {
    const Point a = on_circle(orbit.point(i), kRadius);
    const Point b = on_circle(orbit.point(sigma(i)), kRadius);
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len = std::hypot(dx, dy);
    const double trim = (kDot + 2) / len;
    svg << "<line class=\"arrow\" x1=\"" << num(a.x + dx * trim) << "\" y1=\""
        << num(a.y + dy * trim) << "\" x2=\"" << num(b.x - dx * trim)
        << "\" y2=\"" << num(b.y - dy * trim)
        << "\" stroke=\"#555\" stroke-width=\"1\" marker-end=\"url(#head)\"/>\n";
  }

  for (int j = 0; j < k - 1; ++j) {
    Rational t(j, k - 1);
    t.canonicalize();
    const Point p = on_circle(t, kRadius);
    const Point l = on_circle(t, kLabelRadius);
    const Integer label = den * j / (k - 1);
    svg << "<circle class=\"fixed\" cx=\"" << num(p.x) << "\" cy=\""
        << num(p.y) << "\" r=\"" << num(kDot) << "\" fill=\"" << kFixedColor
        << "\"/>\n";
    svg << "<text x=\"" << num(l.x) << "\" y=\"" << num(l.y + 4)
        << "\" font-size=\"11\" text-anchor=\"middle\" fill=\"" << kFixedColor
        << "\">" << label.get_str() << "</text>\n";
  }

  for (int i = 1; i <= q; ++i) {
    const Point p = on_circle(orbit.point(i), kRadius);
    const Point l = on_circle(orbit.point(i), kLabelRadius);
    svg << "<circle class=\"orbit\" cx=\"" << num(p.x) << "\" cy=\""
        << num(p.y) << "\" r=\"" << num(kDot) << "\" fill=\"black\"/>\n";
    svg << "<text x=\"" << num(l.x) << "\" y=\"" << num(l.y + 4)
        << "\" font-size=\"11\" text-anchor=\"middle\">"
        << orbit.numerators()[i - 1].get_str() << "</text>\n";
  }

  svg << "<text x=\"" << num(kCenter) << "\" y=\"" << num(kSize + 24)
      << "\" font-size=\"12\" text-anchor=\"middle\">angles in multiples of 1/"
      << den.get_str() << "; blue dots are the fixed points of m_" << k
      << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace cyclic::cli
