#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "bichrome/harness.hpp"

namespace bichrome::harness {

namespace {

constexpr double kCanvas = 600.0;
constexpr double kMarkerRadius = 4.0;

struct XY {
  double x, y;
};

struct Viewport {
  double x0, x1, y0, y1;

  XY to_px(XY p) const {
    return {(p.x - x0) / (x1 - x0) * kCanvas, kCanvas - (p.y - y0) / (y1 - y0) * kCanvas};
  }
  std::vector<XY> corners() const { return {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}; }
};

Viewport viewport_of(const std::vector<Point>& pts) {
  if (pts.empty()) return {-1, 1, -1, 1};
  double x0 = pts[0].x, x1 = x0, y0 = pts[0].y, y1 = y0;
  for (Point p : pts) {
    x0 = std::min<double>(x0, p.x);
    x1 = std::max<double>(x1, p.x);
    y0 = std::min<double>(y0, p.y);
    y1 = std::max<double>(y1, p.y);
  }
  // square drawing area so rotated rectangles keep their right angles
  const double side = std::max({x1 - x0, y1 - y0, 2.0});
  const double pad = 0.08 * side;
  const double cx = (x0 + x1) / 2, cy = (y0 + y1) / 2;
  return {cx - side / 2 - pad, cx + side / 2 + pad, cy - side / 2 - pad, cy + side / 2 + pad};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string polygon(const Viewport& view, const std::vector<XY>& poly, const char* kind) {
  std::ostringstream s;
  s << "  <polygon class=\"" << kind << "\" points=\"";
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const XY p = view.to_px(poly[i]);
    s << (i ? " " : "") << fmt(p.x) << "," << fmt(p.y);
  }
  s << "\" fill=\"#f2c14e\" fill-opacity=\"0.35\" stroke=\"#b8860b\" stroke-width=\"1.5\"/>\n";
  return s.str();
}

// Frame bounds become world corners; infinite sides are pulled in to just
// past the viewport so the polygon covers everything visible.
std::vector<XY> rect_polygon(const Viewport& view, const OrientedRect& rect) {
  const double dx = static_cast<double>(rect.dir.dx()), dy = static_cast<double>(rect.dir.dy());
  const double len2 = dx * dx + dy * dy;
  double umin = INFINITY, umax = -INFINITY, vmin = INFINITY, vmax = -INFINITY;
  for (XY c : view.corners()) {
    const double u = c.x * dx + c.y * dy, v = -c.x * dy + c.y * dx;
    umin = std::min(umin, u);
    umax = std::max(umax, u);
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
  }
  const double margin = std::max(umax - umin, vmax - vmin);
  auto resolve = [margin](const Bound& b, double lo, double hi) {
    if (b.kind() == Bound::Kind::NegInf) return lo - margin;
    if (b.kind() == Bound::Kind::PosInf) return hi + margin;
    return b.value().to_double();
  };
  const double u0 = resolve(rect.u_lo, umin, umax), u1 = resolve(rect.u_hi, umin, umax);
  const double v0 = resolve(rect.v_lo, vmin, vmax), v1 = resolve(rect.v_hi, vmin, vmax);
  auto world = [&](double u, double v) { return XY{(dx * u - dy * v) / len2, (dy * u + dx * v) / len2}; };
  return {world(u0, v0), world(u1, v0), world(u1, v1), world(u0, v1)};
}

// The viewport clipped to the open halfplane side*(y - slope*x + offset) > 0.
std::vector<XY> halfplane_polygon(const Viewport& view, double slope, double offset, double side) {
  auto f = [&](XY p) { return side * (p.y - slope * p.x + offset); };
  const std::vector<XY> box = view.corners();
  std::vector<XY> out;
  for (std::size_t i = 0; i < box.size(); ++i) {
    const XY a = box[i], b = box[(i + 1) % box.size()];
    const double fa = f(a), fb = f(b);
    if (fa >= 0) out.push_back(a);
    if ((fa >= 0) != (fb >= 0)) {
      const double t = fa / (fa - fb);
      out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
    }
  }
  return out;
}

std::string marker(const Viewport& view, Point p, const char* fill, const char* kind) {
  const XY px = view.to_px({static_cast<double>(p.x), static_cast<double>(p.y)});
  return "  <circle class=\"" + std::string(kind) + "\" cx=\"" + fmt(px.x) + "\" cy=\"" + fmt(px.y) + "\" r=\"" +
         fmt(kMarkerRadius) + "\" fill=\"" + fill + "\"/>\n";
}

}  // namespace

std::string render_svg(const InstanceFile& instance, const json* solution) {
  std::vector<Point> all = instance.red;
  all.insert(all.end(), instance.blue.begin(), instance.blue.end());
  for (const auto& [a, b] : instance.pairs) {
    all.push_back(a);
    all.push_back(b);
  }
  const Viewport view = viewport_of(all);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kCanvas << "\" height=\"" << kCanvas
      << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas << "\">\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << kCanvas << "\" height=\"" << kCanvas << "\" fill=\"white\"/>\n";

  if (solution != nullptr) {
    const json& cert = solution->at("certificate");
    if (cert.contains("rectangle")) {
      svg << polygon(view, rect_polygon(view, rect_from_json(cert.at("rectangle"))), "rectangle");
    } else if (cert.contains("halfplane")) {
      const json& hp = cert.at("halfplane");
      const double slope = Rational::parse(hp.at("slope").get<std::string>()).to_double();
      const double offset = Rational::parse(hp.at("offset").get<std::string>()).to_double();
      const double side = hp.at("side").get<std::string>() == "above" ? 1.0 : -1.0;
      svg << polygon(view, halfplane_polygon(view, slope, offset, side), "halfplane");
    }
  }

  for (Point p : instance.red) svg << marker(view, p, "#d62728", "point red");
  for (Point p : instance.blue) svg << marker(view, p, "#1f77b4", "point blue");
  if (!instance.pairs.empty()) {
    const json* coloring = nullptr;
    if (solution != nullptr && solution->at("certificate").contains("coloring")) {
      coloring = &solution->at("certificate").at("coloring");
    }
    std::size_t i = 0;
    for (const auto& [a, b] : instance.pairs) {
      for (Point p : {a, b}) {
        const char* fill = "#555555";
        const char* kind = "point";
        if (coloring != nullptr && i < coloring->size()) {
          const bool red = (*coloring)[i].at("color").get<std::string>() == "red";
          fill = red ? "#d62728" : "#1f77b4";
          kind = red ? "point red" : "point blue";
        }
        svg << marker(view, p, fill, kind);
        ++i;
      }
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace bichrome::harness
