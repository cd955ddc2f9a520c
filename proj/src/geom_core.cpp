#include "bichrome/geom_core.hpp"

#include <numeric>
#include <string>

#include "bichrome/errors.hpp"

namespace bichrome {

namespace {

i64 abs64(i64 v) { return v < 0 ? -v : v; }

// 0 for angles in [0, 180), 1 for [180, 360).
int half_of(const Direction& d) { return d.in_upper_half() ? 0 : 1; }

std::string describe(Point p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

}  // namespace

bool within_coord_limit(Point p) {
  return abs64(p.x) <= kCoordLimit && abs64(p.y) <= kCoordLimit;
}

void require_coord_limit(Point p) {
  if (!within_coord_limit(p)) {
    throw Error(ErrorCode::CoordinateBound,
                "coordinate magnitude exceeds 2^20 at point " + describe(p));
  }
}

Orientation orientation(Point p, Point q, Point r) {
  i128 cross = i128(q.x - p.x) * (r.y - p.y) - i128(q.y - p.y) * (r.x - p.x);
  if (cross > 0) return Orientation::CCW;
  if (cross < 0) return Orientation::CW;
  return Orientation::Collinear;
}

Direction::Direction(i64 dx, i64 dy) {
  if (dx == 0 && dy == 0) throw Error(ErrorCode::EqualPoints, "zero direction vector");
  i64 g = std::gcd(dx, dy);
  dx_ = dx / g;
  dy_ = dy / g;
}

std::strong_ordering compare_directions(const Direction& a, const Direction& b) {
  int ha = half_of(a), hb = half_of(b);
  if (ha != hb) return ha <=> hb;
  i128 cross = i128(a.dx()) * b.dy() - i128(a.dy()) * b.dx();
  // Within one half-turn, b is counterclockwise of a exactly when cross > 0.
  if (cross > 0) return std::strong_ordering::less;
  if (cross < 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Direction direction_of(Point from, Point to) {
  if (from == to) throw Error(ErrorCode::EqualPoints, "direction between equal points " + describe(from));
  return Direction(to.x - from.x, to.y - from.y);
}

Direction direction_between(const Direction& a, const Direction& b) {
  if (a == b) return a.opposite();
  i128 cross = i128(a.dx()) * b.dy() - i128(a.dy()) * b.dx();
  if (cross == 0) return Direction(-a.dy(), a.dx());  // b is opposite a
  i64 sx = a.dx() + b.dx(), sy = a.dy() + b.dy();
  if (cross > 0) return Direction(sx, sy);  // arc shorter than a half-turn
  return Direction(-sx, -sy);
}

FrameCoords frame_coords(Point p, const Direction& d) {
  return {p.x * d.dx() + p.y * d.dy(), -p.x * d.dy() + p.y * d.dx()};
}

Direction critical_direction_x(Point a, Point b) {
  if (a == b) throw Error(ErrorCode::EqualPoints, "critical direction of equal points " + describe(a));
  // u(a) = u(b)  <=>  (a - b) . d = 0
  i64 wx = a.x - b.x, wy = a.y - b.y;
  return Direction(-wy, wx).upper_half_representative();
}

Direction critical_direction_y(Point a, Point b) {
  if (a == b) throw Error(ErrorCode::EqualPoints, "critical direction of equal points " + describe(a));
  // v(a) = v(b)  <=>  (a - b) parallel to d
  return Direction(a.x - b.x, a.y - b.y).upper_half_representative();
}

Line make_line(i64 a, i64 b, i64 c) {
  if (a == 0 && b == 0) throw Error(ErrorCode::InvalidInput, "degenerate line");
  i64 g = std::gcd(std::gcd(a, b), c);
  a /= g;
  b /= g;
  c /= g;
  if (b < 0 || (b == 0 && a < 0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  return {a, b, c};
}

SlopeIntercept slope_intercept(const Line& line) {
  if (line.is_vertical()) throw Error(ErrorCode::VerticalLine, "vertical line has no slope form");
  return {Rational(-i128(line.a), line.b), Rational(-i128(line.c), line.b)};
}

Line dual_line(Point p) {
  // y = p.x * X - p.y   <=>   p.x * X - y - p.y = 0
  return make_line(p.x, -1, -p.y);
}

std::pair<Rational, Rational> dual_point(const Line& line) {
  if (line.is_vertical()) throw Error(ErrorCode::VerticalLine, "vertical line has no dual point");
  SlopeIntercept si = slope_intercept(line);
  return {si.slope, -si.intercept};
}

int side_of_line(const Rational& x, const Rational& y, const Line& line) {
  // sign(a x + b y + c) agrees with sign(y - line(x)) because b > 0.
  if (line.is_vertical()) throw Error(ErrorCode::VerticalLine, "above/below undefined for vertical line");
  Rational value = Rational(line.a) * x + Rational(line.b) * y + Rational(line.c);
  return value.sign();
}

}  // namespace bichrome
