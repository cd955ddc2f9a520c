#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>

#include "bichrome/rational.hpp"

namespace bichrome {

// Input coordinates are bounded so that frame coordinates (one dot product of a
// point with a difference vector) fit in 64 bits and every product of two frame
// coordinates fits in 128 bits.
inline constexpr i64 kCoordLimit = i64(1) << 20;

struct Point {
  i64 x = 0;
  i64 y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

enum class Color : std::uint8_t { Red, Blue };

bool within_coord_limit(Point p);
// Throws Error(CoordinateBound) naming the offending point.
void require_coord_limit(Point p);

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };

Orientation orientation(Point p, Point q, Point r);

// A planar direction (an orientation angle in [0, 360)) stored as a
// gcd-reduced integer vector, so every geometric direction has exactly one
// representation and equality is componentwise.
class Direction {
 public:
  Direction(i64 dx, i64 dy);

  i64 dx() const { return dx_; }
  i64 dy() const { return dy_; }

  Direction opposite() const { return Direction(-dx_, -dy_); }
  // Angle lies in [0, 180).
  bool in_upper_half() const { return dy_ > 0 || (dy_ == 0 && dx_ > 0); }
  Direction upper_half_representative() const { return in_upper_half() ? *this : opposite(); }

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  i64 dx_;
  i64 dy_;
};

inline const Direction kAxisDirection{1, 0};

// Angle order on [0, 360) starting at +x, counterclockwise.
std::strong_ordering compare_directions(const Direction& a, const Direction& b);

struct DirectionLess {
  bool operator()(const Direction& a, const Direction& b) const {
    return compare_directions(a, b) < 0;
  }
};

// Direction of the vector to - from.
Direction direction_of(Point from, Point to);

// Some direction strictly inside the counterclockwise arc from a to b. For
// a == b the arc is the full turn and the opposite direction is returned.
Direction direction_between(const Direction& a, const Direction& b);

struct FrameCoords {
  i64 u = 0;
  i64 v = 0;

  friend bool operator==(const FrameCoords&, const FrameCoords&) = default;
};

// Coordinates of p in the frame whose x-axis points along d:
//   u = p . d,  v = p . perp(d)   with perp(d) = (-dy, dx).
// Both are scaled by |d|, uniformly per frame.
FrameCoords frame_coords(Point p, const Direction& d);

// The direction in [0, 180) at which a and b share their frame x-coordinate.
// The relative u-order of a and b flips exactly at this direction and its
// opposite.
Direction critical_direction_x(Point a, Point b);
// Same for the frame y-coordinate.
Direction critical_direction_y(Point a, Point b);

// Line a*x + b*y + c = 0 with (a, b) != (0, 0), gcd-reduced and sign-canonical
// (b > 0, or b == 0 and a > 0).
struct Line {
  i64 a = 0;
  i64 b = 0;
  i64 c = 0;

  bool is_vertical() const { return b == 0; }
  friend bool operator==(const Line&, const Line&) = default;
};

Line make_line(i64 a, i64 b, i64 c);

// Non-vertical line y = slope * x + intercept.
struct SlopeIntercept {
  Rational slope;
  Rational intercept;

  Rational at(const Rational& x) const { return slope * x + intercept; }
};

SlopeIntercept slope_intercept(const Line& line);

// Point (a, b) maps to the line y = a*x - b.
Line dual_line(Point p);

// The line y = u*x - v maps to the point (u, v).
std::pair<Rational, Rational> dual_point(const Line& line);

// Sign of (point.y - line(point.x)); +1 means strictly above.
int side_of_line(const Rational& x, const Rational& y, const Line& line);

}  // namespace bichrome
