#pragma once

// Brute-force references. Nothing here calls into the solver modules; the only
// shared code is geom_core (points, directions, frame coordinates, lines).

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bichrome/geom_core.hpp"
#include "bichrome/rational.hpp"

namespace bichrome::oracle {

inline constexpr std::size_t kMrrLimit = 16;
inline constexpr std::size_t kAxisLimit = 64;
inline constexpr std::size_t kMaxColLimit = 16;

// Maximum red count of a rectangle of any orientation with no blue point in
// its open interior. Searches every direction of every (blue, any) point pair,
// both sides, with the other sides placed on blue points or at infinity.
// Throws Error(LimitExceeded) beyond kMrrLimit red or blue points.
std::size_t max_red_rectangle(std::span<const Point> red, std::span<const Point> blue);

// Axis-parallel rectangle, sides on blue points or on the expanded bounding
// box [min-1, max+1]^2 of all points.
struct AxisBox {
  i64 x_lo, x_hi, y_lo, y_hi;

  friend auto operator<=>(const AxisBox&, const AxisBox&) = default;
};

// All maximal blue-empty axis boxes within `clip` (sorted): every choice of
// four boundary coordinates, filtered by open emptiness and by the
// can't-push-any-side test.
std::vector<AxisBox> maximal_empty_boxes(std::span<const Point> blue, const AxisBox& clip);

std::size_t max_red_axis_rectangle(std::span<const Point> red, std::span<const Point> blue);

// One rectangle anchored on the line through p and q, in the frame of `dir`
// (the direction of q - p or p - q): bottom at v(p), u-range covering both
// anchors, interior in v > v(p). Bounds are frame coordinates; nullopt is
// unbounded.
struct AnchoredBox {
  std::optional<i64> left, right, top;
  i64 bottom = 0;

  friend auto operator<=>(const AnchoredBox&, const AnchoredBox&) = default;
};

// Every anchored box whose finite sides each contain a blue point strictly
// above the anchor line and whose open interior is blue-free (sorted).
std::vector<AnchoredBox> anchored_boxes(Point p, Point q, const Direction& dir, std::span<const Point> blue);

// Largest number of points in an open halfplane that takes at most one point
// of each pair. Tries every line through two of the points, on both sides,
// with each of the two points pushed in or out by an infinitesimal shift.
std::size_t max_coloring(std::span<const std::pair<Point, Point>> pairs);

// The (k+1)-th smallest value among the lines at x.
Rational level_height(std::span<const Line> lines, std::size_t k, const Rational& x);

}  // namespace bichrome::oracle
