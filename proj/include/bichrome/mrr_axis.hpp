#pragma once

#include <span>
#include <vector>

#include "bichrome/geom_core.hpp"
#include "bichrome/range_count.hpp"

namespace bichrome {

struct ClipBox {
  i64 min_x = -1;
  i64 max_x = 1;
  i64 min_y = -1;
  i64 max_y = 1;

  friend bool operator==(const ClipBox&, const ClipBox&) = default;
};

// Bounding box of all points expanded by one unit on every side, so every
// input point lies strictly inside. [-1,1]^2 when there are no points.
ClipBox clip_box_of(std::span<const Point> red, std::span<const Point> blue);

struct AxisInstance {
  std::vector<Point> red;
  std::vector<Point> blue;
  ClipBox clip;
};

// Validates (coordinate bound, distinct points, pairwise distinct x and
// pairwise distinct y over red and blue together) and computes the clip box.
AxisInstance make_axis_instance(std::vector<Point> red, std::vector<Point> blue);
void validate_axis_points(std::span<const Point> red, std::span<const Point> blue);

// All maximal axis-parallel rectangles inside `clip` whose open interior
// avoids `blue`. Each side holds a blue point in its relative interior or lies
// on the clip box. Throws Error(GeneralPosition) on shared coordinates.
std::vector<OrientedRect> enumerate_axis_candidates(std::span<const Point> blue, const ClipBox& clip);

struct AxisSolution {
  OrientedRect best;
  std::size_t size = 0;
  std::size_t candidates = 0;
};

// Maximum red count over the candidate set; ties go to the lexicographically
// smallest (u_lo, u_hi, v_lo, v_hi).
AxisSolution solve_axis_mrr(const AxisInstance& instance, const RangeCounter& red_counter);

}  // namespace bichrome
