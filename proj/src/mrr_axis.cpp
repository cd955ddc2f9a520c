#include "bichrome/mrr_axis.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "bichrome/errors.hpp"

namespace bichrome {

namespace {

OrientedRect axis_rect(i64 x_lo, i64 x_hi, i64 y_lo, i64 y_hi) {
  return OrientedRect{kAxisDirection, Bound::finite(x_lo), Bound::finite(x_hi), Bound::finite(y_lo),
                      Bound::finite(y_hi)};
}

void require_distinct_coordinates(std::span<const Point> points) {
  std::set<i64> xs, ys;
  for (Point p : points) {
    if (!xs.insert(p.x).second) {
      throw Error(ErrorCode::GeneralPosition, "two points share x = " + std::to_string(p.x));
    }
    if (!ys.insert(p.y).second) {
      throw Error(ErrorCode::GeneralPosition, "two points share y = " + std::to_string(p.y));
    }
  }
}

}  // namespace

ClipBox clip_box_of(std::span<const Point> red, std::span<const Point> blue) {
  if (red.empty() && blue.empty()) return ClipBox{};
  Point first = red.empty() ? blue.front() : red.front();
  ClipBox box{first.x, first.x, first.y, first.y};
  auto grow = [&box](Point p) {
    box.min_x = std::min(box.min_x, p.x);
    box.max_x = std::max(box.max_x, p.x);
    box.min_y = std::min(box.min_y, p.y);
    box.max_y = std::max(box.max_y, p.y);
  };
  for (Point p : red) grow(p);
  for (Point p : blue) grow(p);
  return ClipBox{box.min_x - 1, box.max_x + 1, box.min_y - 1, box.max_y + 1};
}

void validate_axis_points(std::span<const Point> red, std::span<const Point> blue) {
  std::vector<Point> all(red.begin(), red.end());
  all.insert(all.end(), blue.begin(), blue.end());
  for (Point p : all) require_coord_limit(p);
  require_distinct_coordinates(all);
}

AxisInstance make_axis_instance(std::vector<Point> red, std::vector<Point> blue) {
  validate_axis_points(red, blue);
  ClipBox clip = clip_box_of(red, blue);
  return AxisInstance{std::move(red), std::move(blue), clip};
}

std::vector<OrientedRect> enumerate_axis_candidates(std::span<const Point> blue, const ClipBox& clip) {
  require_distinct_coordinates(blue);
  std::vector<Point> by_y(blue.begin(), blue.end());
  std::sort(by_y.begin(), by_y.end(), [](Point a, Point b) { return a.y < b.y; });

  std::vector<OrientedRect> out;

  // Bottom side supported by a blue point: grow upward, narrowing the x-range
  // each time a point lands inside it.
  for (std::size_t i = 0; i < by_y.size(); ++i) {
    const Point bottom = by_y[i];
    i64 left = clip.min_x, right = clip.max_x;
    for (std::size_t j = i + 1; j < by_y.size(); ++j) {
      const Point r = by_y[j];
      if (r.x <= left || r.x >= right) continue;
      out.push_back(axis_rect(left, right, bottom.y, r.y));
      if (r.x < bottom.x) {
        left = r.x;
      } else {
        right = r.x;
      }
    }
    out.push_back(axis_rect(left, right, bottom.y, clip.max_y));
  }

  // Bottom side on the clip box, top side supported by a blue point.
  for (std::size_t j = 0; j < by_y.size(); ++j) {
    const Point top = by_y[j];
    i64 left = clip.min_x, right = clip.max_x;
    for (std::size_t i = 0; i < j; ++i) {
      const Point r = by_y[i];
      if (r.x < top.x) {
        left = std::max(left, r.x);
      } else {
        right = std::min(right, r.x);
      }
    }
    out.push_back(axis_rect(left, right, clip.min_y, top.y));
  }

  // Full-height slabs between x-consecutive blue points.
  std::vector<i64> xs;
  xs.reserve(blue.size() + 2);
  xs.push_back(clip.min_x);
  for (Point p : blue) xs.push_back(p.x);
  xs.push_back(clip.max_x);
  std::sort(xs.begin() + 1, xs.end() - 1);
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    out.push_back(axis_rect(xs[k], xs[k + 1], clip.min_y, clip.max_y));
  }
  return out;
}

AxisSolution solve_axis_mrr(const AxisInstance& instance, const RangeCounter& red_counter) {
  std::vector<OrientedRect> candidates = enumerate_axis_candidates(instance.blue, instance.clip);
  AxisSolution best;
  best.candidates = candidates.size();
  bool have = false;
  for (const OrientedRect& rect : candidates) {
    std::size_t size = red_counter.count_closed(rect);
    if (!have || size > best.size || (size == best.size && bounds_less(rect, best.best))) {
      best.best = rect;
      best.size = size;
      have = true;
    }
  }
  return best;
}

}  // namespace bichrome
