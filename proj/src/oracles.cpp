#include "bichrome/oracles.hpp"

#include <algorithm>
#include <string>

#include "bichrome/errors.hpp"

namespace bichrome::oracle {

namespace {

void check_limit(std::size_t count, std::size_t limit, const char* what) {
  if (count > limit) {
    throw Error(ErrorCode::LimitExceeded, std::string("oracle limit exceeded: ") + what + " = " +
                                              std::to_string(count) + " > " + std::to_string(limit));
  }
}

// Closed-interval membership with optional (infinite) ends.
bool at_most(i64 value, const std::optional<i64>& hi) { return !hi || value <= *hi; }
bool at_least(i64 value, const std::optional<i64>& lo) { return !lo || value >= *lo; }
bool strictly_below(i64 value, const std::optional<i64>& hi) { return !hi || value < *hi; }
bool strictly_above(i64 value, const std::optional<i64>& lo) { return !lo || value > *lo; }

struct Framed {
  std::vector<FrameCoords> red, blue;
};

Framed frame_all(std::span<const Point> red, std::span<const Point> blue, const Direction& d) {
  Framed f;
  for (Point p : red) f.red.push_back(frame_coords(p, d));
  for (Point p : blue) f.blue.push_back(frame_coords(p, d));
  return f;
}

// Checks one box (bottom at `base`) against the definition: each finite side
// holds a blue point from `wall_points`, the open interior holds no blue point.
bool is_red_box(const std::vector<FrameCoords>& blue, const std::vector<FrameCoords>& wall_points, i64 base,
                const std::optional<i64>& left, const std::optional<i64>& right, const std::optional<i64>& top) {
  auto on_left = [&](const FrameCoords& b) { return b.u == *left && b.v >= base && at_most(b.v, top); };
  auto on_right = [&](const FrameCoords& b) { return b.u == *right && b.v >= base && at_most(b.v, top); };
  auto on_top = [&](const FrameCoords& b) { return b.v == *top && at_least(b.u, left) && at_most(b.u, right); };
  if (left && std::none_of(wall_points.begin(), wall_points.end(), on_left)) return false;
  if (right && std::none_of(wall_points.begin(), wall_points.end(), on_right)) return false;
  if (top && std::none_of(wall_points.begin(), wall_points.end(), on_top)) return false;
  for (const FrameCoords& b : blue) {
    if (strictly_above(b.u, left) && strictly_below(b.u, right) && b.v > base && strictly_below(b.v, top)) {
      return false;
    }
  }
  return true;
}

std::size_t count_red(const std::vector<FrameCoords>& red, i64 base, const std::optional<i64>& left,
                      const std::optional<i64>& right, const std::optional<i64>& top) {
  std::size_t total = 0;
  for (const FrameCoords& r : red) {
    if (at_least(r.u, left) && at_most(r.u, right) && r.v >= base && at_most(r.v, top)) ++total;
  }
  return total;
}

std::size_t best_anchored(Point p, Point q, const Direction& d, std::span<const Point> red,
                          std::span<const Point> blue) {
  const Framed f = frame_all(red, blue, d);
  const FrameCoords fp = frame_coords(p, d), fq = frame_coords(q, d);
  const i64 base = fp.v;
  const i64 u_lo = std::min(fp.u, fq.u), u_hi = std::max(fp.u, fq.u);

  std::vector<std::optional<i64>> lefts{std::nullopt}, rights{std::nullopt}, tops{std::nullopt};
  for (const FrameCoords& b : f.blue) {
    if (b.u <= u_lo) lefts.push_back(b.u);
    if (b.u >= u_hi) rights.push_back(b.u);
    if (b.v > base) tops.push_back(b.v);
  }
  std::size_t best = 0;
  for (const auto& l : lefts) {
    for (const auto& r : rights) {
      for (const auto& t : tops) {
        if (!is_red_box(f.blue, f.blue, base, l, r, t)) continue;
        best = std::max(best, count_red(f.red, base, l, r, t));
      }
    }
  }
  return best;
}

}  // namespace

std::size_t max_red_rectangle(std::span<const Point> red, std::span<const Point> blue) {
  check_limit(red.size(), kMrrLimit, "red points");
  check_limit(blue.size(), kMrrLimit, "blue points");
  if (blue.empty()) return red.size();
  std::size_t best = 0;
  for (std::size_t i = 0; i < blue.size(); ++i) {
    const Point p = blue[i];
    std::vector<Point> partners(red.begin(), red.end());
    partners.insert(partners.end(), blue.begin() + static_cast<std::ptrdiff_t>(i) + 1, blue.end());
    for (Point q : partners) {
      const Direction d = direction_of(p, q);
      best = std::max(best, best_anchored(p, q, d, red, blue));
      best = std::max(best, best_anchored(p, q, d.opposite(), red, blue));
    }
  }
  return best;
}

std::vector<AxisBox> maximal_empty_boxes(std::span<const Point> blue, const AxisBox& clip) {
  std::vector<i64> xs{clip.x_lo, clip.x_hi}, ys{clip.y_lo, clip.y_hi};
  for (Point b : blue) {
    xs.push_back(b.x);
    ys.push_back(b.y);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  std::vector<AxisBox> out;
  std::vector<Point> strip;
  for (std::size_t a = 0; a < xs.size(); ++a) {
    for (std::size_t b = a + 1; b < xs.size(); ++b) {
      const i64 x_lo = xs[a], x_hi = xs[b];
      strip.clear();
      for (Point p : blue) {
        if (p.x > x_lo && p.x < x_hi) strip.push_back(p);
      }
      for (std::size_t c = 0; c < ys.size(); ++c) {
        for (std::size_t d = c + 1; d < ys.size(); ++d) {
          const i64 y_lo = ys[c], y_hi = ys[d];
          bool empty = std::none_of(strip.begin(), strip.end(), [&](Point p) { return p.y > y_lo && p.y < y_hi; });
          if (!empty) continue;
          auto blocks_x = [&](i64 x) {
            return std::any_of(blue.begin(), blue.end(), [&](Point p) { return p.x == x && p.y > y_lo && p.y < y_hi; });
          };
          auto blocks_y = [&](i64 y) {
            return std::any_of(blue.begin(), blue.end(), [&](Point p) { return p.y == y && p.x > x_lo && p.x < x_hi; });
          };
          bool maximal = (x_lo == clip.x_lo || blocks_x(x_lo)) && (x_hi == clip.x_hi || blocks_x(x_hi)) &&
                         (y_lo == clip.y_lo || blocks_y(y_lo)) && (y_hi == clip.y_hi || blocks_y(y_hi));
          if (maximal) out.push_back({x_lo, x_hi, y_lo, y_hi});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t max_red_axis_rectangle(std::span<const Point> red, std::span<const Point> blue) {
  check_limit(red.size(), kAxisLimit, "red points");
  check_limit(blue.size(), kAxisLimit, "blue points");
  if (red.empty()) return 0;
  AxisBox clip{red[0].x, red[0].x, red[0].y, red[0].y};
  auto grow = [&clip](Point p) {
    clip.x_lo = std::min(clip.x_lo, p.x - 1);
    clip.x_hi = std::max(clip.x_hi, p.x + 1);
    clip.y_lo = std::min(clip.y_lo, p.y - 1);
    clip.y_hi = std::max(clip.y_hi, p.y + 1);
  };
  for (Point p : red) grow(p);
  for (Point p : blue) grow(p);

  std::size_t best = 0;
  for (const AxisBox& box : maximal_empty_boxes(blue, clip)) {
    std::size_t inside = std::count_if(red.begin(), red.end(), [&](Point p) {
      return p.x >= box.x_lo && p.x <= box.x_hi && p.y >= box.y_lo && p.y <= box.y_hi;
    });
    best = std::max(best, inside);
  }
  return best;
}

std::vector<AnchoredBox> anchored_boxes(Point p, Point q, const Direction& dir, std::span<const Point> blue) {
  const FrameCoords fp = frame_coords(p, dir), fq = frame_coords(q, dir);
  const i64 base = fp.v;
  const i64 u_lo = std::min(fp.u, fq.u), u_hi = std::max(fp.u, fq.u);
  std::vector<FrameCoords> all, above;
  for (Point b : blue) {
    FrameCoords f = frame_coords(b, dir);
    all.push_back(f);
    if (f.v > base) above.push_back(f);
  }
  std::vector<std::optional<i64>> lefts{std::nullopt}, rights{std::nullopt}, tops{std::nullopt};
  for (const FrameCoords& b : above) {
    if (b.u < u_lo) lefts.push_back(b.u);
    if (b.u > u_hi) rights.push_back(b.u);
    tops.push_back(b.v);
  }
  std::vector<AnchoredBox> out;
  for (const auto& l : lefts) {
    for (const auto& r : rights) {
      for (const auto& t : tops) {
        if (is_red_box(all, above, base, l, r, t)) out.push_back(AnchoredBox{l, r, t, base});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t max_coloring(std::span<const std::pair<Point, Point>> pairs) {
  check_limit(pairs.size(), kMaxColLimit, "pairs");
  std::vector<Point> pts;
  for (const auto& [a, b] : pairs) {
    pts.push_back(a);
    pts.push_back(b);
  }
  const std::size_t count = pts.size();
  std::size_t best = count > 0 ? 1 : 0;  // a single hull vertex is always separable
  std::vector<int> sign(count);
  std::vector<bool> inside(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      for (std::size_t k = 0; k < count; ++k) sign[k] = static_cast<int>(orientation(pts[i], pts[j], pts[k]));
      for (int side : {1, -1}) {
        // mask bit 0: push pts[i] inside, bit 1: push pts[j] inside
        for (int mask = 0; mask < 4; ++mask) {
          for (std::size_t k = 0; k < count; ++k) inside[k] = sign[k] == side;
          inside[i] = (mask & 1) != 0;
          inside[j] = (mask & 2) != 0;
          bool ok = true;
          std::size_t total = 0;
          for (std::size_t pr = 0; pr < pairs.size(); ++pr) {
            if (inside[2 * pr] && inside[2 * pr + 1]) ok = false;
            total += inside[2 * pr] + inside[2 * pr + 1];
          }
          if (ok) best = std::max(best, total);
        }
      }
    }
  }
  return best;
}

Rational level_height(std::span<const Line> lines, std::size_t k, const Rational& x) {
  if (k >= lines.size()) throw Error(ErrorCode::InvalidInput, "level index out of range");
  std::vector<Rational> values;
  values.reserve(lines.size());
  for (const Line& l : lines) values.push_back(slope_intercept(l).at(x));
  std::sort(values.begin(), values.end());
  return values[k];
}

}  // namespace bichrome::oracle
