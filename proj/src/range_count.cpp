#include "bichrome/range_count.hpp"

#include <algorithm>
#include <array>

#include "bichrome/errors.hpp"

namespace bichrome {

namespace {

constexpr std::uint32_t kLeafSize = 8;

int kind_rank(Bound::Kind kind) {
  switch (kind) {
    case Bound::Kind::NegInf: return 0;
    case Bound::Kind::Finite: return 1;
    case Bound::Kind::PosInf: return 2;
  }
  return 1;
}

// lo <= x (closed) or lo < x (open)
bool above_lower(const Bound& lo, i64 x, bool closed) {
  int c = lo.compare_to(x);
  return closed ? c <= 0 : c < 0;
}

bool below_upper(const Bound& hi, i64 x, bool closed) {
  int c = hi.compare_to(x);
  return closed ? c >= 0 : c > 0;
}

bool inside(const OrientedRect& rect, FrameCoords f, bool closed) {
  return above_lower(rect.u_lo, f.u, closed) && below_upper(rect.u_hi, f.u, closed) &&
         above_lower(rect.v_lo, f.v, closed) && below_upper(rect.v_hi, f.v, closed);
}

std::size_t count_linear(std::span<const Point> points, const OrientedRect& rect, bool closed) {
  std::size_t total = 0;
  for (Point p : points) {
    if (inside(rect, frame_coords(p, rect.dir), closed)) ++total;
  }
  return total;
}

}  // namespace

int Bound::compare_to(i64 x) const {
  switch (kind_) {
    case Kind::NegInf: return -1;
    case Kind::PosInf: return 1;
    case Kind::Finite: break;
  }
  if (value_.is_integer()) {
    i128 n = value_.num();
    return n < x ? -1 : (n > x ? 1 : 0);
  }
  auto c = value_ <=> Rational(x);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::string Bound::to_string() const {
  switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "inf";
    case Kind::Finite: break;
  }
  return value_.to_string();
}

Bound Bound::parse(std::string_view text) {
  if (text == "-inf") return neg_inf();
  if (text == "inf" || text == "+inf") return pos_inf();
  return finite(Rational::parse(text));
}

std::strong_ordering operator<=>(const Bound& a, const Bound& b) {
  if (a.kind_ != b.kind_) return kind_rank(a.kind_) <=> kind_rank(b.kind_);
  if (a.kind_ != Bound::Kind::Finite) return std::strong_ordering::equal;
  return a.value_ <=> b.value_;
}

void OrientedRect::validate() const {
  if (!(u_lo < u_hi) || !(v_lo < v_hi)) {
    throw Error(ErrorCode::InvalidInput, "rectangle has an empty interior");
  }
  if (u_lo.kind() == Bound::Kind::PosInf || u_hi.kind() == Bound::Kind::NegInf ||
      v_lo.kind() == Bound::Kind::PosInf || v_hi.kind() == Bound::Kind::NegInf) {
    throw Error(ErrorCode::InvalidInput, "rectangle bound has the wrong infinity");
  }
}

bool OrientedRect::contains_closed(Point p) const { return inside(*this, frame_coords(p, dir), true); }

bool OrientedRect::contains_open(Point p) const { return inside(*this, frame_coords(p, dir), false); }

bool bounds_less(const OrientedRect& a, const OrientedRect& b) {
  if (auto c = a.u_lo <=> b.u_lo; c != 0) return c < 0;
  if (auto c = a.u_hi <=> b.u_hi; c != 0) return c < 0;
  if (auto c = a.v_lo <=> b.v_lo; c != 0) return c < 0;
  return a.v_hi < b.v_hi;
}

std::size_t count_closed_naive(std::span<const Point> points, const OrientedRect& rect) {
  return count_linear(points, rect, true);
}

std::size_t count_open_interior(std::span<const Point> points, const OrientedRect& rect) {
  return count_linear(points, rect, false);
}

std::string_view to_string(CounterKind kind) {
  return kind == CounterKind::Naive ? "naive" : "accel";
}

CounterKind parse_counter_kind(std::string_view text) {
  if (text == "naive") return CounterKind::Naive;
  if (text == "accel") return CounterKind::Accelerated;
  throw Error(ErrorCode::InvalidInput, "unknown counter backend: " + std::string(text));
}

std::size_t NaiveCounter::count_closed(const OrientedRect& rect) const {
  return count_linear(points_, rect, true);
}

std::size_t NaiveCounter::count_open(const OrientedRect& rect) const {
  return count_linear(points_, rect, false);
}

KdTreeCounter::KdTreeCounter(std::vector<Point> points) : points_(std::move(points)) {
  if (!points_.empty()) {
    nodes_.reserve(2 * points_.size() / kLeafSize + 2);
    root_ = build(0, static_cast<std::uint32_t>(points_.size()), 0);
  }
}

std::int32_t KdTreeCounter::build(std::uint32_t begin, std::uint32_t end, int depth) {
  Node node{};
  node.begin = begin;
  node.end = end;
  node.min_x = node.max_x = points_[begin].x;
  node.min_y = node.max_y = points_[begin].y;
  for (std::uint32_t i = begin; i < end; ++i) {
    node.min_x = std::min(node.min_x, points_[i].x);
    node.max_x = std::max(node.max_x, points_[i].x);
    node.min_y = std::min(node.min_y, points_[i].y);
    node.max_y = std::max(node.max_y, points_[i].y);
  }
  auto index = static_cast<std::int32_t>(nodes_.size());
  nodes_.push_back(node);
  if (end - begin > kLeafSize) {
    std::uint32_t mid = begin + (end - begin) / 2;
    auto first = points_.begin() + begin, nth = points_.begin() + mid, last = points_.begin() + end;
    if (depth % 2 == 0) {
      std::nth_element(first, nth, last, [](Point a, Point b) { return a.x < b.x; });
    } else {
      std::nth_element(first, nth, last, [](Point a, Point b) { return a.y < b.y; });
    }
    std::int32_t left = build(begin, mid, depth + 1);
    std::int32_t right = build(mid, end, depth + 1);
    nodes_[index].left = left;
    nodes_[index].right = right;
  }
  return index;
}

std::size_t KdTreeCounter::count_closed(const OrientedRect& rect) const { return count(rect, true); }

std::size_t KdTreeCounter::count_open(const OrientedRect& rect) const { return count(rect, false); }

std::size_t KdTreeCounter::count(const OrientedRect& rect, bool closed) const {
  return root_ < 0 ? 0 : count_node(root_, rect, closed);
}

std::size_t KdTreeCounter::count_node(std::int32_t index, const OrientedRect& rect, bool closed) const {
  const Node& node = nodes_[index];
  const std::array<FrameCoords, 4> corners = {
      frame_coords({node.min_x, node.min_y}, rect.dir), frame_coords({node.min_x, node.max_y}, rect.dir),
      frame_coords({node.max_x, node.min_y}, rect.dir), frame_coords({node.max_x, node.max_y}, rect.dir)};

  // The cell is convex, so it is inside the (convex) range iff all corners are,
  // and it misses the range if all corners violate the same side.
  bool all_inside = true;
  std::array<int, 4> violations{};
  for (const FrameCoords& f : corners) {
    bool ok_ulo = above_lower(rect.u_lo, f.u, closed);
    bool ok_uhi = below_upper(rect.u_hi, f.u, closed);
    bool ok_vlo = above_lower(rect.v_lo, f.v, closed);
    bool ok_vhi = below_upper(rect.v_hi, f.v, closed);
    violations[0] += !ok_ulo;
    violations[1] += !ok_uhi;
    violations[2] += !ok_vlo;
    violations[3] += !ok_vhi;
    all_inside = all_inside && ok_ulo && ok_uhi && ok_vlo && ok_vhi;
  }
  if (all_inside) return node.end - node.begin;
  for (int v : violations) {
    if (v == 4) return 0;
  }
  if (node.left < 0) {
    return count_linear(std::span<const Point>(points_.data() + node.begin, node.end - node.begin), rect,
                        closed);
  }
  return count_node(node.left, rect, closed) + count_node(node.right, rect, closed);
}

std::unique_ptr<RangeCounter> make_counter(CounterKind kind, std::vector<Point> points) {
  if (kind == CounterKind::Accelerated) return std::make_unique<KdTreeCounter>(std::move(points));
  return std::make_unique<NaiveCounter>(std::move(points));
}

}  // namespace bichrome
