#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bichrome/geom_core.hpp"
#include "bichrome/rational.hpp"

namespace bichrome {

// A rectangle side in frame units: a finite rational or one of the infinities.
class Bound {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  static Bound neg_inf() { return Bound(Kind::NegInf, Rational()); }
  static Bound pos_inf() { return Bound(Kind::PosInf, Rational()); }
  static Bound finite(Rational value) { return Bound(Kind::Finite, std::move(value)); }
  static Bound finite(i64 value) { return Bound(Kind::Finite, Rational(value)); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  // Precondition: is_finite().
  const Rational& value() const { return value_; }

  // Compares against a finite coordinate: -1 if bound < x, 0 if equal, +1 if bound > x.
  int compare_to(i64 x) const;

  // "num/den", "inf" or "-inf".
  std::string to_string() const;
  static Bound parse(std::string_view text);

  friend bool operator==(const Bound&, const Bound&) = default;
  friend std::strong_ordering operator<=>(const Bound& a, const Bound& b);

 private:
  Bound(Kind kind, Rational value) : kind_(kind), value_(std::move(value)) {}

  Kind kind_;
  Rational value_;
};

// Rectangle in the frame of `dir`: u_lo <= p.dir <= u_hi, v_lo <= p.perp(dir) <= v_hi.
// Finite bounds are in the same unnormalized units as frame_coords(., dir).
struct OrientedRect {
  Direction dir = kAxisDirection;
  Bound u_lo = Bound::neg_inf();
  Bound u_hi = Bound::pos_inf();
  Bound v_lo = Bound::neg_inf();
  Bound v_hi = Bound::pos_inf();

  // Throws Error(InvalidInput) unless both extents have a nonempty interior.
  void validate() const;

  bool contains_closed(Point p) const;
  bool contains_open(Point p) const;

  friend bool operator==(const OrientedRect&, const OrientedRect&) = default;
};

// Lexicographic (u_lo, u_hi, v_lo, v_hi) order; used for deterministic tie-breaks.
bool bounds_less(const OrientedRect& a, const OrientedRect& b);

std::size_t count_closed_naive(std::span<const Point> points, const OrientedRect& rect);
std::size_t count_open_interior(std::span<const Point> points, const OrientedRect& rect);

enum class CounterKind { Naive, Accelerated };

std::string_view to_string(CounterKind kind);
CounterKind parse_counter_kind(std::string_view text);

// Immutable after construction; queries are safe from many threads.
class RangeCounter {
 public:
  virtual ~RangeCounter() = default;

  virtual std::size_t count_closed(const OrientedRect& rect) const = 0;
  virtual std::size_t count_open(const OrientedRect& rect) const = 0;
  virtual std::size_t size() const = 0;
  virtual CounterKind kind() const = 0;
};

// O(n) per query. The reference backend.
class NaiveCounter final : public RangeCounter {
 public:
  explicit NaiveCounter(std::vector<Point> points) : points_(std::move(points)) {}

  std::size_t count_closed(const OrientedRect& rect) const override;
  std::size_t count_open(const OrientedRect& rect) const override;
  std::size_t size() const override { return points_.size(); }
  CounterKind kind() const override { return CounterKind::Naive; }

 private:
  std::vector<Point> points_;
};

// Counting kd-tree: every node keeps its point count and bounding box, so a
// query only descends into cells that straddle a rectangle side. A convex range
// visits O(sqrt(n)) cells. Counts are exact and identical to NaiveCounter.
class KdTreeCounter final : public RangeCounter {
 public:
  explicit KdTreeCounter(std::vector<Point> points);

  std::size_t count_closed(const OrientedRect& rect) const override;
  std::size_t count_open(const OrientedRect& rect) const override;
  std::size_t size() const override { return points_.size(); }
  CounterKind kind() const override { return CounterKind::Accelerated; }

 private:
  struct Node {
    i64 min_x, max_x, min_y, max_y;
    std::uint32_t begin, end;  // range in points_
    std::int32_t left = -1, right = -1;
  };

  std::int32_t build(std::uint32_t begin, std::uint32_t end, int depth);
  std::size_t count(const OrientedRect& rect, bool closed) const;
  std::size_t count_node(std::int32_t node, const OrientedRect& rect, bool closed) const;

  std::vector<Point> points_;
  std::vector<Node> nodes_;
  std::int32_t root_ = -1;
};

std::unique_ptr<RangeCounter> make_counter(CounterKind kind, std::vector<Point> points);

}  // namespace bichrome
