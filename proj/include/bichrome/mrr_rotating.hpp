#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bichrome/geom_core.hpp"
#include "bichrome/range_count.hpp"

namespace bichrome {

struct MrrInstance {
  std::vector<Point> red;
  std::vector<Point> blue;
};

// General position for the rotating solver:
//   * coordinates within kCoordLimit, all points distinct,
//   * no three points of red+blue collinear,
//   * no sweep event at direction 0 (the bootstrap frame), and
//   * no two events sharing a direction, except the swap of a blue pair in
//     y-order and the anchor event of the same pair, which coincide by
//     construction.
// Throws Error(GeneralPosition) / Error(CoordinateBound) / Error(EqualPoints).
void validate_mrr_instance(std::span<const Point> red, std::span<const Point> blue);

enum class EventKind : std::uint8_t { XSwap = 0, YSwap = 1, Anchor = 2 };

struct PointRef {
  Color color = Color::Blue;
  std::uint32_t index = 0;

  friend bool operator==(const PointRef&, const PointRef&) = default;
};

// XSwap/YSwap: blue points a and b exchange places in the u- (v-) order.
// Anchor: a is a blue point p, (b_color, b) is the second point q.
// Bootstrap events sit at direction 0 and (re)build the sorted orders.
struct Event {
  Direction dir = kAxisDirection;
  EventKind kind = EventKind::XSwap;
  bool bootstrap = false;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  Color b_color = Color::Blue;
};

// Events over [0, 360) sorted by angle, then kind (XSwap < YSwap < Anchor),
// then point ids; the two bootstrap events come first.
std::vector<Event> build_events(std::span<const Point> red, std::span<const Point> blue);

enum class SortAxis { X, Y };

// Blue point ids sorted by frame u (bx) and frame v (by) for the current sweep
// direction, maintained by adjacent swaps.
class KineticOrder {
 public:
  void reset(std::span<const Point> blue, const Direction& dir, SortAxis axis);

  const std::vector<std::uint32_t>& bx() const { return bx_; }
  const std::vector<std::uint32_t>& by() const { return by_; }
  std::size_t position(SortAxis axis, std::uint32_t id) const {
    return axis == SortAxis::X ? pos_x_[id] : pos_y_[id];
  }

  // Throws Error(AdjacencyViolation) unless a and b are consecutive.
  void apply_swap(SortAxis axis, std::uint32_t a, std::uint32_t b);

 private:
  std::vector<std::uint32_t> bx_, by_;
  std::vector<std::size_t> pos_x_, pos_y_;
};

// Exact order just after `dir` in counterclockwise sweep: sort by (u, v) for X
// and (v, -u) for Y. This is the reference the kinetic order must reproduce.
std::vector<std::uint32_t> fresh_order(std::span<const Point> blue, const Direction& dir, SortAxis axis);

struct CandidateRect {
  OrientedRect rect;
  std::uint32_t p = 0;   // blue anchor
  PointRef q;            // second anchor on the bottom side
  // Blue point on each remaining side; nullopt marks an unbounded side.
  std::optional<std::uint32_t> left, right, top;
};

// Rectangles whose bottom side lies on the line through p and q (frame v equal
// to v(p)), contain both on that side, and extend into v > v(p). Every other
// side holds a point of the left staircase, the right staircase, or r_m (the
// lowest blue point above the segment), or is unbounded.
//
// `dir` is the direction of q - p or p - q; `order.by()` must be sorted by
// frame v at `dir`.
std::vector<CandidateRect> anchored_candidates(std::uint32_t p, PointRef q, const Direction& dir,
                                               std::span<const Point> red, std::span<const Point> blue,
                                               const KineticOrder& order);

struct SweepStats {
  std::size_t events_processed = 0;
  std::size_t anchor_events = 0;
  std::size_t candidates_enumerated = 0;
};

// Called after each event has been applied to the order.
using EventObserver = std::function<void(const Event&, const KineticOrder&)>;

// Runs the full 360 degree sweep, calling `on_anchor` for each anchor event
// with the order valid at that direction.
SweepStats rotational_sweep(std::span<const Point> blue, const std::vector<Event>& events,
                            const std::function<void(const Event&, const KineticOrder&)>& on_anchor,
                            const EventObserver& observer = {});

struct MrrSolution {
  CandidateRect best;
  std::size_t size = 0;
  SweepStats stats;
  // No blue points: the answer is the whole plane.
  bool whole_plane = false;
};

// Maximum red rectangle of arbitrary orientation. Ties go to the first
// candidate found in sweep order. Throws Error(EmptyRed) when red is empty.
MrrSolution solve_mrr(const MrrInstance& instance, const RangeCounter& red_counter,
                      const EventObserver& observer = {});

}  // namespace bichrome
