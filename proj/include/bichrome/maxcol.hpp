#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bichrome/geom_core.hpp"
#include "bichrome/rational.hpp"

namespace bichrome {

struct PairInstance {
  std::vector<std::pair<Point, Point>> pairs;

  // Point 2i is pairs[i].first, point 2i+1 is pairs[i].second.
  std::vector<Point> points() const;
};

// Coordinates within kCoordLimit, all 2n points distinct, no three collinear
// (equivalently: no three dual lines concurrent).
void validate_pair_instance(const PairInstance& instance);

// lines[2i] and lines[2i+1] are the duals of pair i.
struct DualArrangement {
  std::vector<Line> lines;

  std::size_t pair_count() const { return lines.size() / 2; }
};

DualArrangement dualize(const PairInstance& instance);

struct LevelVertex {
  Rational x;
  Rational y;
  std::uint32_t in_line = 0;
  std::uint32_t out_line = 0;
};

// The k-level as a chain of line pieces: `leftmost_line` until the first
// vertex, then the out_line of each vertex in turn.
struct LevelPolyline {
  std::uint32_t leftmost_line = 0;
  std::vector<LevelVertex> vertices;

  std::uint32_t line_at(const Rational& x) const;
};

// Walks the k-level left to right: at each vertex the level moves onto the
// line crossing the current one. O(n) scan per vertex.
// Requires non-vertical lines and 0 <= k < lines.size(); throws
// Error(ConcurrentLines) if three lines meet in a point.
LevelPolyline k_level(std::span<const Line> lines, std::size_t k);

Rational level_height(const LevelPolyline& level, std::span<const Line> lines, const Rational& x);

enum class DualSide { Below, Above };

struct DualWitness {
  Rational u;
  Rational v;
};

// State on one open edge of the k-level. For DualSide::Above the arrangement is
// reflected (y -> -y) and the fields describe the reflected picture; `witness`
// is always in original coordinates.
struct LevelEdgeState {
  Rational sample_x;
  Rational sample_y;
  std::uint32_t line = 0;
  std::vector<std::uint8_t> lines_below_per_pair;
  std::size_t pairs_fully_below = 0;
  DualWitness witness;
};

// Full left-to-right traversal, one state per edge. Diagnostic companion of decide().
std::vector<LevelEdgeState> trace_level(const DualArrangement& dual, std::size_t k, DualSide side);

// A point with exactly k lines strictly on `side` of it and no pair with both
// lines there, taken at the first qualifying level edge (edge midpoint, or one
// unit past the extreme vertex on unbounded edges).
std::optional<DualWitness> decide(const DualArrangement& dual, std::size_t k, DualSide side);

// Largest k with decide(k, side) true, by binary search over [0, 2n-1].
std::size_t max_feasible_k(const DualArrangement& dual, DualSide side);

enum class HalfplaneSide { Above, Below };

// Open halfplane strictly above or below the line y = slope*x - offset.
struct Halfplane {
  Rational slope;
  Rational offset;
  HalfplaneSide side = HalfplaneSide::Above;

  bool contains(Point p) const;
  // Integer coefficients (a, b, c) of a*x + b*y + c = 0 for the boundary.
  struct Coefficients {
    i128 a, b, c;
  };
  Coefficients coefficients() const;
};

struct ColoringCertificate {
  Halfplane halfplane;
  std::vector<Color> colors;  // per point, indexed like PairInstance::points()
  std::size_t eta = 0;
  std::vector<std::uint32_t> red_in_halfplane;
  DualSide dual_side = DualSide::Below;
  DualWitness witness;
};

// Throws Error(EmptyInstance) for n = 0.
ColoringCertificate solve_maxcol(const PairInstance& instance);

// Recounts a certificate against the instance: valid coloring, no blue point
// in the halfplane, exactly eta red points in it.
bool certificate_is_valid(const PairInstance& instance, const ColoringCertificate& certificate);

}  // namespace bichrome
