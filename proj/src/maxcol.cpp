#include "bichrome/maxcol.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "bichrome/errors.hpp"

namespace bichrome {

namespace {

std::vector<SlopeIntercept> to_slope_form(std::span<const Line> lines) {
  std::vector<SlopeIntercept> out;
  out.reserve(lines.size());
  for (const Line& l : lines) out.push_back(slope_intercept(l));
  return out;
}

Line reflect_y(const Line& l) { return make_line(l.a, -l.b, l.c); }

std::vector<Line> lines_for_side(const DualArrangement& dual, DualSide side) {
  if (side == DualSide::Below) return dual.lines;
  std::vector<Line> out;
  out.reserve(dual.lines.size());
  for (const Line& l : dual.lines) out.push_back(reflect_y(l));
  return out;
}

// Traversal shared by decide() and trace_level(). `visit` returns true to stop.
template <typename Visit>
void walk_level(const DualArrangement& dual, std::size_t k, DualSide side, bool keep_counts, Visit&& visit) {
  const std::vector<Line> lines = lines_for_side(dual, side);
  if (k >= lines.size()) throw Error(ErrorCode::InvalidInput, "level index out of range");
  const std::vector<SlopeIntercept> f = to_slope_form(lines);
  const LevelPolyline level = k_level(lines, k);
  const std::size_t edges = level.vertices.size() + 1;
  const std::size_t pairs = dual.pair_count();

  auto sample_x = [&](std::size_t edge) -> Rational {
    const auto& vs = level.vertices;
    if (vs.empty()) return Rational(0);
    if (edge == 0) return vs.front().x - Rational(1);
    if (edge == vs.size()) return vs.back().x + Rational(1);
    return midpoint(vs[edge - 1].x, vs[edge].x);
  };

  std::uint32_t current = level.leftmost_line;
  std::vector<std::uint8_t> below(pairs, 0);
  std::size_t pairs_below = 0;
  {
    const Rational x = sample_x(0);
    const Rational y = f[current].at(x);
    for (std::uint32_t j = 0; j < lines.size(); ++j) {
      if (j != current && f[j].at(x) < y) {
        if (++below[j / 2] == 2) ++pairs_below;
      }
    }
  }

  for (std::size_t edge = 0; edge < edges; ++edge) {
    if (edge > 0) {
      const LevelVertex& vx = level.vertices[edge - 1];
      // The incoming line was below the outgoing one to the left of the
      // vertex iff its slope is smaller; only then does the below-set change.
      if (f[vx.out_line].slope > f[vx.in_line].slope) {
        if (below[vx.out_line / 2]-- == 2) --pairs_below;
        if (++below[vx.in_line / 2] == 2) ++pairs_below;
      }
      current = vx.out_line;
    }
    LevelEdgeState state;
    state.sample_x = sample_x(edge);
    state.sample_y = f[current].at(state.sample_x);
    state.line = current;
    state.pairs_fully_below = pairs_below;
    if (keep_counts) state.lines_below_per_pair = below;
    state.witness = DualWitness{state.sample_x, side == DualSide::Below ? state.sample_y : -state.sample_y};
    if (visit(std::move(state))) return;
  }
}

}  // namespace

std::vector<Point> PairInstance::points() const {
  std::vector<Point> out;
  out.reserve(2 * pairs.size());
  for (const auto& [a, b] : pairs) {
    out.push_back(a);
    out.push_back(b);
  }
  return out;
}

void validate_pair_instance(const PairInstance& instance) {
  const std::vector<Point> pts = instance.points();
  std::set<Point> seen;
  for (Point p : pts) {
    require_coord_limit(p);
    if (!seen.insert(p).second) {
      throw Error(ErrorCode::GeneralPosition,
                  "duplicate point (" + std::to_string(p.x) + "," + std::to_string(p.y) + ")");
    }
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        if (orientation(pts[i], pts[j], pts[k]) == Orientation::Collinear) {
          throw Error(ErrorCode::GeneralPosition, "three collinear points (concurrent dual lines)");
        }
      }
    }
  }
}

DualArrangement dualize(const PairInstance& instance) {
  DualArrangement out;
  out.lines.reserve(2 * instance.pairs.size());
  for (const auto& [a, b] : instance.pairs) {
    out.lines.push_back(dual_line(a));
    out.lines.push_back(dual_line(b));
  }
  return out;
}

std::uint32_t LevelPolyline::line_at(const Rational& x) const {
  std::uint32_t line = leftmost_line;
  for (const LevelVertex& v : vertices) {
    if (v.x > x) break;
    line = v.out_line;
  }
  return line;
}

LevelPolyline k_level(std::span<const Line> lines, std::size_t k) {
  if (k >= lines.size()) throw Error(ErrorCode::InvalidInput, "level index out of range");
  const std::vector<SlopeIntercept> f = to_slope_form(lines);

  // Order at x -> -infinity: larger slope is lower; parallel lines by intercept.
  std::vector<std::uint32_t> ids(lines.size());
  std::iota(ids.begin(), ids.end(), 0u);
  std::sort(ids.begin(), ids.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (f[a].slope != f[b].slope) return f[a].slope > f[b].slope;
    return f[a].intercept < f[b].intercept;
  });

  LevelPolyline level;
  level.leftmost_line = ids[k];
  std::uint32_t current = ids[k];
  std::optional<Rational> x_prev;
  while (true) {
    std::optional<Rational> best_x;
    std::uint32_t best_line = 0;
    bool tie = false;
    for (std::uint32_t j = 0; j < lines.size(); ++j) {
      if (j == current || f[j].slope == f[current].slope) continue;
      Rational x = (f[j].intercept - f[current].intercept) / (f[current].slope - f[j].slope);
      if (x_prev && x <= *x_prev) continue;
      if (!best_x || x < *best_x) {
        best_x = x;
        best_line = j;
        tie = false;
      } else if (x == *best_x) {
        tie = true;
      }
    }
    if (!best_x) break;
    if (tie) {
      throw Error(ErrorCode::ConcurrentLines, "three lines meet at x = " + best_x->to_string());
    }
    level.vertices.push_back(LevelVertex{*best_x, f[current].at(*best_x), current, best_line});
    current = best_line;
    x_prev = best_x;
  }
  return level;
}

Rational level_height(const LevelPolyline& level, std::span<const Line> lines, const Rational& x) {
  return slope_intercept(lines[level.line_at(x)]).at(x);
}

std::vector<LevelEdgeState> trace_level(const DualArrangement& dual, std::size_t k, DualSide side) {
  std::vector<LevelEdgeState> out;
  walk_level(dual, k, side, true, [&](LevelEdgeState&& s) {
    out.push_back(std::move(s));
    return false;
  });
  return out;
}

std::optional<DualWitness> decide(const DualArrangement& dual, std::size_t k, DualSide side) {
  std::optional<DualWitness> found;
  walk_level(dual, k, side, false, [&](LevelEdgeState&& s) {
    if (s.pairs_fully_below != 0) return false;
    found = s.witness;
    return true;
  });
  return found;
}

std::size_t max_feasible_k(const DualArrangement& dual, DualSide side) {
  if (dual.lines.empty()) return 0;
  std::size_t lo = 0, hi = dual.lines.size() - 1;  // decide(lo) holds
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo + 1) / 2;
    if (decide(dual, mid, side)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

bool Halfplane::contains(Point p) const {
  const Rational boundary = slope * Rational(p.x) - offset;
  const auto c = Rational(p.y) <=> boundary;
  return side == HalfplaneSide::Above ? c > 0 : c < 0;
}

Halfplane::Coefficients Halfplane::coefficients() const {
  // y = (sn/sd) x - (on/od)  ->  sn*od*x - sd*od*y - on*sd = 0, then scaled so b > 0.
  Coefficients out{slope.num() * offset.den(), -slope.den() * offset.den(), -offset.num() * slope.den()};
  i128 g = gcd128(gcd128(out.a, out.b), out.c);
  if (g != 0) {
    out.a /= g;
    out.b /= g;
    out.c /= g;
  }
  if (out.b < 0) {
    out.a = -out.a;
    out.b = -out.b;
    out.c = -out.c;
  }
  return out;
}

ColoringCertificate solve_maxcol(const PairInstance& instance) {
  if (instance.pairs.empty()) throw Error(ErrorCode::EmptyInstance, "maximum coloring needs at least one pair");
  const DualArrangement dual = dualize(instance);
  const std::size_t k_below = max_feasible_k(dual, DualSide::Below);
  const std::size_t k_above = max_feasible_k(dual, DualSide::Above);

  ColoringCertificate cert;
  cert.dual_side = k_below >= k_above ? DualSide::Below : DualSide::Above;
  cert.eta = std::max(k_below, k_above);
  std::optional<DualWitness> witness = decide(dual, cert.eta, cert.dual_side);
  if (!witness) throw Error(ErrorCode::InvalidInput, "binary search result failed to re-decide");
  cert.witness = *witness;

  // Lines below the dual witness are points above the primal line, and vice versa.
  cert.halfplane.slope = witness->u;
  cert.halfplane.offset = witness->v;
  cert.halfplane.side = cert.dual_side == DualSide::Below ? HalfplaneSide::Above : HalfplaneSide::Below;

  const std::vector<Point> pts = instance.points();
  cert.colors.assign(pts.size(), Color::Blue);
  for (std::uint32_t i = 0; i < instance.pairs.size(); ++i) {
    const std::uint32_t a = 2 * i, b = 2 * i + 1;
    const bool in_b = cert.halfplane.contains(pts[b]);
    const bool in_a = cert.halfplane.contains(pts[a]);
    const std::uint32_t red = (in_b && !in_a) ? b : a;
    cert.colors[red] = Color::Red;
    if (in_a || in_b) cert.red_in_halfplane.push_back(red);
  }
  return cert;
}

bool certificate_is_valid(const PairInstance& instance, const ColoringCertificate& certificate) {
  const std::vector<Point> pts = instance.points();
  if (certificate.colors.size() != pts.size()) return false;
  std::size_t red_inside = 0;
  for (std::size_t i = 0; i < instance.pairs.size(); ++i) {
    if (certificate.colors[2 * i] == certificate.colors[2 * i + 1]) return false;
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!certificate.halfplane.contains(pts[i])) continue;
    if (certificate.colors[i] == Color::Blue) return false;
    ++red_inside;
  }
  return red_inside == certificate.eta;
}

}  // namespace bichrome
