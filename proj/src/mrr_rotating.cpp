#include "bichrome/mrr_rotating.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

#include "bichrome/errors.hpp"

namespace bichrome {

namespace {

std::string describe(const Direction& d) {
  return "(" + std::to_string(d.dx()) + "," + std::to_string(d.dy()) + ")";
}

std::string describe(const Event& e) {
  static const char* kNames[] = {"x-swap", "y-swap", "anchor"};
  std::string out = e.bootstrap ? "bootstrap" : kNames[static_cast<int>(e.kind)];
  out += " at " + describe(e.dir);
  if (!e.bootstrap) out += " [" + std::to_string(e.a) + "," + std::to_string(e.b) + "]";
  return out;
}

auto event_key(const Event& e) {
  return std::make_tuple(!e.bootstrap, static_cast<int>(e.kind), e.a, e.b, static_cast<int>(e.b_color));
}

bool event_less(const Event& x, const Event& y) {
  auto c = compare_directions(x.dir, y.dir);
  if (c != 0) return c < 0;
  return event_key(x) < event_key(y);
}

// A y-swap of blue pair {a, b} and the anchor event of the same pair.
bool inherent_coincidence(const Event& x, const Event& y) {
  const Event* swap = x.kind == EventKind::YSwap ? &x : &y;
  const Event* anchor = x.kind == EventKind::Anchor ? &x : &y;
  if (swap->kind != EventKind::YSwap || anchor->kind != EventKind::Anchor) return false;
  if (anchor->b_color != Color::Blue) return false;
  return std::minmax(swap->a, swap->b) == std::minmax(anchor->a, anchor->b);
}

void require_distinct_event_directions(const std::vector<Event>& events) {
  std::size_t i = 0;
  while (i < events.size()) {
    std::size_t j = i + 1;
    while (j < events.size() && events[j].dir == events[i].dir) ++j;
    const std::size_t group = j - i;
    if (events[i].bootstrap) {
      if (group != 2) {
        throw Error(ErrorCode::GeneralPosition,
                    "sweep event at the bootstrap direction: " + describe(events[i + 2]));
      }
    } else if (group == 2) {
      if (!inherent_coincidence(events[i], events[i + 1])) {
        throw Error(ErrorCode::GeneralPosition,
                    "coincident sweep events: " + describe(events[i]) + " and " + describe(events[i + 1]));
      }
    } else if (group > 2) {
      throw Error(ErrorCode::GeneralPosition, std::to_string(group) + " sweep events share direction " +
                                                  describe(events[i].dir));
    }
    i = j;
  }
}

const Point& point_of(PointRef ref, std::span<const Point> red, std::span<const Point> blue) {
  return ref.color == Color::Red ? red[ref.index] : blue[ref.index];
}

}  // namespace

void validate_mrr_instance(std::span<const Point> red, std::span<const Point> blue) {
  std::vector<Point> all(red.begin(), red.end());
  all.insert(all.end(), blue.begin(), blue.end());
  std::set<Point> seen;
  for (Point p : all) {
    require_coord_limit(p);
    if (!seen.insert(p).second) {
      throw Error(ErrorCode::GeneralPosition,
                  "duplicate point (" + std::to_string(p.x) + "," + std::to_string(p.y) + ")");
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      for (std::size_t k = j + 1; k < all.size(); ++k) {
        if (orientation(all[i], all[j], all[k]) == Orientation::Collinear) {
          throw Error(ErrorCode::GeneralPosition, "three collinear points");
        }
      }
    }
  }
  build_events(red, blue);
}

std::vector<Event> build_events(std::span<const Point> red, std::span<const Point> blue) {
  const auto m = static_cast<std::uint32_t>(blue.size());
  const auto n = static_cast<std::uint32_t>(red.size());
  std::vector<Event> events;
  events.reserve(2 + 2 * std::size_t(m) * (m - (m > 0)) + 2 * std::size_t(m) * (n + m));

  events.push_back({kAxisDirection, EventKind::XSwap, true, 0, 0, Color::Blue});
  events.push_back({kAxisDirection, EventKind::YSwap, true, 0, 0, Color::Blue});

  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = i + 1; j < m; ++j) {
      Direction cx = critical_direction_x(blue[i], blue[j]);
      Direction cy = critical_direction_y(blue[i], blue[j]);
      events.push_back({cx, EventKind::XSwap, false, i, j, Color::Blue});
      events.push_back({cx.opposite(), EventKind::XSwap, false, i, j, Color::Blue});
      events.push_back({cy, EventKind::YSwap, false, i, j, Color::Blue});
      events.push_back({cy.opposite(), EventKind::YSwap, false, i, j, Color::Blue});
    }
  }
  for (std::uint32_t p = 0; p < m; ++p) {
    for (std::uint32_t q = 0; q < n; ++q) {
      Direction d = direction_of(blue[p], red[q]);
      events.push_back({d, EventKind::Anchor, false, p, q, Color::Red});
      events.push_back({d.opposite(), EventKind::Anchor, false, p, q, Color::Red});
    }
    for (std::uint32_t q = p + 1; q < m; ++q) {
      Direction d = direction_of(blue[p], blue[q]);
      events.push_back({d, EventKind::Anchor, false, p, q, Color::Blue});
      events.push_back({d.opposite(), EventKind::Anchor, false, p, q, Color::Blue});
    }
  }

  std::sort(events.begin(), events.end(), event_less);
  require_distinct_event_directions(events);
  return events;
}

std::vector<std::uint32_t> fresh_order(std::span<const Point> blue, const Direction& dir, SortAxis axis) {
  std::vector<std::uint32_t> ids(blue.size());
  std::iota(ids.begin(), ids.end(), 0u);
  std::vector<FrameCoords> f(blue.size());
  for (std::size_t i = 0; i < blue.size(); ++i) f[i] = frame_coords(blue[i], dir);
  // Rotating the frame by a small positive angle e maps u -> u + e*v and
  // v -> v - e*u, which gives the tie-breaks below.
  if (axis == SortAxis::X) {
    std::sort(ids.begin(), ids.end(),
              [&](std::uint32_t a, std::uint32_t b) { return std::tie(f[a].u, f[a].v) < std::tie(f[b].u, f[b].v); });
  } else {
    std::sort(ids.begin(), ids.end(), [&](std::uint32_t a, std::uint32_t b) {
      return std::make_pair(f[a].v, -f[a].u) < std::make_pair(f[b].v, -f[b].u);
    });
  }
  return ids;
}

void KineticOrder::reset(std::span<const Point> blue, const Direction& dir, SortAxis axis) {
  auto& list = axis == SortAxis::X ? bx_ : by_;
  auto& pos = axis == SortAxis::X ? pos_x_ : pos_y_;
  list = fresh_order(blue, dir, axis);
  pos.assign(list.size(), 0);
  for (std::size_t i = 0; i < list.size(); ++i) pos[list[i]] = i;
}

void KineticOrder::apply_swap(SortAxis axis, std::uint32_t a, std::uint32_t b) {
  auto& list = axis == SortAxis::X ? bx_ : by_;
  auto& pos = axis == SortAxis::X ? pos_x_ : pos_y_;
  std::size_t pa = pos.at(a), pb = pos.at(b);
  if (pa + 1 != pb && pb + 1 != pa) {
    throw Error(ErrorCode::AdjacencyViolation,
                std::string(axis == SortAxis::X ? "x" : "y") + "-swap of non-consecutive points " +
                    std::to_string(a) + " and " + std::to_string(b));
  }
  std::swap(list[pa], list[pb]);
  std::swap(pos[a], pos[b]);
}

std::vector<CandidateRect> anchored_candidates(std::uint32_t p, PointRef q, const Direction& dir,
                                               std::span<const Point> red, std::span<const Point> blue,
                                               const KineticOrder& order) {
  const FrameCoords fp = frame_coords(blue[p], dir);
  const FrameCoords fq = frame_coords(point_of(q, red, blue), dir);
  if (fp.v != fq.v) {
    throw Error(ErrorCode::InvalidInput, "anchor direction is not parallel to the anchor pair");
  }
  const i64 base = fp.v;
  const i64 u_in_lo = std::min(fp.u, fq.u);
  const i64 u_in_hi = std::max(fp.u, fq.u);

  const auto& by = order.by();
  auto v_of = [&](std::uint32_t id) { return frame_coords(blue[id], dir).v; };
  auto first_above = std::partition_point(by.begin(), by.end(), [&](std::uint32_t id) { return v_of(id) <= base; });

  // Walk blue points above the anchor line bottom-up. The first one over the
  // closed segment [u_in_lo, u_in_hi] is r_m; everything before it is B'.
  // A B' point joins a staircase iff it is closer (in u) to the segment than
  // every lower B' point on the same side.
  struct Step {
    std::uint32_t id;
    i64 u, v;
  };
  std::vector<Step> left_stairs, right_stairs;  // v ascending = outermost first
  std::optional<Step> top_point;
  for (auto it = first_above; it != by.end(); ++it) {
    const FrameCoords f = frame_coords(blue[*it], dir);
    if (f.u >= u_in_lo && f.u <= u_in_hi) {
      top_point = Step{*it, f.u, f.v};
      break;
    }
    if (f.u < u_in_lo) {
      if (left_stairs.empty() || f.u > left_stairs.back().u) left_stairs.push_back({*it, f.u, f.v});
    } else if (right_stairs.empty() || f.u < right_stairs.back().u) {
      right_stairs.push_back({*it, f.u, f.v});
    }
  }

  std::vector<CandidateRect> out;
  out.reserve(1 + 2 * (left_stairs.size() + right_stairs.size()));

  auto emit = [&](const std::optional<Step>& l, const std::optional<Step>& r, const std::optional<Step>& t) {
    CandidateRect c;
    c.rect.dir = dir;
    c.rect.u_lo = l ? Bound::finite(l->u) : Bound::neg_inf();
    c.rect.u_hi = r ? Bound::finite(r->u) : Bound::pos_inf();
    c.rect.v_lo = Bound::finite(base);
    c.rect.v_hi = t ? Bound::finite(t->v) : Bound::pos_inf();
    c.p = p;
    c.q = q;
    if (l) c.left = l->id;
    if (r) c.right = r->id;
    if (t) c.top = t->id;
    out.push_back(std::move(c));
  };
  auto innermost = [](const std::vector<Step>& stairs) -> std::optional<Step> {
    if (stairs.empty()) return std::nullopt;
    return stairs.back();
  };
  // Innermost staircase point strictly lower than `level`: the last element
  // (in v-ascending order) with v < level.
  auto innermost_below = [](const std::vector<Step>& stairs, i64 level) -> std::optional<Step> {
    auto it = std::partition_point(stairs.begin(), stairs.end(), [&](const Step& s) { return s.v < level; });
    if (it == stairs.begin()) return std::nullopt;
    return *std::prev(it);
  };

  // Topped by r_m, or open upward when there is none.
  emit(innermost(left_stairs), innermost(right_stairs), top_point);

  // Each staircase point tops one rectangle whose own-side wall is the next
  // point outward, and is the top corner of one more whose wall passes through
  // it. The far wall is the innermost opposite-staircase point below it.
  for (std::size_t i = 0; i < left_stairs.size(); ++i) {
    const Step& s = left_stairs[i];
    std::optional<Step> far = innermost_below(right_stairs, s.v);
    std::optional<Step> outward = i == 0 ? std::nullopt : std::optional<Step>(left_stairs[i - 1]);
    emit(outward, far, s);
    emit(s, far, s);
  }
  for (std::size_t i = 0; i < right_stairs.size(); ++i) {
    const Step& s = right_stairs[i];
    std::optional<Step> far = innermost_below(left_stairs, s.v);
    std::optional<Step> outward = i == 0 ? std::nullopt : std::optional<Step>(right_stairs[i - 1]);
    emit(far, outward, s);
    emit(far, s, s);
  }
  return out;
}

SweepStats rotational_sweep(std::span<const Point> blue, const std::vector<Event>& events,
                            const std::function<void(const Event&, const KineticOrder&)>& on_anchor,
                            const EventObserver& observer) {
  SweepStats stats;
  KineticOrder order;
  for (const Event& e : events) {
    const SortAxis axis = e.kind == EventKind::XSwap ? SortAxis::X : SortAxis::Y;
    if (e.bootstrap) {
      order.reset(blue, e.dir, axis);
    } else if (e.kind == EventKind::Anchor) {
      ++stats.anchor_events;
      if (on_anchor) on_anchor(e, order);
    } else {
      order.apply_swap(axis, e.a, e.b);
    }
    ++stats.events_processed;
    if (observer) observer(e, order);
  }
  return stats;
}

MrrSolution solve_mrr(const MrrInstance& instance, const RangeCounter& red_counter, const EventObserver& observer) {
  if (instance.red.empty()) throw Error(ErrorCode::EmptyRed, "maximum red rectangle needs at least one red point");
  MrrSolution solution;
  if (instance.blue.empty()) {
    solution.whole_plane = true;
    solution.best.rect = OrientedRect{};
    solution.size = red_counter.count_closed(solution.best.rect);
    solution.stats.candidates_enumerated = 1;
    return solution;
  }

  const std::vector<Event> events = build_events(instance.red, instance.blue);
  bool have = false;
  std::size_t enumerated = 0;
  auto on_anchor = [&](const Event& e, const KineticOrder& order) {
    std::vector<CandidateRect> candidates =
        anchored_candidates(e.a, PointRef{e.b_color, e.b}, e.dir, instance.red, instance.blue, order);
    enumerated += candidates.size();
    for (CandidateRect& c : candidates) {
      std::size_t size = red_counter.count_closed(c.rect);
      if (!have || size > solution.size) {
        solution.best = std::move(c);
        solution.size = size;
        have = true;
      }
    }
  };
  solution.stats = rotational_sweep(instance.blue, events, on_anchor, observer);
  solution.stats.candidates_enumerated = enumerated;
  return solution;
}

}  // namespace bichrome
