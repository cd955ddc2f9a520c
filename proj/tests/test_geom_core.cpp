#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "bichrome/errors.hpp"
#include "bichrome/geom_core.hpp"
#include "doctest.h"

using namespace bichrome;

TEST_CASE("orientation") {
  CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == Orientation::CCW);
  CHECK(orientation({0, 0}, {1, 1}, {2, 2}) == Orientation::Collinear);
  CHECK(orientation({0, 0}, {0, 1}, {1, 0}) == Orientation::CW);
}

TEST_CASE("frame coordinates") {
  CHECK(frame_coords({3, 4}, Direction(1, 0)) == FrameCoords{3, 4});
  // v = -x*dy + y*dx, so the x-axis maps to negative v in the 90 degree frame
  CHECK(frame_coords({1, 0}, Direction(0, 1)) == FrameCoords{0, -1});
  CHECK(frame_coords({0, 1}, Direction(0, 1)) == FrameCoords{1, 0});
  CHECK(frame_coords({2, 1}, Direction(1, 1)) == FrameCoords{3, -1});
}

TEST_CASE("directions are reduced and zero is rejected") {
  CHECK(Direction(4, -6) == Direction(2, -3));
  CHECK(Direction(0, -5) == Direction(0, -1));
  CHECK_THROWS_AS(Direction(0, 0), Error);
  CHECK_THROWS_AS(direction_of({1, 1}, {1, 1}), Error);
}

TEST_CASE("critical directions") {
  CHECK(critical_direction_x({0, 0}, {1, 0}) == Direction(0, 1));
  CHECK(critical_direction_x({0, 0}, {0, 1}) == Direction(1, 0));
  CHECK(critical_direction_x({0, 0}, {1, 1}) == Direction(-1, 1));
  CHECK(critical_direction_y({0, 0}, {1, 0}) == Direction(1, 0));
  CHECK(critical_direction_y({0, 0}, {0, 1}) == Direction(0, 1));
  CHECK(critical_direction_y({0, 0}, {2, 1}) == Direction(2, 1));
}

TEST_CASE("critical directions equalize the frame coordinate") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Point a{static_cast<i64>(rng() % 100), static_cast<i64>(rng() % 100)};
    const Point b{static_cast<i64>(rng() % 100), static_cast<i64>(rng() % 100)};
    if (a == b) continue;
    const Direction dx = critical_direction_x(a, b), dy = critical_direction_y(a, b);
    CHECK(dx.in_upper_half());
    CHECK(dy.in_upper_half());
    CHECK(frame_coords(a, dx).u == frame_coords(b, dx).u);
    CHECK(frame_coords(a, dy).v == frame_coords(b, dy).v);
  }
}

TEST_CASE("direction comparison") {
  CHECK(compare_directions(Direction(1, 0), Direction(0, 1)) < 0);
  CHECK(compare_directions(Direction(-1, 0), Direction(0, -1)) < 0);
  CHECK(compare_directions(Direction(1, 1), Direction(2, 1)) > 0);
  CHECK(compare_directions(Direction(3, 3), Direction(1, 1)) == 0);
}

TEST_CASE("direction order is a total order matching the angle") {
  std::mt19937_64 rng(3);
  std::vector<Direction> dirs;
  for (int i = 0; i < 300; ++i) {
    const i64 x = static_cast<i64>(rng() % 41) - 20, y = static_cast<i64>(rng() % 41) - 20;
    if (x != 0 || y != 0) dirs.emplace_back(x, y);
  }
  auto angle = [](const Direction& d) {
    double a = std::atan2(static_cast<double>(d.dy()), static_cast<double>(d.dx()));
    return a < 0 ? a + 2 * M_PI : a;
  };
  for (const auto& a : dirs) {
    CHECK(compare_directions(a, a) == 0);
    for (const auto& b : dirs) {
      const auto ab = compare_directions(a, b);
      CHECK((ab < 0) == (compare_directions(b, a) > 0));
      if (a == b) {
        CHECK(ab == 0);
      } else {
        CHECK(ab != 0);
        CHECK((ab < 0) == (angle(a) < angle(b)));
      }
    }
  }
}

TEST_CASE("direction_between lies strictly inside the arc") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 500; ++i) {
    const i64 x1 = static_cast<i64>(rng() % 21) - 10, y1 = static_cast<i64>(rng() % 21) - 10;
    const i64 x2 = static_cast<i64>(rng() % 21) - 10, y2 = static_cast<i64>(rng() % 21) - 10;
    if ((x1 == 0 && y1 == 0) || (x2 == 0 && y2 == 0)) continue;
    const Direction a(x1, y1), b(x2, y2);
    const Direction mid = direction_between(a, b);
    if (a == b) {
      CHECK(mid == a.opposite());
      continue;
    }
    // mid is in the ccw arc (a, b) iff rotating the frame so that a is at 0
    // puts mid strictly between 0 and b
    auto rel = [&](const Direction& d) {
      double t = std::atan2(static_cast<double>(d.dy()), static_cast<double>(d.dx())) -
                 std::atan2(static_cast<double>(a.dy()), static_cast<double>(a.dx()));
      while (t < 0) t += 2 * M_PI;
      while (t >= 2 * M_PI) t -= 2 * M_PI;
      return t;
    };
    CHECK(rel(mid) > 0);
    CHECK(rel(mid) < rel(b));
  }
}

TEST_CASE("duality examples") {
  const Line l = dual_line({2, 3});
  const SlopeIntercept si = slope_intercept(l);
  CHECK(si.slope == Rational(2));
  CHECK(si.intercept == Rational(-3));
  const auto [u, v] = dual_point(l);
  CHECK(u == Rational(2));
  CHECK(v == Rational(3));

  // (0,0) lies below y = x + 1; the dual point (1,-1) lies below the dual line y = 0.
  const Line ell = make_line(1, -1, 1);  // x - y + 1 = 0
  CHECK(side_of_line(0, 0, ell) < 0);
  const auto [eu, ev] = dual_point(ell);
  CHECK(eu == Rational(1));
  CHECK(ev == Rational(-1));
  CHECK(side_of_line(eu, ev, dual_line({0, 0})) < 0);

  // (1,5) lies above y = 2x + 1 and (2,-1) lies above y = x - 5.
  const Line ell2 = make_line(2, -1, 1);
  CHECK(side_of_line(1, 5, ell2) > 0);
  const auto [fu, fv] = dual_point(ell2);
  CHECK(side_of_line(fu, fv, dual_line({1, 5})) > 0);
}

TEST_CASE("duality preserves above/below on random inputs") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 1000; ++i) {
    const Point p{static_cast<i64>(rng() % 201) - 100, static_cast<i64>(rng() % 201) - 100};
    const Point q{static_cast<i64>(rng() % 201) - 100, static_cast<i64>(rng() % 201) - 100};
    const Line lq = dual_line(q);  // a non-vertical line, as the dual of some point
    const auto [u, v] = dual_point(lq);
    CHECK(u == Rational(q.x));
    CHECK(v == Rational(q.y));
    const int primal = side_of_line(p.x, p.y, lq);
    const auto [pu, pv] = dual_point(lq);
    const int dual = side_of_line(pu, pv, dual_line(p));
    CHECK(primal == dual);
  }
}

TEST_CASE("lines are canonical") {
  CHECK(make_line(2, 4, 6) == Line{1, 2, 3});
  CHECK(make_line(-2, -4, 6) == Line{1, 2, -3});
  CHECK(make_line(-3, 0, 6) == Line{1, 0, -2});
  CHECK(make_line(-3, 0, 6).is_vertical());
  CHECK_THROWS_AS(slope_intercept(make_line(1, 0, 0)), Error);
  CHECK_THROWS_AS(make_line(0, 0, 1), Error);
}

TEST_CASE("coordinate bound") {
  CHECK(within_coord_limit({kCoordLimit, -kCoordLimit}));
  CHECK_FALSE(within_coord_limit({kCoordLimit + 1, 0}));
  try {
    require_coord_limit({0, -kCoordLimit - 1});
    FAIL("expected CoordinateBound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CoordinateBound);
  }
}
