#include <algorithm>
#include <random>
#include <vector>

#include "bichrome/errors.hpp"
#include "bichrome/mrr_axis.hpp"
#include "bichrome/oracles.hpp"
#include "doctest.h"

using namespace bichrome;

namespace {

oracle::AxisBox to_box(const OrientedRect& r) {
  auto as_int = [](const Bound& b) {
    REQUIRE(b.is_finite());
    REQUIRE(b.value().is_integer());
    return static_cast<i64>(b.value().num());
  };
  return {as_int(r.u_lo), as_int(r.u_hi), as_int(r.v_lo), as_int(r.v_hi)};
}

std::vector<oracle::AxisBox> boxes_of(const std::vector<OrientedRect>& rects) {
  std::vector<oracle::AxisBox> out;
  for (const auto& r : rects) {
    CHECK(r.dir == kAxisDirection);
    out.push_back(to_box(r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

oracle::AxisBox clip_as_box(const ClipBox& c) { return {c.min_x, c.max_x, c.min_y, c.max_y}; }

std::size_t solve_size(std::vector<Point> red, std::vector<Point> blue) {
  const AxisInstance inst{red, blue, clip_box_of(red, blue)};
  NaiveCounter counter(red);
  return solve_axis_mrr(inst, counter).size;
}

}  // namespace

TEST_CASE("clip box expands the bounding box by one") {
  const ClipBox c = clip_box_of(std::vector<Point>{{3, 4}}, std::vector<Point>{{-2, 10}});
  CHECK(c == ClipBox{-3, 4, 3, 11});
  CHECK(clip_box_of({}, {}) == ClipBox{});
}

TEST_CASE("no blue points gives the clip box") {
  const ClipBox clip{0, 10, 0, 10};
  const auto cands = enumerate_axis_candidates({}, clip);
  REQUIRE(cands.size() == 1);
  CHECK(to_box(cands[0]) == oracle::AxisBox{0, 10, 0, 10});
}

TEST_CASE("one blue point gives four half-plane boxes") {
  const ClipBox clip{-1, 1, -1, 1};
  const std::vector<Point> blue{{0, 0}};
  const auto got = boxes_of(enumerate_axis_candidates(blue, clip));
  CHECK(got.size() == 4);
  CHECK(got == oracle::maximal_empty_boxes(blue, clip_as_box(clip)));
}

TEST_CASE("candidate set equals the brute-force set") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 60; ++round) {
    const std::size_t m = rng() % 16;
    std::vector<Point> blue;
    // distinct x and y by construction: a random permutation of y values
    std::vector<i64> ys(m);
    for (std::size_t i = 0; i < m; ++i) ys[i] = static_cast<i64>(3 * i + rng() % 3);
    std::shuffle(ys.begin(), ys.end(), rng);
    for (std::size_t i = 0; i < m; ++i) blue.push_back({static_cast<i64>(5 * i + rng() % 5), ys[i]});
    const ClipBox clip = clip_box_of({}, blue);
    const auto got = boxes_of(enumerate_axis_candidates(blue, clip));
    CHECK(got == oracle::maximal_empty_boxes(blue, clip_as_box(clip)));
    CHECK(got.size() <= m * m + 4 * m + 1);
    // each candidate is blue-empty in its interior
    for (const auto& b : got) {
      for (Point p : blue) CHECK_FALSE((p.x > b.x_lo && p.x < b.x_hi && p.y > b.y_lo && p.y < b.y_hi));
    }
  }
}

TEST_CASE("solver examples") {
  CHECK(solve_size({{1, 1}, {2, 2}}, {}) == 2);
  // the two reds share y = 0, so this is built without make_axis_instance
  CHECK(solve_size({{0, 0}, {10, 0}}, {{5, 1}}) == 2);
  CHECK(solve_size({{0, 0}, {10, 10}}, {{5, 6}}) == 1);
}

TEST_CASE("best rectangle is reported with its count") {
  const AxisInstance inst = make_axis_instance({{0, 0}, {10, 10}, {3, 7}}, {{5, 6}});
  NaiveCounter counter(inst.red);
  const AxisSolution s = solve_axis_mrr(inst, counter);
  CHECK(count_closed_naive(inst.red, s.best) == s.size);
  CHECK(count_open_interior(inst.blue, s.best) == 0);
  CHECK(s.candidates == 4);
}

TEST_CASE("validation rejects shared coordinates") {
  CHECK_THROWS_AS(make_axis_instance({{0, 0}}, {{0, 5}}), Error);
  CHECK_THROWS_AS(make_axis_instance({{0, 0}}, {{5, 0}}), Error);
  CHECK_THROWS_AS(make_axis_instance({{0, 0}, {0, 0}}, {}), Error);
  CHECK_THROWS_AS(make_axis_instance({{kCoordLimit + 1, 0}}, {}), Error);
  CHECK_THROWS_AS(enumerate_axis_candidates(std::vector<Point>{{1, 1}, {1, 2}}, ClipBox{0, 3, 0, 3}), Error);
  CHECK_NOTHROW(make_axis_instance({{0, 1}}, {{2, 3}}));
}

TEST_CASE("counter backends give the same answer") {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 30; ++round) {
    std::vector<Point> red, blue;
    std::vector<i64> xs(50), ys(50);
    for (int i = 0; i < 50; ++i) xs[i] = ys[i] = i;
    std::shuffle(xs.begin(), xs.end(), rng);
    std::shuffle(ys.begin(), ys.end(), rng);
    for (int i = 0; i < 30; ++i) red.push_back({xs[i], ys[i]});
    for (int i = 30; i < 50; ++i) blue.push_back({xs[i], ys[i]});
    const AxisInstance inst = make_axis_instance(red, blue);
    NaiveCounter naive(red);
    KdTreeCounter kd(red);
    const AxisSolution a = solve_axis_mrr(inst, naive), b = solve_axis_mrr(inst, kd);
    CHECK(a.size == b.size);
    CHECK(a.best == b.best);
    CHECK(a.size == oracle::max_red_axis_rectangle(red, blue));
  }
}
