#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "bichrome/errors.hpp"
#include "bichrome/harness.hpp"
#include "bichrome/maxcol.hpp"
#include "bichrome/oracles.hpp"
#include "doctest.h"

using namespace bichrome;

namespace {

Line line_y(i64 slope, i64 intercept) { return make_line(slope, -1, intercept); }

PairInstance random_pairs(std::uint64_t seed, std::size_t n) {
  return PairInstance{harness::gen_instance(harness::Problem::MaxCol, seed, n, 0, 1000).pairs};
}

std::vector<Rational> sample_xs(std::span<const Line> lines, std::size_t extra, std::mt19937_64& rng) {
  std::vector<Rational> xs;
  std::vector<Rational> crossings;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const SlopeIntercept a = slope_intercept(lines[i]), b = slope_intercept(lines[j]);
      if (a.slope == b.slope) continue;
      crossings.push_back((b.intercept - a.intercept) / (a.slope - b.slope));
    }
  }
  std::sort(crossings.begin(), crossings.end());
  crossings.erase(std::unique(crossings.begin(), crossings.end()), crossings.end());
  if (crossings.empty()) {
    xs.push_back(Rational(0));
  } else {
    xs.push_back(crossings.front() - Rational(1));
    xs.push_back(crossings.back() + Rational(1));
    for (std::size_t i = 0; i + 1 < crossings.size(); ++i) xs.push_back(midpoint(crossings[i], crossings[i + 1]));
    for (const Rational& c : crossings) xs.push_back(c);
  }
  for (std::size_t i = 0; i < extra; ++i) {
    xs.push_back(Rational(static_cast<i64>(rng() % 20001) - 10000, static_cast<i64>(rng() % 97) + 1));
  }
  return xs;
}

// Brute force over the x-intervals of the whole arrangement: is there a point
// with exactly k lines strictly on `side` and no pair entirely there?
bool brute_decide(const DualArrangement& dual, std::size_t k, DualSide side) {
  std::mt19937_64 rng(0);
  const auto& lines = dual.lines;
  for (const Rational& x : sample_xs(lines, 0, rng)) {
    std::vector<std::pair<Rational, std::size_t>> values;
    for (std::size_t i = 0; i < lines.size(); ++i) values.emplace_back(slope_intercept(lines[i]).at(x), i);
    std::sort(values.begin(), values.end());
    bool distinct = true;
    for (std::size_t i = 0; i + 1 < values.size(); ++i) distinct &= values[i].first != values[i + 1].first;
    if (!distinct) continue;  // an arrangement vertex, not an edge point
    if (side == DualSide::Above) std::reverse(values.begin(), values.end());
    std::vector<int> per_pair(dual.pair_count(), 0);
    bool pair_full = false;
    for (std::size_t j = 0; j < k; ++j) pair_full |= ++per_pair[values[j].second / 2] == 2;
    if (!pair_full) return true;
  }
  return false;
}

void check_witness(const DualArrangement& dual, std::size_t k, DualSide side, const DualWitness& w) {
  // the witness sits on the level, so exactly one line passes through it
  std::size_t strict = 0, through = 0;
  std::vector<int> per_pair(dual.pair_count(), 0);
  for (std::size_t i = 0; i < dual.lines.size(); ++i) {
    const auto c = slope_intercept(dual.lines[i]).at(w.u) <=> w.v;
    const bool on_side = side == DualSide::Below ? c < 0 : c > 0;
    through += c == 0;
    if (on_side) {
      ++strict;
      CHECK(++per_pair[i / 2] < 2);
    }
  }
  CHECK(strict == k);
  CHECK(through == 1);
}

}  // namespace

TEST_CASE("dualize") {
  const DualArrangement d = dualize(PairInstance{{{{2, 3}, {0, 1}}}});
  REQUIRE(d.lines.size() == 2);
  CHECK(d.pair_count() == 1);
  CHECK(slope_intercept(d.lines[0]).slope == Rational(2));
  CHECK(slope_intercept(d.lines[0]).intercept == Rational(-3));
  CHECK(slope_intercept(d.lines[1]).slope == Rational(0));
  CHECK(slope_intercept(d.lines[1]).intercept == Rational(-1));
  CHECK(dualize(PairInstance{}).lines.empty());
}

TEST_CASE("dual points round-trip") {
  const PairInstance inst = random_pairs(4, 6);
  const DualArrangement d = dualize(inst);
  const auto pts = inst.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto [u, v] = dual_point(d.lines[i]);
    CHECK(u == Rational(pts[i].x));
    CHECK(v == Rational(pts[i].y));
  }
}

TEST_CASE("three concurrent lines are reported") {
  const std::vector<Line> lines{line_y(0, 0), line_y(1, -1), line_y(-1, 1)};
  try {
    (void)k_level(lines, 0);
    FAIL("expected ConcurrentLines");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConcurrentLines);
  }
}

TEST_CASE("k-level heights match the sorted values") {
  std::mt19937_64 rng(1);
  const std::vector<Line> lines{line_y(0, 0), line_y(1, -1), line_y(-1, 2)};
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const LevelPolyline level = k_level(lines, k);
    for (const Rational& x : sample_xs(lines, 100, rng)) {
      CHECK(level_height(level, lines, x) == oracle::level_height(lines, k, x));
    }
  }
}

TEST_CASE("top level is the upper envelope and a single line has no vertices") {
  std::mt19937_64 rng(2);
  const DualArrangement d = dualize(random_pairs(9, 4));
  const LevelPolyline top = k_level(d.lines, d.lines.size() - 1);
  for (const Rational& x : sample_xs(d.lines, 100, rng)) {
    Rational best = slope_intercept(d.lines[0]).at(x);
    for (const Line& l : d.lines) best = std::max(best, slope_intercept(l).at(x));
    CHECK(level_height(top, d.lines, x) == best);
  }
  const std::vector<Line> one{line_y(3, 7)};
  const LevelPolyline single = k_level(one, 0);
  CHECK(single.vertices.empty());
  CHECK(single.leftmost_line == 0);
  CHECK_THROWS_AS(k_level(one, 1), Error);
}

TEST_CASE("parallel lines") {
  std::mt19937_64 rng(3);
  const std::vector<Line> lines{line_y(1, 0), line_y(1, 5), line_y(0, 2), line_y(0, -4)};
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const LevelPolyline level = k_level(lines, k);
    for (const Rational& x : sample_xs(lines, 50, rng)) {
      CHECK(level_height(level, lines, x) == oracle::level_height(lines, k, x));
    }
  }
}

TEST_CASE("decision examples") {
  const DualArrangement one = dualize(PairInstance{{{{0, 0}, {1, 1}}}});
  const auto w = decide(one, 1, DualSide::Below);
  REQUIRE(w.has_value());
  check_witness(one, 1, DualSide::Below, *w);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DualArrangement d = dualize(random_pairs(seed, 5));
    CHECK(decide(d, 0, DualSide::Below).has_value());
    CHECK(decide(d, 0, DualSide::Above).has_value());
  }
}

TEST_CASE("decision agrees with brute force, witnesses check out, and is monotone") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const DualArrangement d = dualize(random_pairs(50 + seed, 1 + seed % 7));
    for (DualSide side : {DualSide::Below, DualSide::Above}) {
      bool seen_false = false;
      for (std::size_t k = 0; k < d.lines.size(); ++k) {
        const auto w = decide(d, k, side);
        CHECK(w.has_value() == brute_decide(d, k, side));
        if (w) {
          CHECK_FALSE(seen_false);
          check_witness(d, k, side, *w);
        } else {
          seen_false = true;
        }
      }
    }
  }
}

TEST_CASE("per-pair counts along the level match a recount") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const DualArrangement d = dualize(random_pairs(80 + seed, 5));
    for (DualSide side : {DualSide::Below, DualSide::Above}) {
      for (std::size_t k = 0; k < d.lines.size(); k += 3) {
        for (const LevelEdgeState& s : trace_level(d, k, side)) {
          std::vector<std::uint8_t> expect(d.pair_count(), 0);
          std::size_t full = 0;
          for (std::size_t i = 0; i < d.lines.size(); ++i) {
            const auto c = slope_intercept(d.lines[i]).at(s.witness.u) <=> s.witness.v;
            if (side == DualSide::Below ? c < 0 : c > 0) full += ++expect[i / 2] == 2;
          }
          CHECK(s.lines_below_per_pair == expect);
          CHECK(s.pairs_fully_below == full);
        }
      }
    }
  }
}

TEST_CASE("solver examples") {
  const PairInstance single{{{{0, 0}, {1, 1}}}};
  const ColoringCertificate c1 = solve_maxcol(single);
  CHECK(c1.eta == 1);
  CHECK(certificate_is_valid(single, c1));

  const PairInstance crossing{{{{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}}};
  const ColoringCertificate c2 = solve_maxcol(crossing);
  CHECK(c2.eta == 2);
  CHECK(certificate_is_valid(crossing, c2));

  const PairInstance square{{{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}}};
  const ColoringCertificate c3 = solve_maxcol(square);
  CHECK(c3.eta == 2);
  CHECK(certificate_is_valid(square, c3));

  CHECK_THROWS_AS(solve_maxcol(PairInstance{}), Error);
}

TEST_CASE("tampered certificates are rejected") {
  const PairInstance crossing{{{{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}}};
  ColoringCertificate c = solve_maxcol(crossing);
  REQUIRE(certificate_is_valid(crossing, c));
  ColoringCertificate wrong_eta = c;
  wrong_eta.eta += 1;
  CHECK_FALSE(certificate_is_valid(crossing, wrong_eta));
  ColoringCertificate same_colors = c;
  same_colors.colors[0] = same_colors.colors[1];
  CHECK_FALSE(certificate_is_valid(crossing, same_colors));
}

TEST_CASE("halfplane coefficients describe the boundary") {
  Halfplane h{Rational(2, 3), Rational(-5, 4), HalfplaneSide::Above};  // y = 2/3 x + 5/4
  const auto co = h.coefficients();
  CHECK(co.b > 0);
  // 12 y = 8 x + 15  ->  -8 x + 12 y - 15 = 0
  CHECK(co.a == -8);
  CHECK(co.b == 12);
  CHECK(co.c == -15);
  CHECK(h.contains({0, 2}));
  CHECK_FALSE(h.contains({0, 1}));
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(validate_pair_instance(PairInstance{{{{0, 0}, {1, 1}}, {{2, 2}, {5, 0}}}}), Error);
  CHECK_THROWS_AS(validate_pair_instance(PairInstance{{{{0, 0}, {0, 0}}}}), Error);
  CHECK_NOTHROW(validate_pair_instance(PairInstance{{{{0, 0}, {1, 0}}, {{0, 1}, {1, 3}}}}));
}

TEST_CASE("solver agrees with the oracle") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const PairInstance inst = random_pairs(500 + seed, 1 + seed % 10);
    const ColoringCertificate c = solve_maxcol(inst);
    CHECK(c.eta == oracle::max_coloring(inst.pairs));
    CHECK(certificate_is_valid(inst, c));
  }
}
