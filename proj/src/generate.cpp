#include <functional>
#include <random>
#include <string>

#include "bichrome/errors.hpp"
#include "bichrome/harness.hpp"

namespace bichrome::harness {

namespace {

constexpr std::size_t kAttemptsPerGroup = 100000;

// Draws `group` points at a time (2 for MaxCol pairs), redrawing the group
// until `valid()` accepts the instance with it appended.
void place(std::mt19937_64& rng, i64 coord_max, std::vector<Point>& target, std::size_t groups, std::size_t group,
           const std::function<bool()>& valid) {
  const auto range = static_cast<std::uint64_t>(coord_max) + 1;
  for (std::size_t placed = 0; placed < groups; ++placed) {
    std::size_t attempt = 0;
    while (true) {
      if (++attempt > kAttemptsPerGroup) {
        throw Error(ErrorCode::InvalidInput,
                    "could not place a point in general position; raise --coord-max or lower --n/--m");
      }
      for (std::size_t j = 0; j < group; ++j) {
        const auto x = static_cast<i64>(rng() % range);
        const auto y = static_cast<i64>(rng() % range);
        target.push_back(Point{x, y});
      }
      if (valid()) break;
      target.resize(target.size() - group);
    }
  }
}

template <typename Check>
std::function<bool()> accepts(Check check) {
  return [check] {
    try {
      check();
      return true;
    } catch (const Error&) {
      return false;
    }
  };
}

}  // namespace

InstanceFile gen_instance(Problem problem, std::uint64_t seed, std::size_t n, std::size_t m, i64 coord_max) {
  if (coord_max < 0 || coord_max > kCoordLimit) {
    throw Error(ErrorCode::CoordinateBound, "--coord-max must lie in [0, " + std::to_string(kCoordLimit) + "]");
  }
  std::mt19937_64 rng(seed);
  InstanceFile out;
  out.problem = problem;

  if (problem == Problem::MaxCol) {
    std::vector<Point> flat;
    auto valid = accepts([&flat] {
      PairInstance partial;
      for (std::size_t i = 0; i + 1 < flat.size(); i += 2) partial.pairs.emplace_back(flat[i], flat[i + 1]);
      validate_pair_instance(partial);
    });
    place(rng, coord_max, flat, n, 2, valid);
    for (std::size_t i = 0; i < n; ++i) out.pairs.emplace_back(flat[2 * i], flat[2 * i + 1]);
    return out;
  }

  std::function<bool()> valid;
  if (problem == Problem::Mrr) {
    valid = accepts([&out] { validate_mrr_instance(out.red, out.blue); });
  } else {
    valid = accepts([&out] { validate_axis_points(out.red, out.blue); });
  }
  place(rng, coord_max, out.red, n, 1, valid);
  place(rng, coord_max, out.blue, m, 1, valid);
  return out;
}

}  // namespace bichrome::harness
