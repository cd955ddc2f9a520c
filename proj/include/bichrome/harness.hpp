#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bichrome/geom_core.hpp"
#include "bichrome/maxcol.hpp"
#include "bichrome/mrr_axis.hpp"
#include "bichrome/mrr_rotating.hpp"
#include "bichrome/range_count.hpp"
#include "json.hpp"

namespace bichrome::harness {

using nlohmann::json;

enum class Problem { Mrr, MrrAxis, MaxCol };

std::string_view to_string(Problem problem);
// "mrr", "mrr-axis" or "maxcol"; anything else throws Error(InvalidInput).
Problem parse_problem(std::string_view text);

// MRR files carry red/blue, MaxCol files carry pairs. The problem tag is not
// part of the file; it picks the validation applied on load.
struct InstanceFile {
  Problem problem = Problem::Mrr;
  std::vector<Point> red;
  std::vector<Point> blue;
  std::vector<std::pair<Point, Point>> pairs;

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

json instance_to_json(const InstanceFile& instance);
// Parses and validates with the rules of `problem`.
InstanceFile instance_from_json(const json& doc, Problem problem);

std::string save_instance(const InstanceFile& instance);
InstanceFile load_instance(std::string_view text, Problem problem);

// Uniform points in [0, coord_max]^2 from mt19937_64(seed). Each new point is
// redrawn until the partial instance passes the problem's validation. For
// MaxCol `n` is the pair count and `m` is ignored.
InstanceFile gen_instance(Problem problem, std::uint64_t seed, std::size_t n, std::size_t m, i64 coord_max);

json rect_to_json(const OrientedRect& rect);
OrientedRect rect_from_json(const json& doc);

json solution_to_json(const InstanceFile& instance, const MrrSolution& solution, CounterKind counter,
                      double wall_ms);
json solution_to_json(const InstanceFile& instance, const AxisSolution& solution, CounterKind counter,
                      double wall_ms);
json solution_to_json(const InstanceFile& instance, const ColoringCertificate& certificate, double wall_ms);

// Solves `instance` with the solver for its problem and returns the solution document.
json solve(const InstanceFile& instance, CounterKind counter);

// Recounts the certificate of a solution document against the instance.
// Returns an empty string when it checks out, otherwise the reason.
std::string revalidate_solution(const InstanceFile& instance, const json& solution);

// Oracle value for the instance's problem.
std::size_t run_oracle(const InstanceFile& instance);

// Objective stored in a solution document ("size" or "eta").
std::size_t objective_of(const json& solution);

// SVG 1.1 picture: one circle per point, one polygon for the solution's
// rectangle or halfplane (clipped to the drawing area) when given.
std::string render_svg(const InstanceFile& instance, const json* solution);

struct VerifyReport {
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  json entries = json::array();
};

// Solver against oracle on `count` generated instances; instance i uses seed + i.
VerifyReport verify(Problem problem, std::uint64_t seed, std::size_t count, std::size_t n, std::size_t m,
                    i64 coord_max, CounterKind counter);

}  // namespace bichrome::harness
