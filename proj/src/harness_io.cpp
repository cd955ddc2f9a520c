#include <chrono>
#include <string>

#include "bichrome/errors.hpp"
#include "bichrome/harness.hpp"
#include "bichrome/oracles.hpp"

namespace bichrome::harness {

namespace {

json point_to_json(Point p) { return json::array({p.x, p.y}); }

Point point_from_json(const json& doc) {
  if (!doc.is_array() || doc.size() != 2 || !doc[0].is_number_integer() || !doc[1].is_number_integer()) {
    throw Error(ErrorCode::InvalidInput, "a point must be an array of two integers, got " + doc.dump());
  }
  return Point{doc[0].get<i64>(), doc[1].get<i64>()};
}

std::vector<Point> points_from_json(const json& doc, const char* key) {
  if (!doc.contains(key)) return {};
  const json& list = doc.at(key);
  if (!list.is_array()) throw Error(ErrorCode::InvalidInput, std::string("'") + key + "' must be an array");
  std::vector<Point> out;
  out.reserve(list.size());
  for (const json& p : list) out.push_back(point_from_json(p));
  return out;
}

json point_list(std::span<const Point> pts) {
  json out = json::array();
  for (Point p : pts) out.push_back(point_to_json(p));
  return out;
}

std::string_view color_name(Color c) { return c == Color::Red ? "red" : "blue"; }

json optional_index(const std::optional<std::uint32_t>& id) { return id ? json(*id) : json(nullptr); }

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string recount_rect(const InstanceFile& instance, const json& solution) {
  const OrientedRect rect = rect_from_json(solution.at("certificate").at("rectangle"));
  rect.validate();
  if (count_open_interior(instance.blue, rect) != 0) return "blue point inside the rectangle";
  const std::size_t red = count_closed_naive(instance.red, rect);
  if (red != objective_of(solution)) {
    return "rectangle holds " + std::to_string(red) + " red points, solution claims " +
           std::to_string(objective_of(solution));
  }
  return {};
}

std::string recount_halfplane(const InstanceFile& instance, const json& solution) {
  const json& cert = solution.at("certificate");
  const json& hp = cert.at("halfplane");
  const Rational slope = Rational::parse(hp.at("slope").get<std::string>());
  const Rational offset = Rational::parse(hp.at("offset").get<std::string>());
  const std::string side = hp.at("side").get<std::string>();
  if (side != "above" && side != "below") return "halfplane side must be 'above' or 'below'";
  const json& coloring = cert.at("coloring");
  if (!coloring.is_array() || coloring.size() != 2 * instance.pairs.size()) return "coloring has the wrong length";

  std::size_t red_inside = 0;
  for (std::size_t i = 0; i < instance.pairs.size(); ++i) {
    const Point pts[2] = {instance.pairs[i].first, instance.pairs[i].second};
    std::string colors[2];
    for (int j = 0; j < 2; ++j) {
      const json& entry = coloring[2 * i + j];
      if (point_from_json(entry.at("point")) != pts[j]) return "coloring does not follow the pair order";
      colors[j] = entry.at("color").get<std::string>();
      if (colors[j] != "red" && colors[j] != "blue") return "unknown color " + colors[j];
    }
    if (colors[0] == colors[1]) return "pair " + std::to_string(i) + " is not split into red and blue";
    for (int j = 0; j < 2; ++j) {
      const auto c = Rational(pts[j].y) <=> slope * Rational(pts[j].x) - offset;
      const bool inside = side == "above" ? c > 0 : c < 0;
      if (!inside) continue;
      if (colors[j] == "blue") return "blue point inside the halfplane";
      ++red_inside;
    }
  }
  if (red_inside != objective_of(solution)) {
    return "halfplane holds " + std::to_string(red_inside) + " red points, solution claims " +
           std::to_string(objective_of(solution));
  }
  return {};
}

}  // namespace

std::string_view to_string(Problem problem) {
  switch (problem) {
    case Problem::Mrr: return "mrr";
    case Problem::MrrAxis: return "mrr-axis";
    case Problem::MaxCol: return "maxcol";
  }
  return "mrr";
}

Problem parse_problem(std::string_view text) {
  if (text == "mrr") return Problem::Mrr;
  if (text == "mrr-axis") return Problem::MrrAxis;
  if (text == "maxcol") return Problem::MaxCol;
  throw Error(ErrorCode::InvalidInput, "unknown problem '" + std::string(text) + "'");
}

json instance_to_json(const InstanceFile& instance) {
  if (instance.problem == Problem::MaxCol) {
    json pairs = json::array();
    for (const auto& [a, b] : instance.pairs) pairs.push_back(json::array({point_to_json(a), point_to_json(b)}));
    return json{{"pairs", pairs}};
  }
  return json{{"red", point_list(instance.red)}, {"blue", point_list(instance.blue)}};
}

InstanceFile instance_from_json(const json& doc, Problem problem) {
  if (!doc.is_object()) throw Error(ErrorCode::InvalidInput, "instance must be a JSON object");
  InstanceFile out;
  out.problem = problem;
  if (problem == Problem::MaxCol) {
    if (!doc.contains("pairs") || !doc.at("pairs").is_array()) {
      throw Error(ErrorCode::InvalidInput, "maxcol instance needs a 'pairs' array");
    }
    for (const json& pr : doc.at("pairs")) {
      if (!pr.is_array() || pr.size() != 2) throw Error(ErrorCode::InvalidInput, "a pair must hold two points");
      out.pairs.emplace_back(point_from_json(pr[0]), point_from_json(pr[1]));
    }
    validate_pair_instance(PairInstance{out.pairs});
    return out;
  }
  out.red = points_from_json(doc, "red");
  out.blue = points_from_json(doc, "blue");
  if (problem == Problem::Mrr) {
    validate_mrr_instance(out.red, out.blue);
  } else {
    validate_axis_points(out.red, out.blue);
  }
  return out;
}

// Same document as instance_to_json, laid out with one point (or pair) per line.
std::string save_instance(const InstanceFile& instance) {
  const json doc = instance_to_json(instance);
  std::string out = "{\n";
  bool first_key = true;
  for (const auto& [key, list] : doc.items()) {
    out += first_key ? "" : ",\n";
    first_key = false;
    out += "  \"" + key + "\": [";
    for (std::size_t i = 0; i < list.size(); ++i) out += (i ? ",\n    " : "\n    ") + list[i].dump();
    out += list.empty() ? "]" : "\n  ]";
  }
  return out + "\n}\n";
}

InstanceFile load_instance(std::string_view text, Problem problem) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
  return instance_from_json(doc, problem);
}

json rect_to_json(const OrientedRect& rect) {
  return json{{"direction", json::array({rect.dir.dx(), rect.dir.dy()})},
              {"u_lo", rect.u_lo.to_string()},
              {"u_hi", rect.u_hi.to_string()},
              {"v_lo", rect.v_lo.to_string()},
              {"v_hi", rect.v_hi.to_string()}};
}

OrientedRect rect_from_json(const json& doc) {
  const json& d = doc.at("direction");
  if (!d.is_array() || d.size() != 2) throw Error(ErrorCode::InvalidInput, "direction must be [dx, dy]");
  OrientedRect rect;
  rect.dir = Direction(d[0].get<i64>(), d[1].get<i64>());
  rect.u_lo = Bound::parse(doc.at("u_lo").get<std::string>());
  rect.u_hi = Bound::parse(doc.at("u_hi").get<std::string>());
  rect.v_lo = Bound::parse(doc.at("v_lo").get<std::string>());
  rect.v_hi = Bound::parse(doc.at("v_hi").get<std::string>());
  return rect;
}

json solution_to_json(const InstanceFile&, const MrrSolution& solution, CounterKind counter, double wall_ms) {
  json cert{{"rectangle", rect_to_json(solution.best.rect)}, {"whole_plane", solution.whole_plane}};
  if (!solution.whole_plane) {
    cert["anchors"] = json{{"p", solution.best.p},
                           {"q", json{{"color", color_name(solution.best.q.color)}, {"index", solution.best.q.index}}}};
    cert["sides"] = json{{"left", optional_index(solution.best.left)},
                         {"right", optional_index(solution.best.right)},
                         {"top", optional_index(solution.best.top)}};
  }
  return json{{"problem", "mrr"},
              {"size", solution.size},
              {"certificate", cert},
              {"counter", to_string(counter)},
              {"stats",
               {{"events_processed", solution.stats.events_processed},
                {"anchor_events", solution.stats.anchor_events},
                {"candidates_enumerated", solution.stats.candidates_enumerated},
                {"wall_time_ms", wall_ms}}}};
}

json solution_to_json(const InstanceFile&, const AxisSolution& solution, CounterKind counter, double wall_ms) {
  return json{{"problem", "mrr-axis"},
              {"size", solution.size},
              {"certificate", {{"rectangle", rect_to_json(solution.best)}}},
              {"counter", to_string(counter)},
              {"stats", {{"candidates_enumerated", solution.candidates}, {"wall_time_ms", wall_ms}}}};
}

json solution_to_json(const InstanceFile& instance, const ColoringCertificate& certificate, double wall_ms) {
  const Halfplane::Coefficients co = certificate.halfplane.coefficients();
  json coloring = json::array();
  const std::vector<Point> pts = PairInstance{instance.pairs}.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    coloring.push_back({{"point", point_to_json(pts[i])}, {"color", color_name(certificate.colors[i])}});
  }
  json halfplane{{"a", int128_to_string(co.a)},
                 {"b", int128_to_string(co.b)},
                 {"c", int128_to_string(co.c)},
                 {"side", certificate.halfplane.side == HalfplaneSide::Above ? "above" : "below"},
                 {"slope", certificate.halfplane.slope.to_string()},
                 {"offset", certificate.halfplane.offset.to_string()}};
  return json{{"problem", "maxcol"},
              {"eta", certificate.eta},
              {"certificate",
               {{"halfplane", halfplane},
                {"coloring", coloring},
                {"red_in_halfplane", certificate.red_in_halfplane},
                {"dual_side", certificate.dual_side == DualSide::Below ? "below" : "above"}}},
              {"stats", {{"wall_time_ms", wall_ms}}}};
}

json solve(const InstanceFile& instance, CounterKind counter) {
  const auto start = std::chrono::steady_clock::now();
  switch (instance.problem) {
    case Problem::Mrr: {
      auto rc = make_counter(counter, instance.red);
      MrrSolution s = solve_mrr(MrrInstance{instance.red, instance.blue}, *rc);
      return solution_to_json(instance, s, counter, elapsed_ms(start));
    }
    case Problem::MrrAxis: {
      auto rc = make_counter(counter, instance.red);
      AxisSolution s = solve_axis_mrr(make_axis_instance(instance.red, instance.blue), *rc);
      return solution_to_json(instance, s, counter, elapsed_ms(start));
    }
    case Problem::MaxCol: {
      ColoringCertificate c = solve_maxcol(PairInstance{instance.pairs});
      return solution_to_json(instance, c, elapsed_ms(start));
    }
  }
  throw Error(ErrorCode::InvalidInput, "unknown problem");
}

std::size_t objective_of(const json& solution) {
  if (solution.contains("eta")) return solution.at("eta").get<std::size_t>();
  return solution.at("size").get<std::size_t>();
}

std::string revalidate_solution(const InstanceFile& instance, const json& solution) {
  try {
    if (instance.problem == Problem::MaxCol) return recount_halfplane(instance, solution);
    return recount_rect(instance, solution);
  } catch (const json::exception& e) {
    return std::string("malformed solution: ") + e.what();
  } catch (const Error& e) {
    return std::string("malformed solution: ") + e.what();
  }
}

std::size_t run_oracle(const InstanceFile& instance) {
  switch (instance.problem) {
    case Problem::Mrr: return oracle::max_red_rectangle(instance.red, instance.blue);
    case Problem::MrrAxis: return oracle::max_red_axis_rectangle(instance.red, instance.blue);
    case Problem::MaxCol: return oracle::max_coloring(instance.pairs);
  }
  return 0;
}

VerifyReport verify(Problem problem, std::uint64_t seed, std::size_t count, std::size_t n, std::size_t m,
                    i64 coord_max, CounterKind counter) {
  VerifyReport report;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t s = seed + i;
    const InstanceFile instance = gen_instance(problem, s, n, m, coord_max);
    const json solution = solve(instance, counter);
    const std::size_t solver = objective_of(solution);
    const std::size_t expected = run_oracle(instance);
    const std::string certificate = revalidate_solution(instance, solution);
    const bool match = solver == expected && certificate.empty();
    ++report.instances;
    if (!match) ++report.mismatches;
    report.entries.push_back({{"index", i},
                              {"seed", s},
                              {"solver", solver},
                              {"oracle", expected},
                              {"certificate", certificate.empty() ? "ok" : certificate},
                              {"match", match}});
  }
  return report;
}

}  // namespace bichrome::harness
