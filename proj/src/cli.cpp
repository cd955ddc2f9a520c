#include "bichrome/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "bichrome/errors.hpp"
#include "bichrome/harness.hpp"

namespace bichrome {

namespace {

using harness::json;
using harness::Problem;

struct Options {
  std::string input;
  std::string output;
  std::string solution;
  std::string counter = "naive";
  std::string format = "json";
  std::string problem = "mrr";
  std::string which;
  std::uint64_t seed = 0;
  std::size_t n = 5;
  std::size_t m = 5;
  std::size_t count = 100;
  i64 coord_max = 1000;
};

std::string read_file(const std::string& path) {
  if (path.empty()) throw Error(ErrorCode::InvalidInput, "--input is required");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const Options& opt, std::ostream& out) {
  if (opt.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidInput, "cannot write '" + opt.output + "'");
  file << text;
}

void report_error(std::ostream& err, std::string_view code, const std::string& message) {
  err << json{{"error", code}, {"message", message}}.dump() << "\n";
}

json parse_json_text(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed ") + what + ": " + e.what());
  }
}

int cmd_solve(Problem problem, const Options& opt, std::ostream& out) {
  const harness::InstanceFile instance = harness::load_instance(read_file(opt.input), problem);
  const json solution = harness::solve(instance, parse_counter_kind(opt.counter));
  emit(solution.dump(2) + "\n", opt, out);
  return kExitOk;
}

int cmd_oracle(const Options& opt, std::ostream& out) {
  const Problem problem = harness::parse_problem(opt.which);
  const harness::InstanceFile instance = harness::load_instance(read_file(opt.input), problem);
  const std::size_t value = harness::run_oracle(instance);
  json doc{{"problem", harness::to_string(problem)}, {"solver", "oracle"}};
  doc[problem == Problem::MaxCol ? "eta" : "size"] = value;
  emit(doc.dump(2) + "\n", opt, out);
  return kExitOk;
}

int cmd_gen(const Options& opt, std::ostream& out) {
  const Problem problem = harness::parse_problem(opt.problem);
  emit(harness::save_instance(harness::gen_instance(problem, opt.seed, opt.n, opt.m, opt.coord_max)), opt, out);
  return kExitOk;
}

int cmd_render(const Options& opt, bool problem_given, std::ostream& out) {
  const json doc = parse_json_text(read_file(opt.input), "instance");
  std::optional<json> solution;
  if (!opt.solution.empty()) solution = parse_json_text(read_file(opt.solution), "solution");

  Problem problem = Problem::Mrr;
  if (problem_given) {
    problem = harness::parse_problem(opt.problem);
  } else if (solution && solution->contains("problem")) {
    problem = harness::parse_problem(solution->at("problem").get<std::string>());
  } else if (doc.contains("pairs")) {
    problem = Problem::MaxCol;
  }
  const harness::InstanceFile instance = harness::instance_from_json(doc, problem);
  emit(harness::render_svg(instance, solution ? &*solution : nullptr), opt, out);
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const Problem problem = harness::parse_problem(opt.which);
  const harness::VerifyReport report = harness::verify(problem, opt.seed, opt.count, opt.n, opt.m, opt.coord_max,
                                                       parse_counter_kind(opt.counter));
  json doc{{"problem", harness::to_string(problem)},
           {"seed", opt.seed},
           {"count", report.instances},
           {"mismatches", report.mismatches},
           {"instances", report.entries}};
  emit(doc.dump(2) + "\n", opt, out);
  return report.mismatches == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solvers for maximum red rectangle and maximum coloring problems", "bichrome"};
  app.require_subcommand(1, 1);
  Options opt;

  const std::vector<std::string> problems{"mrr", "mrr-axis", "maxcol"};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json"}));
  };
  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "Instance file (JSON)")->required();
    sub->add_option("--output", opt.output, "Write the result here instead of stdout");
    add_format(sub);
  };
  auto add_counter = [&](CLI::App* sub) {
    sub->add_option("--counter", opt.counter, "Range counting backend")->check(CLI::IsMember({"naive", "accel"}));
  };
  auto add_gen = [&](CLI::App* sub) {
    sub->add_option("--seed", opt.seed, "Random seed");
    sub->add_option("--n", opt.n, "Red points (pairs for maxcol)");
    sub->add_option("--m", opt.m, "Blue points");
    sub->add_option("--coord-max", opt.coord_max, "Coordinates are drawn from [0, coord-max]");
  };

  CLI::App* mrr = app.add_subcommand("mrr", "Maximum red rectangle, any orientation");
  add_io(mrr);
  add_counter(mrr);
  CLI::App* axis = app.add_subcommand("mrr-axis", "Maximum red rectangle, axis-parallel");
  add_io(axis);
  add_counter(axis);
  CLI::App* maxcol = app.add_subcommand("maxcol", "Maximum coloring of point pairs");
  add_io(maxcol);

  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force reference value");
  oracle->add_option("which", opt.which, "Problem")->required()->check(CLI::IsMember(problems));
  add_io(oracle);

  CLI::App* gen = app.add_subcommand("gen", "Generate a random instance in general position");
  gen->add_option("--problem", opt.problem, "Problem")->check(CLI::IsMember(problems));
  gen->add_option("--output", opt.output, "Write the instance here instead of stdout");
  add_format(gen);
  add_gen(gen);

  CLI::App* render = app.add_subcommand("render", "Draw an instance and optionally its solution as SVG");
  render->add_option("--input", opt.input, "Instance file (JSON)")->required();
  render->add_option("--solution", opt.solution, "Solution file (JSON)");
  CLI::Option* render_problem =
      render->add_option("--problem", opt.problem, "Problem (inferred when omitted)")->check(CLI::IsMember(problems));
  render->add_option("--output", opt.output, "Write the SVG here instead of stdout");

  CLI::App* verify = app.add_subcommand("verify", "Solver against oracle on random instances");
  verify->add_option("problem", opt.which, "Problem")->required()->check(CLI::IsMember(problems));
  verify->add_option("--count", opt.count, "Number of instances");
  verify->add_option("--output", opt.output, "Write the report here instead of stdout");
  add_gen(verify);
  add_counter(verify);
  add_format(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "InvalidInput", e.what());
    return kExitInvalid;
  }

  try {
    if (mrr->parsed()) return cmd_solve(Problem::Mrr, opt, out);
    if (axis->parsed()) return cmd_solve(Problem::MrrAxis, opt, out);
    if (maxcol->parsed()) return cmd_solve(Problem::MaxCol, opt, out);
    if (oracle->parsed()) return cmd_oracle(opt, out);
    if (gen->parsed()) return cmd_gen(opt, out);
    if (render->parsed()) return cmd_render(opt, render_problem->count() > 0, out);
    if (verify->parsed()) return cmd_verify(opt, out);
  } catch (const Error& e) {
    report_error(err, to_string(e.code()), e.what());
    return kExitInvalid;
  } catch (const json::exception& e) {
    report_error(err, "InvalidInput", e.what());
    return kExitInvalid;
  } catch (const std::exception& e) {
    report_error(err, "Internal", e.what());
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace bichrome
