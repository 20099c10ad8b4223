#include "ifsir/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "ifsir/dot.hpp"
#include "ifsir/error.hpp"
#include "ifsir/linguistic.hpp"
#include "ifsir/problem_io.hpp"
#include "ifsir/report.hpp"
#include "ifsir/solve.hpp"

namespace ifsir {

namespace {

namespace fs = std::filesystem;

// Writes next to the target and renames, so a failed run leaves no partial
// file behind.
void write_atomically(const fs::path& target, const std::string& content) {
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out.flush()) {
      throw std::runtime_error("cannot write '" + tmp.string() + "'");
    }
  }
  fs::rename(tmp, target);
}

struct SolveOptions {
  std::string problem;
  std::string report;
  std::string dot;
  std::string format = "human";
};

int cmd_solve(const SolveOptions& opts, std::ostream& out) {
  const auto problem = load_problem(opts.problem);
  const auto solution = solve(problem);
  const auto fmt =
      opts.format == "machine" ? ReportFormat::Machine : ReportFormat::Human;
  const auto report = emit_report(problem, solution, fmt);
  std::optional<std::string> dot;
  if (!opts.dot.empty()) dot = emit_dot(problem.alternatives, solution);

  if (opts.report.empty()) {
    out << report;
  } else {
    write_atomically(opts.report, report);
  }
  if (dot) write_atomically(opts.dot, *dot);
  if (!opts.report.empty()) {
    const auto& r = solution.ranking;
    out << "complete ranking: "
        << (r.complete ? format_strata(*r.complete, problem.alternatives)
                       : std::string("none (partial order)"))
        << '\n';
  }
  return kExitOk;
}

int cmd_validate(const std::string& path, std::ostream& out) {
  const auto problem = load_problem(path);
  out << path << ": ok (" << problem.alternatives.size() << " alternatives, "
      << problem.criteria.size() << " criteria, " << problem.experts.size()
      << " experts)\n";
  return kExitOk;
}

int cmd_scales_list(std::ostream& out) {
  for (const auto& s : builtin_scales()) {
    out << s.name() << " (" << s.entries().size() << " entries)\n";
  }
  return kExitOk;
}

int cmd_scales_export(const std::string& name, std::ostream& out,
                      std::ostream& err) {
  const auto* scale = find_builtin_scale(name);
  if (scale == nullptr) {
    err << "error: no builtin scale named '" << name << "'\n";
    return kExitInputError;
  }
  out << emit_scale(*scale).dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Intuitionistic fuzzy superiority/inferiority ranking", "ifsir"};
  app.require_subcommand(1);

  SolveOptions solve_opts;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a group decision problem");
  solve_cmd->add_option("problem", solve_opts.problem, "Problem file (JSON)")
      ->required();
  solve_cmd->add_option("--report", solve_opts.report,
                        "Write the report here instead of stdout");
  solve_cmd->add_option("--dot", solve_opts.dot, "Write the decision map (DOT)");
  solve_cmd->add_option("--format", solve_opts.format, "Report format")
      ->check(CLI::IsMember({"human", "machine"}));

  std::string validate_path;
  auto* validate_cmd =
      app.add_subcommand("validate", "Parse and check a problem file");
  validate_cmd->add_option("problem", validate_path, "Problem file (JSON)")
      ->required();

  auto* scales_cmd = app.add_subcommand("scales", "Builtin linguistic scales");
  scales_cmd->require_subcommand(1);
  auto* list_cmd = scales_cmd->add_subcommand("list", "List builtin scales");
  std::string export_name;
  auto* export_cmd =
      scales_cmd->add_subcommand("export", "Print a builtin scale document");
  export_cmd->add_option("name", export_name, "Scale name")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_opts, out);
    if (*validate_cmd) return cmd_validate(validate_path, out);
    if (*list_cmd) return cmd_scales_list(out);
    if (*export_cmd) return cmd_scales_export(export_name, out, err);
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "] " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
  return kExitInternalError;
}

}  // namespace ifsir
