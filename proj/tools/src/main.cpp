#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "torusdom/cache.hpp"
#include "torusdom/commands.hpp"
#include "torusdom/error.hpp"

namespace {

using namespace torusdom;
using namespace torusdom::cli;

const std::map<std::string, DominationKind> kKinds{
    {"plain", DominationKind::Plain},
    {"total", DominationKind::Total},
    {"paired", DominationKind::Paired},
};

void add_dims(CLI::App* cmd, int& n, int& m) {
  cmd->add_option("--n", n, "number of rings (cycle length along i)")->required();
  cmd->add_option("--m", m, "number of rungs (cycle length along j)")->required();
}

CLI::Option* add_kind(CLI::App* cmd, DominationKind& kind) {
  return cmd->add_option("--kind", kind, "plain, total or paired")
      ->transform(CLI::CheckedTransformer(kKinds, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact values, bounds, constructions and certificates for domination on toroidal meshes C_n x C_m"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  std::string cache_dir = ResultCache::default_directory().string();
  app.add_option("--cache-dir", cache_dir, "directory holding the result cache")->capture_default_str();

  int n = 0;
  int m = 0;
  DominationKind kind = DominationKind::Total;
  std::string out_path;

  auto* value = app.add_subcommand("value", "print the exact value or the bound interval with citations");
  add_dims(value, n, m);
  add_kind(value, kind)->capture_default_str();

  auto* construct = app.add_subcommand("construct", "emit a validated construction as a certificate");
  add_dims(construct, n, m);
  add_kind(construct, kind)->capture_default_str();
  construct->add_option("--out", out_path, "certificate path (default: stdout)");

  std::string certificate_path;
  std::optional<DominationKind> verify_kind;
  auto* verify = app.add_subcommand("verify", "check a certificate file against every domination kind");
  verify->add_option("file", certificate_path, "certificate JSON")->required()->check(CLI::ExistingFile);
  verify->add_option("--kind", verify_kind, "kind to check instead of the claimed one")
      ->transform(CLI::CheckedTransformer(kKinds, CLI::ignore_case));

  SolveRequest solve_request;
  std::string method_text = "auto";
  auto* solve = app.add_subcommand("solve", "compute the exact minimum with a certificate");
  add_dims(solve, solve_request.n, solve_request.m);
  add_kind(solve, solve_request.kind)->capture_default_str();
  solve->add_option("--method", method_text, "auto, oracle or dp")
      ->check(CLI::IsMember({"auto", "oracle", "dp"}))
      ->capture_default_str();
  solve->add_option("--out", solve_request.out_path, "certificate path");
  solve->add_flag("--canonical", solve_request.canonical, "emit the lexicographically least optimal certificate");

  TableRequest table_request;
  std::string n_range;
  std::string m_range;
  std::string format_text = "csv";
  auto* table = app.add_subcommand("table", "sweep ranges of n and m");
  table->add_option("--n", n_range, "ring range, e.g. 3..13")->required();
  table->add_option("--m", m_range, "rung range, e.g. 3 or 5..6")->required();
  add_kind(table, table_request.kind)->capture_default_str();
  table->add_option("--format", format_text, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  table->add_option("--out", table_request.out_path, "output path (default: stdout)");
  table->add_option("--workers", table_request.workers, "parallel solves (0 = hardware threads)")
      ->check(CLI::NonNegativeNumber);

  auto* audit = app.add_subcommand("audit", "cross-check constructions, solver, formulas and cache");
  add_dims(audit, n, m);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const Streams io{std::cout, std::cerr};
  return guarded(
      [&]() -> int {
        if (*value) return cmd_value(n, m, kind, io);
        if (*construct) return cmd_construct(n, m, kind, out_path, io);
        if (*verify) return cmd_verify(certificate_path, verify_kind, io);
        if (*solve) {
          solve_request.method = *parse_method(method_text);
          solve_request.cache_dir = cache_dir;
          return cmd_solve(solve_request, io);
        }
        if (*table) {
          table_request.n = parse_range(n_range);
          table_request.m = parse_range(m_range);
          table_request.format = format_text == "json" ? TableFormat::Json : TableFormat::Csv;
          table_request.cache_dir = cache_dir;
          return cmd_table(table_request, io);
        }
        return cmd_audit(n, m, cache_dir, io);
      },
      io);
}
