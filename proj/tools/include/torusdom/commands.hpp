#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "torusdom/validate.hpp"

namespace torusdom::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kTooLarge = 3 };

/// Inclusive integer range written "a..b" or a single "a".
struct IntRange {
  int first = 0;
  int last = 0;
};
/// Throws Error{InvalidArgument} on anything else or first > last.
IntRange parse_range(const std::string& text);

enum class MethodChoice { Auto, Oracle, Dp };
std::optional<MethodChoice> parse_method(const std::string& text);

enum class TableFormat { Csv, Json };

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

/// True when the exact solver handles (n, m, kind) under its caps without
/// the paired branch and bound.
bool exact_within_caps(int n, int m, DominationKind kind);

int cmd_value(int n, int m, DominationKind kind, Streams io);
/// out_path empty writes the certificate to io.out.
int cmd_construct(int n, int m, DominationKind kind, const std::string& out_path, Streams io);
/// Verdicts are checked against `kind` when given, else the claimed kind.
int cmd_verify(const std::string& path, std::optional<DominationKind> kind, Streams io);

struct SolveRequest {
  int n = 0;
  int m = 0;
  DominationKind kind = DominationKind::Total;
  MethodChoice method = MethodChoice::Auto;
  bool canonical = false;
  std::string out_path;
  std::filesystem::path cache_dir;
};
int cmd_solve(const SolveRequest& request, Streams io);

struct TableRequest {
  IntRange n;
  IntRange m;
  DominationKind kind = DominationKind::Total;
  TableFormat format = TableFormat::Csv;
  std::string out_path;
  std::filesystem::path cache_dir;
  int workers = 0;
};
int cmd_table(const TableRequest& request, Streams io);

int cmd_audit(int n, int m, const std::filesystem::path& cache_dir, Streams io);

/// Runs body and maps torusdom::Error codes to exit codes, reporting the
/// message on io.err.
int guarded(const std::function<int()>& body, Streams io);

}  // namespace torusdom::cli
