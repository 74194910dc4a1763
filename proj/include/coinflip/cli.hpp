#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coinflip/lattice.hpp"
#include "coinflip/oracle.hpp"
#include "coinflip/shapes.hpp"

namespace coinflip::cli {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2 };

enum class ShapeFamily { Triangle, Rhombus };
enum class TableFormat { Csv, Markdown };

struct TableRow {
  std::int64_t rows = 0;
  std::int64_t total_coins = 0;
  std::string old_formula;  // total_coins / divisor, exact decimal or 10 places
  std::int64_t moves = 0;
  std::optional<std::int64_t> increment;  // triangles only, absent for row 1
  std::string decomposition;              // e.g. "6 + 6 + 3"

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

// numerator/denominator as a decimal: bare when integral, otherwise rounded
// to 10 places with trailing zeros dropped ("3.3333333333", "2.25").
std::string format_ratio(std::int64_t numerator, std::int64_t denominator);

std::vector<TableRow> build_table(ShapeFamily family, std::int64_t max_rows);

// The triangle schema is rows,total_coins,old_formula,moves,increment,decomposition;
// the rhombus schema is rows,total_coins,coins_div_4,moves,decomposition.
// With verbose_diff the increment column reads "5 - 3 = 2".
std::string render_csv(ShapeFamily family, const std::vector<TableRow>& rows,
                       bool verbose_diff = false);
std::string render_markdown(ShapeFamily family, const std::vector<TableRow>& rows,
                            bool verbose_diff = false);
// Inverse of render_csv (without verbose_diff). Throws std::runtime_error on
// malformed input.
std::vector<TableRow> parse_csv(ShapeFamily family, std::string_view csv);

inline constexpr char kStationaryGlyph = 'O';
inline constexpr char kSourceGlyph = '.';
inline constexpr char kTargetGlyph = '*';

struct RenderedDiagram {
  std::vector<std::string> grid;  // top lattice row first
  std::string legend;
  std::size_t stationary = 0;
  std::size_t source_only = 0;
  std::size_t target_only = 0;

  std::string text() const;
};

RenderedDiagram render_ascii(const CoinSet& start, const Placement& placement);
std::string render_svg(const CoinSet& start, const Placement& placement);

struct VerifyOutcome {
  bool ok = true;
  std::string report;
};

// Formula-vs-oracle sweep over rows 1..=max_rows; stops at the first
// discrepancy and dumps it.
VerifyOutcome verify(std::int64_t max_rows);

struct SolveOptions {
  bool show_moves = false;
  std::optional<std::size_t> arity;
};

std::string solve_report(const CoinSet& start, FlipKind flip, const SolveOptions& options);
std::string analyze_report(const CoinSet& start, FlipKind flip, std::optional<std::size_t> arity);

// Entry point shared by the coinflip binary and the tests. `args` excludes
// the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coinflip::cli
