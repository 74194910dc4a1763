#include "coinflip/cli.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "coinflip/formulas.hpp"

namespace coinflip::cli {

namespace f = formulas;

std::string format_ratio(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0 || numerator < 0) {
    throw std::invalid_argument("format_ratio: expects numerator >= 0 and denominator > 0");
  }
  constexpr __int128 kScale = 10'000'000'000;  // 10 decimal places
  __int128 whole = numerator / denominator;
  const __int128 rem = numerator % denominator;
  if (rem == 0) return std::to_string(numerator / denominator);
  __int128 frac = (2 * rem * kScale + denominator) / (2 * static_cast<__int128>(denominator));
  if (frac == kScale) {
    ++whole;
    frac = 0;
  }
  std::string digits = fmt::format("{:010d}", static_cast<std::int64_t>(frac));
  while (!digits.empty() && digits.back() == '0') digits.pop_back();
  std::string out = std::to_string(static_cast<std::int64_t>(whole));
  if (!digits.empty()) out += "." + digits;
  return out;
}

namespace {

template <std::size_t N>
std::string join_parts(const std::array<std::int64_t, N>& parts) {
  return fmt::format("{}", fmt::join(parts, " + "));
}

std::string increment_text(const TableRow& row, const TableRow* prev, bool verbose_diff) {
  if (!row.increment) return "";
  if (verbose_diff && prev) return fmt::format("{} - {} = {}", row.moves, prev->moves, *row.increment);
  return std::to_string(*row.increment);
}

std::string csv_quote(std::string_view field) {
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw std::runtime_error("csv: unterminated quoted field");
  return fields;
}

std::int64_t parse_i64(const std::string& s) {
  std::size_t used = 0;
  const long long v = std::stoll(s, &used);
  if (used != s.size()) throw std::runtime_error("csv: bad integer '" + s + "'");
  return v;
}

constexpr std::string_view kTriangleHeader = "rows,total_coins,old_formula,moves,increment,decomposition";
constexpr std::string_view kRhombusHeader = "rows,total_coins,coins_div_4,moves,decomposition";

}  // namespace

std::vector<TableRow> build_table(ShapeFamily family, std::int64_t max_rows) {
  if (max_rows < 1) throw std::invalid_argument("table: max_rows must be >= 1");
  std::vector<TableRow> out;
  for (std::int64_t rows = 1; rows <= max_rows; ++rows) {
    TableRow row;
    row.rows = rows;
    if (family == ShapeFamily::Triangle) {
      const auto d = f::triangle_moves_new(rows);
      row.total_coins = f::triangular(rows);
      row.old_formula = format_ratio(row.total_coins, 3);
      row.moves = d.moves;
      if (rows >= 2) row.increment = f::triangle_move_increment(rows);
      row.decomposition = join_parts(d.parts);
    } else {
      const auto d = f::rhombus_moves_new(rows);
      row.total_coins = rows * rows;
      row.old_formula = format_ratio(row.total_coins, 4);
      row.moves = d.moves;
      row.decomposition = join_parts(d.parts);
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::string render_csv(ShapeFamily family, const std::vector<TableRow>& rows, bool verbose_diff) {
  std::string out(family == ShapeFamily::Triangle ? kTriangleHeader : kRhombusHeader);
  out += '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    out += fmt::format("{},{},{},{},", r.rows, r.total_coins, r.old_formula, r.moves);
    if (family == ShapeFamily::Triangle) {
      out += increment_text(r, i > 0 ? &rows[i - 1] : nullptr, verbose_diff);
      out += ',';
    }
    out += csv_quote(r.decomposition);
    out += '\n';
  }
  return out;
}

std::string render_markdown(ShapeFamily family, const std::vector<TableRow>& rows,
                            bool verbose_diff) {
  std::string out;
  if (family == ShapeFamily::Triangle) {
    out += "| Rows | Total Coins | Coins/3 | Moves | Increment | Sum of 3 Triangular Numbers |\n";
    out += "|---:|---:|---:|---:|---:|:---|\n";
  } else {
    out += "| Rows | Total Coins | Coins/4 | Moves | Sum of 2 Triangular Numbers |\n";
    out += "|---:|---:|---:|---:|:---|\n";
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    out += fmt::format("| {} | {} | {} | {} |", r.rows, r.total_coins, r.old_formula, r.moves);
    if (family == ShapeFamily::Triangle) {
      out += fmt::format(" {} |", increment_text(r, i > 0 ? &rows[i - 1] : nullptr, verbose_diff));
    }
    out += fmt::format(" {} |\n", r.decomposition);
  }
  return out;
}

std::vector<TableRow> parse_csv(ShapeFamily family, std::string_view csv) {
  const bool triangle = family == ShapeFamily::Triangle;
  std::vector<TableRow> out;
  bool header = true;
  while (!csv.empty()) {
    const auto eol = csv.find('\n');
    std::string_view line = csv.substr(0, eol);
    csv = eol == std::string_view::npos ? std::string_view{} : csv.substr(eol + 1);
    if (header) {
      if (line != (triangle ? kTriangleHeader : kRhombusHeader)) {
        throw std::runtime_error("csv: unexpected header '" + std::string(line) + "'");
      }
      header = false;
      continue;
    }
    const auto fields = split_csv_line(line);
    if (fields.size() != (triangle ? 6u : 5u)) {
      throw std::runtime_error("csv: wrong field count in '" + std::string(line) + "'");
    }
    TableRow r;
    r.rows = parse_i64(fields[0]);
    r.total_coins = parse_i64(fields[1]);
    r.old_formula = fields[2];
    r.moves = parse_i64(fields[3]);
    if (triangle && !fields[4].empty()) r.increment = parse_i64(fields[4]);
    r.decomposition = fields.back();
    out.push_back(std::move(r));
  }
  if (header) throw std::runtime_error("csv: missing header");
  return out;
}

std::string RenderedDiagram::text() const {
  std::string out;
  for (const auto& line : grid) out += line + '\n';
  out += legend;
  return out;
}

namespace {

enum class Cell { Stationary, Source, Target };

std::map<AxialCoord, Cell> classify_cells(const CoinSet& start, const Placement& placement) {
  const CoinSet end = target(start, placement);
  std::map<AxialCoord, Cell> cells;
  for (const auto& c : start) cells[c] = end.contains(c) ? Cell::Stationary : Cell::Source;
  for (const auto& c : end) {
    if (!start.contains(c)) cells[c] = Cell::Target;
  }
  return cells;
}

}  // namespace

RenderedDiagram render_ascii(const CoinSet& start, const Placement& placement) {
  const auto cells = classify_cells(start, placement);
  RenderedDiagram d;
  if (cells.empty()) return d;

  // Column 2a + b puts each lattice row half a cell to the right of the one below.
  Coord min_col = std::numeric_limits<Coord>::max();
  Coord min_b = std::numeric_limits<Coord>::max(), max_b = std::numeric_limits<Coord>::min();
  for (const auto& [c, _] : cells) {
    min_col = std::min(min_col, 2 * c.a + c.b);
    min_b = std::min(min_b, c.b);
    max_b = std::max(max_b, c.b);
  }
  std::map<Coord, std::string> lines;
  for (const auto& [c, kind] : cells) {
    auto& line = lines[c.b];
    const auto col = static_cast<std::size_t>(2 * c.a + c.b - min_col);
    if (line.size() <= col) line.resize(col + 1, ' ');
    switch (kind) {
      case Cell::Stationary: line[col] = kStationaryGlyph; ++d.stationary; break;
      case Cell::Source: line[col] = kSourceGlyph; ++d.source_only; break;
      case Cell::Target: line[col] = kTargetGlyph; ++d.target_only; break;
    }
  }
  for (Coord b = max_b; b >= min_b; --b) {
    auto it = lines.find(b);
    d.grid.push_back(it == lines.end() ? std::string{} : it->second);
  }
  d.legend = fmt::format(
      "legend: {} stays ({}), {} moves away ({}), {} destination ({})\n"
      "flip {}, shift ({},{})\n",
      kStationaryGlyph, d.stationary, kSourceGlyph, d.source_only, kTargetGlyph, d.target_only,
      flip_name(placement.flip), placement.shift.da, placement.shift.db);
  return d;
}

std::string render_svg(const CoinSet& start, const Placement& placement) {
  const auto cells = classify_cells(start, placement);
  constexpr double kScale = 40.0;
  constexpr double kMargin = 1.0;
  const double row_height = std::sqrt(3.0) / 2.0;

  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool first = true;
  for (const auto& [c, _] : cells) {
    const double x = static_cast<double>(c.a) + static_cast<double>(c.b) / 2.0;
    const double y = -static_cast<double>(c.b) * row_height;  // SVG y grows downward
    if (first) {
      min_x = max_x = x;
      min_y = max_y = y;
      first = false;
    }
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  const double width = (max_x - min_x + 2 * kMargin) * kScale;
  const double height = (max_y - min_y + 2 * kMargin) * kScale;

  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.1f}\" height=\"{:.1f}\" "
      "viewBox=\"0 0 {:.1f} {:.1f}\">\n",
      width, height, width, height);
  out += fmt::format("<title>flip {} shift ({},{})</title>\n", flip_name(placement.flip),
                     placement.shift.da, placement.shift.db);
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& [c, kind] : cells) {
    const double x = (static_cast<double>(c.a) + static_cast<double>(c.b) / 2.0 - min_x + kMargin) * kScale;
    const double y = (-static_cast<double>(c.b) * row_height - min_y + kMargin) * kScale;
    const char* cls = "stationary";
    const char* style = "fill=\"black\" stroke=\"black\"";
    if (kind == Cell::Source) {
      cls = "source";
      style = "fill=\"none\" stroke=\"black\"";
    } else if (kind == Cell::Target) {
      cls = "target";
      style = "fill=\"green\" stroke=\"darkgreen\"";
    }
    out += fmt::format(
        "<circle class=\"{}\" cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"{:.3f}\" {} stroke-width=\"2\"/>\n", cls, x,
        y, kScale * 0.5 - 1.0, style);
  }
  out += "</svg>\n";
  return out;
}

namespace {

struct RowCheck {
  std::int64_t rows = 0;
  bool ok = true;
  std::string summary;
  std::string failure;
};

template <std::size_t N>
std::vector<std::size_t> as_sizes(const std::array<std::int64_t, N>& parts) {
  std::vector<std::size_t> out;
  for (auto p : parts) out.push_back(static_cast<std::size_t>(p));
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::string sizes_text(const std::vector<std::size_t>& sizes) {
  return fmt::format("{{{}}}", fmt::join(sizes, ","));
}

// Checks every optimal placement's protrusions against the closed-form parts.
std::string check_protrusions(const CoinSet& start, const OverlapResult& result, std::size_t arity,
                              const std::vector<std::size_t>& expected) {
  for (const auto& placement : result.optimal_placements) {
    const auto report = protrusions(start, placement, arity);
    std::string problem;
    if (report.source_components.size() > arity) {
      problem = fmt::format("{} protrusions, expected at most {}", report.source_components.size(), arity);
    } else if (report.size_multiset != expected) {
      problem = fmt::format("protrusion sizes {} != decomposition {}", sizes_text(report.size_multiset),
                            sizes_text(expected));
    } else {
      for (const auto& c : report.source_components) {
        if (!c.triangle) problem = "protrusion " + serialize(c.coins) + "is not a coin triangle";
      }
      std::vector<std::size_t> target_sizes;
      for (const auto& c : report.target_components) target_sizes.push_back(c.size);
      std::sort(target_sizes.rbegin(), target_sizes.rend());
      target_sizes.resize(std::max(target_sizes.size(), arity), 0);
      if (problem.empty() && target_sizes != report.size_multiset) {
        problem = fmt::format("target protrusions {} differ from source {}", sizes_text(target_sizes),
                              sizes_text(report.size_multiset));
      }
    }
    if (!problem.empty()) {
      return fmt::format("{}\n{}", problem, render_ascii(start, placement).text());
    }
  }
  return {};
}

RowCheck check_row(std::int64_t rows) {
  RowCheck rc;
  rc.rows = rows;
  auto fail = [&](std::string what) {
    if (rc.ok) {
      rc.ok = false;
      rc.failure = fmt::format("rows {}: {}", rows, what);
    }
  };

  const CoinSet tri = triangle_up(rows);
  const auto tri_result = solve(tri, FlipKind::Rotate180);
  const auto tri_old = f::triangle_moves_old(rows);
  const auto tri_new = f::triangle_moves_new(rows);
  const auto tri_poly = f::triangle_moves_polynomial(rows);
  const auto tri_oracle = static_cast<std::int64_t>(tri_result.min_moves);
  if (tri_old != tri_new.moves || tri_new.moves != tri_poly || tri_poly != tri_oracle) {
    fail(fmt::format("triangle old={} new={} polynomial={} oracle={}", tri_old, tri_new.moves, tri_poly,
                     tri_oracle));
  } else if (auto p = check_protrusions(tri, tri_result, 3, as_sizes(tri_new.parts)); !p.empty()) {
    fail("triangle " + p);
  }

  const CoinSet rh = rhombus(rows);
  const auto rh_h = solve(rh, FlipKind::MirrorHorizontal);
  const auto rh_v = solve(rh, FlipKind::MirrorVertical);
  const auto rh_old = f::rhombus_moves_old(rows);
  const auto rh_new = f::rhombus_moves_new(rows);
  const auto rh_poly = f::rhombus_moves_polynomial(rows);
  const auto rh_oracle_h = static_cast<std::int64_t>(rh_h.min_moves);
  const auto rh_oracle_v = static_cast<std::int64_t>(rh_v.min_moves);
  if (rh_old != rh_new.moves || rh_new.moves != rh_poly || rh_poly != rh_oracle_h ||
      rh_oracle_h != rh_oracle_v) {
    fail(fmt::format("rhombus old={} new={} polynomial={} oracle(mirror-h)={} oracle(mirror-v)={}", rh_old,
                     rh_new.moves, rh_poly, rh_oracle_h, rh_oracle_v));
  } else if (auto p = check_protrusions(rh, rh_h, 2, as_sizes(rh_new.parts)); !p.empty()) {
    fail("rhombus " + p);
  }

  rc.summary = fmt::format("rows {:>3}: triangle {} moves ({} optimal), rhombus {} moves ({} optimal)", rows,
                           tri_oracle, tri_result.optimal_placements.size(), rh_oracle_h,
                           rh_h.optimal_placements.size());
  return rc;
}

}  // namespace

VerifyOutcome verify(std::int64_t max_rows) {
  if (max_rows < 1) throw std::invalid_argument("verify: max_rows must be >= 1");
  // Rows are independent; collect in order so the report is deterministic.
  std::vector<std::future<RowCheck>> pending;
  for (std::int64_t rows = 1; rows <= max_rows; ++rows) {
    pending.push_back(std::async(std::launch::async, check_row, rows));
  }
  VerifyOutcome outcome;
  for (auto& fut : pending) {
    const RowCheck rc = fut.get();
    if (!outcome.ok) continue;
    if (!rc.ok) {
      outcome.ok = false;
      outcome.report += "FAIL " + rc.failure + "\n";
      continue;
    }
    outcome.report += "ok   " + rc.summary + "\n";
  }
  if (outcome.ok) outcome.report += fmt::format("verify: all checks passed for rows 1..{}\n", max_rows);
  return outcome;
}

namespace {

std::string placement_text(const Placement& p) {
  return fmt::format("{} shift ({},{})", flip_name(p.flip), p.shift.da, p.shift.db);
}

std::string component_text(const ProtrusionComponent& c) {
  std::string shape = "not a triangle";
  if (c.triangle) {
    shape = fmt::format("{}-row {} triangle", c.triangle->rows, orientation_name(c.triangle->orientation));
  }
  std::vector<std::string> coords;
  for (const auto& p : c.coins) coords.push_back(to_string(p));
  return fmt::format("{} coins, {}: {}", c.size, shape, fmt::join(coords, " "));
}

}  // namespace

std::string solve_report(const CoinSet& start, FlipKind flip, const SolveOptions& options) {
  const auto result = solve(start, flip);
  const auto& canonical = result.optimal_placements.front();
  const auto report = protrusions(start, canonical, options.arity);
  std::string out;
  out += fmt::format("flip: {}\n", flip_name(flip));
  out += fmt::format("total coins: {}\n", result.total_coins);
  out += fmt::format("min moves: {}\n", result.min_moves);
  out += fmt::format("max overlap: {}\n", result.max_overlap);
  out += fmt::format("optimal placements: {}\n", result.optimal_placements.size());
  out += fmt::format("canonical placement: {}\n", placement_text(canonical));
  out += fmt::format("protrusions: {}\n",
                     report.size_multiset.empty() ? std::string("none")
                                                  : fmt::format("{}", fmt::join(report.size_multiset, " + ")));
  if (options.show_moves) {
    const auto plan = move_plan(start, canonical);
    out += "moves:\n";
    for (const auto& mv : plan.moves) out += fmt::format("  {} -> {}\n", to_string(mv.from), to_string(mv.to));
  }
  return out;
}

std::string analyze_report(const CoinSet& start, FlipKind flip, std::optional<std::size_t> arity) {
  const auto result = solve(start, flip);
  std::string out = fmt::format("{} coins, flip {}: {} moves, {} optimal placement(s)\n", result.total_coins,
                                flip_name(flip), result.min_moves, result.optimal_placements.size());
  for (std::size_t i = 0; i < result.optimal_placements.size(); ++i) {
    const auto report = protrusions(start, result.optimal_placements[i], arity);
    out += fmt::format("[{}] {}: sizes {}\n", i, placement_text(report.placement),
                       fmt::join(report.size_multiset, " + "));
    for (const auto& c : report.source_components) out += "    from " + component_text(c) + "\n";
    for (const auto& c : report.target_components) out += "    to   " + component_text(c) + "\n";
  }
  return out;
}

namespace {

struct ShapeArgs {
  std::string kind;
  std::int64_t size = 0;
  std::string shape_file;
  std::string flip;
};

void add_shape_options(CLI::App* cmd, ShapeArgs& args) {
  cmd->add_option("shape", args.kind, "triangle, rhombus or hexagon")
      ->check(CLI::IsMember({"triangle", "rhombus", "hexagon"}));
  cmd->add_option("size", args.size, "rows (triangle, rhombus) or side length (hexagon)");
  cmd->add_option("--shape-file", args.shape_file, "load a custom shape ('a b' per line)");
  cmd->add_option("--flip", args.flip, "rot180, mirror-h or mirror-v")
      ->check(CLI::IsMember({"rot180", "mirror-h", "mirror-v"}));
}

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResolvedShape {
  ShapeSpec spec;
  CoinSet coins;
  FlipKind flip = FlipKind::Rotate180;
};

ResolvedShape resolve(const ShapeArgs& args) {
  ResolvedShape r;
  if (!args.shape_file.empty()) {
    if (!args.kind.empty()) throw UsageError("give either a shape name or --shape-file, not both");
    r.spec = CustomSpec{args.shape_file};
    r.coins = load_custom_file(args.shape_file);
  } else {
    if (args.kind.empty()) throw UsageError("missing shape (triangle, rhombus, hexagon) or --shape-file");
    if (args.size < 1) throw UsageError("shape size must be >= 1");
    if (args.kind == "triangle") {
      r.spec = TriangleSpec{args.size};
    } else if (args.kind == "rhombus") {
      r.spec = RhombusSpec{args.size};
    } else {
      r.spec = HexagonSpec{args.size};
    }
    r.coins = make_shape(r.spec);
  }

  const bool is_rhombus = std::holds_alternative<RhombusSpec>(r.spec);
  r.flip = is_rhombus ? FlipKind::MirrorHorizontal : FlipKind::Rotate180;
  if (!args.flip.empty()) r.flip = *parse_flip(args.flip);
  // These pairs map the shape onto itself, so the puzzle would be trivial.
  if (std::holds_alternative<TriangleSpec>(r.spec) && r.flip == FlipKind::MirrorHorizontal) {
    throw UsageError("a triangle is unchanged by mirror-h; use rot180 or mirror-v");
  }
  if (is_rhombus && r.flip == FlipKind::Rotate180) {
    throw UsageError("a rhombus is unchanged by rot180; use mirror-h or mirror-v");
  }
  return r;
}

ShapeFamily parse_family(const std::string& name) {
  return name == "triangle" ? ShapeFamily::Triangle : ShapeFamily::Rhombus;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum coin moves to flip triangles, rhombi and other coin shapes"};
  app.name("coinflip");
  app.require_subcommand(1);

  ShapeArgs solve_args;
  bool show_moves = false;
  auto* solve_cmd = app.add_subcommand("solve", "minimum moves for one shape");
  add_shape_options(solve_cmd, solve_args);
  solve_cmd->add_flag("--moves", show_moves, "list the moves of the canonical solution");

  std::string table_family;
  std::int64_t table_rows = 0;
  std::string table_format = "csv";
  bool verbose_diff = false;
  auto* table_cmd = app.add_subcommand("table", "closed-form move table for triangles or rhombi");
  table_cmd->add_option("family", table_family)->required()->check(CLI::IsMember({"triangle", "rhombus"}));
  table_cmd->add_option("max_rows", table_rows)->required();
  table_cmd->add_option("--format", table_format)->check(CLI::IsMember({"csv", "markdown"}));
  table_cmd->add_flag("--verbose-diff", verbose_diff, "print increments as 'new - old = diff'");

  ShapeArgs render_args;
  std::size_t placement_index = 0;
  std::string render_format = "ascii";
  auto* render_cmd = app.add_subcommand("render", "draw an optimal superimposition");
  add_shape_options(render_cmd, render_args);
  render_cmd->add_option("--placement", placement_index, "index into the optimal placements");
  render_cmd->add_option("--format", render_format)->check(CLI::IsMember({"ascii", "svg"}));

  std::int64_t verify_rows = 0;
  auto* verify_cmd = app.add_subcommand("verify", "check every formula against the brute-force oracle");
  verify_cmd->add_option("max_rows", verify_rows)->required();

  ShapeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "protrusions of every optimal placement");
  add_shape_options(analyze_cmd, analyze_args);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) {
      const auto shape = resolve(solve_args);
      out << solve_report(shape.coins, shape.flip, {show_moves, protrusion_arity(shape.spec)});
    } else if (table_cmd->parsed()) {
      if (table_rows < 1) throw UsageError("max_rows must be >= 1");
      const auto family = parse_family(table_family);
      const auto rows = build_table(family, table_rows);
      out << (table_format == "csv" ? render_csv(family, rows, verbose_diff)
                                    : render_markdown(family, rows, verbose_diff));
    } else if (render_cmd->parsed()) {
      const auto shape = resolve(render_args);
      const auto result = solve(shape.coins, shape.flip);
      const auto n = result.optimal_placements.size();
      if (placement_index >= n) {
        throw UsageError(fmt::format("placement index {} out of range; valid range is 0..{}", placement_index,
                                     n - 1));
      }
      const auto& placement = result.optimal_placements[placement_index];
      out << (render_format == "svg" ? render_svg(shape.coins, placement)
                                     : render_ascii(shape.coins, placement).text());
    } else if (verify_cmd->parsed()) {
      if (verify_rows < 1) throw UsageError("max_rows must be >= 1");
      const auto outcome = verify(verify_rows);
      out << outcome.report;
      return outcome.ok ? kExitOk : kExitVerifyFailed;
    } else if (analyze_cmd->parsed()) {
      const auto shape = resolve(analyze_args);
      out << analyze_report(shape.coins, shape.flip, protrusion_arity(shape.spec));
    }
  } catch (const UsageError& e) {
    err << "coinflip: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ShapeParseError& e) {
    err << "coinflip: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "coinflip: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "coinflip: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace coinflip::cli
