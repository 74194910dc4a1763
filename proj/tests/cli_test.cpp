#include "coinflip/cli.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "coinflip/formulas.hpp"

namespace coinflip::cli {
namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_args(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_char(const std::vector<std::string>& lines, char c) {
  std::size_t n = 0;
  for (const auto& l : lines) n += static_cast<std::size_t>(std::count(l.begin(), l.end(), c));
  return n;
}

std::size_t count_substr(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

TEST(Cli, FormatRatio) {
  EXPECT_EQ(format_ratio(10, 3), "3.3333333333");
  EXPECT_EQ(format_ratio(1, 3), "0.3333333333");
  EXPECT_EQ(format_ratio(2, 3), "0.6666666667");
  EXPECT_EQ(format_ratio(3, 3), "1");
  EXPECT_EQ(format_ratio(9, 4), "2.25");
  EXPECT_EQ(format_ratio(1, 4), "0.25");
  EXPECT_EQ(format_ratio(0, 4), "0");
  EXPECT_EQ(format_ratio(99'999'999'999, 100'000'000'000), "1");  // rounds up into the integer part
  EXPECT_THROW(format_ratio(1, 0), std::invalid_argument);
}

TEST(Cli, TableRowExamples) {
  const auto tri = build_table(ShapeFamily::Triangle, 28);
  ASSERT_EQ(tri.size(), 28u);
  EXPECT_EQ(tri[15].total_coins, 136);
  EXPECT_EQ(tri[15].old_formula, "45.3333333333");
  EXPECT_EQ(tri[15].decomposition, "15 + 15 + 15");
  EXPECT_EQ(tri[0].old_formula, "0.3333333333");
  EXPECT_EQ(tri[0].decomposition, "0 + 0 + 0");
  EXPECT_EQ(tri[0].increment, std::nullopt);
  EXPECT_EQ(tri[4].increment, 2);

  const auto rh = build_table(ShapeFamily::Rhombus, 21);
  EXPECT_EQ(rh[17].total_coins, 324);
  EXPECT_EQ(rh[17].old_formula, "81");
  EXPECT_EQ(rh[17].decomposition, "45 + 36");
  EXPECT_THROW(build_table(ShapeFamily::Rhombus, 0), std::invalid_argument);
}

TEST(Cli, TableRowsAreSelfConsistent) {
  for (auto family : {ShapeFamily::Triangle, ShapeFamily::Rhombus}) {
    for (const auto& r : build_table(family, 200)) {
      std::int64_t sum = 0;
      std::istringstream parts(r.decomposition);
      std::string tok;
      while (parts >> tok) {
        if (tok != "+") sum += std::stoll(tok);
      }
      ASSERT_EQ(sum, r.moves);
      ASSERT_EQ(r.total_coins, family == ShapeFamily::Triangle ? formulas::triangular(r.rows) : r.rows * r.rows);
    }
  }
}

TEST(Cli, CsvRoundTrips) {
  for (auto family : {ShapeFamily::Triangle, ShapeFamily::Rhombus}) {
    for (std::int64_t n : {1, 2, 7, 28, 150}) {
      const auto rows = build_table(family, n);
      const auto csv = render_csv(family, rows);
      ASSERT_EQ(parse_csv(family, csv), rows);
      ASSERT_EQ(csv.find('\r'), std::string::npos);
      ASSERT_EQ(render_csv(family, parse_csv(family, csv)), csv);
    }
  }
  EXPECT_THROW(parse_csv(ShapeFamily::Rhombus, "bogus\n"), std::runtime_error);
  EXPECT_THROW(parse_csv(ShapeFamily::Rhombus, ""), std::runtime_error);
  EXPECT_THROW(parse_csv(ShapeFamily::Rhombus, "rows,total_coins,coins_div_4,moves,decomposition\n1,1\n"),
               std::runtime_error);
}

TEST(Cli, CsvGolden) {
  const auto csv = render_csv(ShapeFamily::Triangle, build_table(ShapeFamily::Triangle, 3));
  EXPECT_EQ(csv,
            "rows,total_coins,old_formula,moves,increment,decomposition\n"
            "1,1,0.3333333333,0,,\"0 + 0 + 0\"\n"
            "2,3,1,1,1,\"1 + 0 + 0\"\n"
            "3,6,2,2,1,\"1 + 1 + 0\"\n");
  const auto verbose = render_csv(ShapeFamily::Triangle, build_table(ShapeFamily::Triangle, 5), true);
  EXPECT_NE(verbose.find("5,15,5,5,5 - 3 = 2,\"3 + 1 + 1\"\n"), std::string::npos);
  const auto rh = render_csv(ShapeFamily::Rhombus, build_table(ShapeFamily::Rhombus, 2));
  EXPECT_EQ(rh,
            "rows,total_coins,coins_div_4,moves,decomposition\n"
            "1,1,0.25,0,\"0 + 0\"\n"
            "2,4,1,1,\"1 + 0\"\n");
}

TEST(Cli, MarkdownTable) {
  const auto md = render_markdown(ShapeFamily::Rhombus, build_table(ShapeFamily::Rhombus, 3));
  EXPECT_EQ(md,
            "| Rows | Total Coins | Coins/4 | Moves | Sum of 2 Triangular Numbers |\n"
            "|---:|---:|---:|---:|:---|\n"
            "| 1 | 1 | 0.25 | 0 | 0 + 0 |\n"
            "| 2 | 4 | 1 | 1 | 1 + 0 |\n"
            "| 3 | 9 | 2.25 | 2 | 1 + 1 |\n");
  const auto tri = render_markdown(ShapeFamily::Triangle, build_table(ShapeFamily::Triangle, 2), true);
  EXPECT_NE(tri.find("| 2 | 3 | 1 | 1 | 1 - 0 = 1 | 1 + 0 + 0 |"), std::string::npos);
}

TEST(Cli, RenderTriangleFour) {
  const CoinSet s = triangle_up(4);
  const auto d = render_ascii(s, solve(s, FlipKind::Rotate180).optimal_placements.at(0));
  EXPECT_EQ(count_char(d.grid, kStationaryGlyph), 7u);
  EXPECT_EQ(count_char(d.grid, kSourceGlyph), 3u);
  EXPECT_EQ(count_char(d.grid, kTargetGlyph), 3u);
  EXPECT_EQ(d.grid, (std::vector<std::string>{"   .", "* O O *", " O O O", ". O O .", "   *"}));
}

TEST(Cli, RenderTriangleFiveSolutions) {
  const CoinSet s = triangle_up(5);
  const auto r = solve(s, FlipKind::Rotate180);
  ASSERT_GE(r.optimal_placements.size(), 3u);
  std::set<std::vector<std::string>> distinct;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto d = render_ascii(s, r.optimal_placements[i]);
    EXPECT_EQ(d.source_only, 5u);
    EXPECT_EQ(protrusions(s, r.optimal_placements[i], 3).size_multiset, (std::vector<std::size_t>{3, 1, 1}));
    distinct.insert(d.grid);
  }
  EXPECT_EQ(distinct.size(), 3u);
}

TEST(Cli, RenderHexagonIdentity) {
  const CoinSet s = hexagon(2);
  const auto d = render_ascii(s, {FlipKind::Rotate180, {0, 0}});
  EXPECT_EQ(count_char(d.grid, kStationaryGlyph), 7u);
  EXPECT_EQ(count_char(d.grid, kSourceGlyph), 0u);
  EXPECT_EQ(count_char(d.grid, kTargetGlyph), 0u);
}

TEST(Cli, RenderedCountsMatchSolution) {
  std::vector<std::pair<CoinSet, FlipKind>> cases;
  for (Coord n = 1; n <= 10; ++n) {
    cases.emplace_back(triangle_up(n), FlipKind::Rotate180);
    cases.emplace_back(triangle_up(n), FlipKind::MirrorVertical);
    cases.emplace_back(rhombus(n), FlipKind::MirrorHorizontal);
    cases.emplace_back(rhombus(n), FlipKind::MirrorVertical);
    cases.emplace_back(hexagon(n), FlipKind::Rotate180);
  }
  for (const auto& [s, f] : cases) {
    const auto r = solve(s, f);
    for (const auto& p : r.optimal_placements) {
      const auto d = render_ascii(s, p);
      ASSERT_EQ(count_char(d.grid, kStationaryGlyph), r.max_overlap);
      ASSERT_EQ(count_char(d.grid, kSourceGlyph), r.min_moves);
      ASSERT_EQ(count_char(d.grid, kTargetGlyph), r.min_moves);
      const auto svg = render_svg(s, p);
      ASSERT_EQ(count_substr(svg, "class=\"stationary\""), r.max_overlap);
      ASSERT_EQ(count_substr(svg, "class=\"source\""), r.min_moves);
      ASSERT_EQ(count_substr(svg, "class=\"target\""), r.min_moves);
    }
  }
}

TEST(Cli, SvgIsWellFormedEnough) {
  const CoinSet s = triangle_up(4);
  const auto svg = render_svg(s, solve(s, FlipKind::Rotate180).optimal_placements.at(0));
  EXPECT_EQ(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0), 0u);
  EXPECT_NE(svg.find("</svg>\n"), std::string::npos);
  EXPECT_EQ(count_substr(svg, "<circle"), 13u);
}

TEST(Cli, VerifySmall) {
  const auto one = verify(1);
  EXPECT_TRUE(one.ok);
  EXPECT_NE(one.report.find("all checks passed for rows 1..1"), std::string::npos);
  EXPECT_THROW(verify(0), std::invalid_argument);
  // Deterministic output despite parallel row checks.
  EXPECT_EQ(verify(12).report, verify(12).report);
}

TEST(Cli, RunSolve) {
  auto r = run_args({"solve", "triangle", "4", "--flip", "rot180"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("min moves: 3\n"), std::string::npos);
  EXPECT_NE(r.out.find("max overlap: 7\n"), std::string::npos);
  EXPECT_NE(r.out.find("protrusions: 1 + 1 + 1\n"), std::string::npos);

  r = run_args({"solve", "rhombus", "4", "--flip", "mirror-h"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("min moves: 4\n"), std::string::npos);
  EXPECT_NE(r.out.find("protrusions: 3 + 1\n"), std::string::npos);

  r = run_args({"solve", "hexagon", "5", "--flip", "rot180"});
  EXPECT_NE(r.out.find("min moves: 0\n"), std::string::npos);

  r = run_args({"solve", "rhombus", "3", "--moves"});
  EXPECT_NE(r.out.find("flip: mirror-h\n"), std::string::npos);
  EXPECT_EQ(count_substr(r.out, " -> "), 2u);
}

TEST(Cli, RunUsageErrors) {
  EXPECT_EQ(run_args({"solve", "triangle", "4", "--flip", "mirror-h"}).code, kExitUsage);
  EXPECT_EQ(run_args({"solve", "rhombus", "4", "--flip", "rot180"}).code, kExitUsage);
  EXPECT_EQ(run_args({"solve", "square", "4"}).code, kExitUsage);
  EXPECT_EQ(run_args({"solve", "triangle", "0"}).code, kExitUsage);
  EXPECT_EQ(run_args({"solve"}).code, kExitUsage);
  EXPECT_EQ(run_args({"table", "triangle", "0"}).code, kExitUsage);
  EXPECT_EQ(run_args({"table", "triangle", "5", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run_args({"verify", "0"}).code, kExitUsage);
  EXPECT_EQ(run_args({}).code, kExitUsage);
  const auto r = run_args({"render", "triangle", "4", "--placement", "1"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("valid range is 0..0"), std::string::npos);
}

TEST(Cli, RunTableAndRender) {
  auto r = run_args({"table", "rhombus", "21"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, render_csv(ShapeFamily::Rhombus, build_table(ShapeFamily::Rhombus, 21)));
  r = run_args({"table", "triangle", "4", "--format", "markdown"});
  EXPECT_EQ(r.out.rfind("| Rows |", 0), 0u);

  r = run_args({"render", "triangle", "5", "--placement", "2"});
  EXPECT_EQ(r.code, kExitOk);
  r = run_args({"render", "hexagon", "2", "--format", "svg"});
  EXPECT_EQ(count_substr(r.out, "class=\"stationary\""), 7u);
}

TEST(Cli, RunVerify) {
  const auto r = run_args({"verify", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(count_substr(r.out, "ok   rows"), 5u);
}

TEST(Cli, RunWithShapeFile) {
  const auto path = std::filesystem::temp_directory_path() / "coinflip_cli_test_shape.txt";
  {
    std::ofstream f(path);
    f << "# four-row triangle\n0 0\n1 0\n2 0\n3 0\n0 1\n1 1\n2 1\n0 2\n1 2\n0 3\n";
  }
  auto r = run_args({"solve", "--shape-file", path.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("min moves: 3\n"), std::string::npos);
  r = run_args({"analyze", "--shape-file", path.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("1-row up triangle"), std::string::npos);
  r = run_args({"render", "--shape-file", path.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(run_args({"solve", "triangle", "4", "--shape-file", path.string()}).code, kExitUsage);
  {
    std::ofstream f(path);
    f << "0 0\n0 0\n";
  }
  r = run_args({"solve", "--shape-file", path.string()});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace coinflip::cli
