#include "coinflip/shapes.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "checked.hpp"

namespace coinflip {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require_positive(Coord n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": size must be >= 1, got " + std::to_string(n));
}

}  // namespace

std::string describe(const ShapeSpec& spec) {
  return std::visit(
      overloaded{
          [](const TriangleSpec& s) { return "triangle " + std::to_string(s.rows); },
          [](const RhombusSpec& s) { return "rhombus " + std::to_string(s.rows); },
          [](const HexagonSpec& s) { return "hexagon " + std::to_string(s.side); },
          [](const CustomSpec& s) { return "custom " + s.name; },
      },
      spec);
}

CoinSet triangle_up(Coord n) {
  require_positive(n, "triangle_up");
  std::vector<AxialCoord> coins;
  coins.reserve(static_cast<std::size_t>(detail::checked_mul(n, n + 1) / 2));
  for (Coord a = 0; a < n; ++a) {
    for (Coord b = 0; a + b <= n - 1; ++b) coins.push_back({a, b});
  }
  return CoinSet(std::move(coins));
}

CoinSet rhombus(Coord n) {
  require_positive(n, "rhombus");
  std::vector<AxialCoord> coins;
  coins.reserve(static_cast<std::size_t>(detail::checked_mul(n, n)));
  for (Coord a = 0; a < n; ++a) {
    for (Coord b = 0; b < n; ++b) coins.push_back({a, b});
  }
  return CoinSet(std::move(coins));
}

CoinSet hexagon(Coord k) {
  require_positive(k, "hexagon");
  const Coord r = k - 1;
  std::vector<AxialCoord> coins;
  for (Coord a = -r; a <= r; ++a) {
    for (Coord b = std::max(-r, -r - a); b <= std::min(r, r - a); ++b) coins.push_back({a, b});
  }
  return CoinSet(std::move(coins));
}

CoinSet make_shape(const ShapeSpec& spec) {
  return std::visit(
      overloaded{
          [](const TriangleSpec& s) { return triangle_up(s.rows); },
          [](const RhombusSpec& s) { return rhombus(s.rows); },
          [](const HexagonSpec& s) { return hexagon(s.side); },
          [](const CustomSpec& s) -> CoinSet {
            throw std::invalid_argument("make_shape: custom shape '" + s.name +
                                        "' must be loaded from a shape file");
          },
      },
      spec);
}

std::optional<std::size_t> protrusion_arity(const ShapeSpec& spec) {
  if (std::holds_alternative<TriangleSpec>(spec)) return 3;
  if (std::holds_alternative<RhombusSpec>(spec)) return 2;
  return std::nullopt;
}

ShapeParseError::ShapeParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace {

bool parse_int(std::string_view text, Coord& out) {
  if (!text.empty() && text.front() == '+') return false;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && first != last;
}

}  // namespace

CoinSet load_custom(std::string_view source) {
  struct Entry {
    AxialCoord coin;
    std::size_t line;
  };
  std::vector<Entry> entries;
  std::size_t line_no = 0;
  while (!source.empty()) {
    ++line_no;
    const auto eol = source.find('\n');
    std::string_view line = source.substr(0, eol);
    source = eol == std::string_view::npos ? std::string_view{} : source.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (line.empty() || line.front() == '#') continue;
    const auto space = line.find(' ');
    Coord a = 0, b = 0;
    if (space == std::string_view::npos || !parse_int(line.substr(0, space), a) ||
        !parse_int(line.substr(space + 1), b)) {
      throw ShapeParseError(line_no, "expected two integers 'a b', got '" + std::string(line) + "'");
    }
    entries.push_back({{a, b}, line_no});
  }
  if (entries.empty()) throw ShapeParseError(0, "shape file contains no coins");

  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& x, const Entry& y) { return x.coin < y.coin; });
  std::vector<AxialCoord> coins;
  coins.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0 && entries[i].coin == entries[i - 1].coin) {
      throw ShapeParseError(entries[i].line, "duplicate coordinate " + to_string(entries[i].coin) +
                                                 " (first seen on line " +
                                                 std::to_string(entries[i - 1].line) + ")");
    }
    coins.push_back(entries[i].coin);
  }
  return CoinSet(std::move(coins));
}

CoinSet load_custom_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ShapeParseError(0, "cannot open shape file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_custom(buf.str());
}

std::string serialize(const CoinSet& s) {
  std::string out;
  for (const auto& c : s) {
    out += std::to_string(c.a);
    out += ' ';
    out += std::to_string(c.b);
    out += '\n';
  }
  return out;
}

}  // namespace coinflip
