#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "coinflip/lattice.hpp"

namespace coinflip {

struct TriangleSpec {
  Coord rows = 1;
};
struct RhombusSpec {
  Coord rows = 1;
};
struct HexagonSpec {
  Coord side = 1;
};
struct CustomSpec {
  std::string name;
};

using ShapeSpec = std::variant<TriangleSpec, RhombusSpec, HexagonSpec, CustomSpec>;

std::string describe(const ShapeSpec& spec);

// Up-pointing triangle with its apex at (0, n-1); row i from the top has i coins.
CoinSet triangle_up(Coord n);
// n x n rhombus {0 <= a, b <= n-1}.
CoinSet rhombus(Coord n);
// Hexagon with k coins per side, centred on the origin.
CoinSet hexagon(Coord k);

// Generates any non-custom shape. Throws std::invalid_argument for custom specs.
CoinSet make_shape(const ShapeSpec& spec);

// Number of protrusions the closed forms sum over: 3 for triangles, 2 for
// rhombi, none for other shapes.
std::optional<std::size_t> protrusion_arity(const ShapeSpec& spec);

// Raised by load_custom; `line()` is 1-based, 0 when the error is not tied
// to a line (e.g. an empty file).
class ShapeParseError : public std::runtime_error {
 public:
  ShapeParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Text format: one coin per line as "a b"; '#' starts a comment line, blank
// lines are skipped, LF or CRLF endings.
CoinSet load_custom(std::string_view source);
CoinSet load_custom_file(const std::string& path);

// Sorted by (a, b), LF terminated. load_custom(serialize(s)) == s.
std::string serialize(const CoinSet& s);

}  // namespace coinflip
