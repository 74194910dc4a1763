#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coinflip {

using Coord = std::int64_t;

// Position of one coin on the triangular lattice. The embedding in the plane
// is a*(1, 0) + b*(1/2, sqrt(3)/2); touching coins are at distance 1.
struct AxialCoord {
  Coord a = 0;
  Coord b = 0;

  friend auto operator<=>(const AxialCoord&, const AxialCoord&) = default;
};

std::string to_string(const AxialCoord& c);

struct Translation {
  Coord da = 0;
  Coord db = 0;

  friend auto operator<=>(const Translation&, const Translation&) = default;
};

enum class FlipKind { Rotate180, MirrorHorizontal, MirrorVertical };

inline constexpr std::array<FlipKind, 3> kAllFlips = {
    FlipKind::Rotate180, FlipKind::MirrorHorizontal, FlipKind::MirrorVertical};

// Short names used on the command line: rot180, mirror-h, mirror-v.
std::string_view flip_name(FlipKind flip);
std::optional<FlipKind> parse_flip(std::string_view name);

// Finite set of coin positions, kept sorted by (a, b).
class CoinSet {
 public:
  using const_iterator = std::vector<AxialCoord>::const_iterator;

  CoinSet() = default;
  // Duplicates collapse; use `has_duplicates` first if they must be reported.
  explicit CoinSet(std::vector<AxialCoord> coins);
  CoinSet(std::initializer_list<AxialCoord> coins);

  std::size_t size() const { return coins_.size(); }
  bool empty() const { return coins_.empty(); }
  bool contains(const AxialCoord& c) const;

  const_iterator begin() const { return coins_.begin(); }
  const_iterator end() const { return coins_.end(); }
  const std::vector<AxialCoord>& coords() const { return coins_; }

  friend bool operator==(const CoinSet&, const CoinSet&) = default;

 private:
  std::vector<AxialCoord> coins_;
};

CoinSet set_union(const CoinSet& lhs, const CoinSet& rhs);
CoinSet set_intersection(const CoinSet& lhs, const CoinSet& rhs);
CoinSet set_difference(const CoinSet& lhs, const CoinSet& rhs);

// Flips are involutive lattice isometries. All arithmetic is checked and
// throws std::overflow_error instead of wrapping.
AxialCoord rotate180(const AxialCoord& c);
AxialCoord mirror_horizontal(const AxialCoord& c);  // negates embedded x
AxialCoord mirror_vertical(const AxialCoord& c);    // negates embedded y
AxialCoord apply_flip(FlipKind flip, const AxialCoord& c);
CoinSet apply_flip(FlipKind flip, const CoinSet& s);

AxialCoord translate(const AxialCoord& c, const Translation& t);
CoinSet translate(const CoinSet& s, const Translation& t);

// Squared Euclidean distance between embedded points; always an integer.
Coord squared_distance(const AxialCoord& p, const AxialCoord& q);

inline constexpr std::array<AxialCoord, 6> kNeighborOffsets = {{
    {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}}};

std::array<AxialCoord, 6> neighbors(const AxialCoord& c);

// Maximal connected subsets under six-neighbour adjacency, ordered by their
// smallest member.
std::vector<CoinSet> connected_components(const CoinSet& s);

enum class Orientation { Up, Down };

std::string_view orientation_name(Orientation o);

struct TriangleShape {
  Orientation orientation = Orientation::Up;
  Coord rows = 0;

  friend bool operator==(const TriangleShape&, const TriangleShape&) = default;
};

// Recognises translates of the k-row up triangle {a >= 0, b >= 0, a+b <= k-1}
// and of its 180 degree image. A single coin reports as Up.
// Throws std::invalid_argument on an empty set.
std::optional<TriangleShape> classify_triangle(const CoinSet& component);

}  // namespace coinflip
