#include "coinflip/lattice.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include "checked.hpp"

namespace coinflip {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_neg;
using detail::checked_sub;

std::string to_string(const AxialCoord& c) {
  return "(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")";
}

std::string_view flip_name(FlipKind flip) {
  switch (flip) {
    case FlipKind::Rotate180: return "rot180";
    case FlipKind::MirrorHorizontal: return "mirror-h";
    case FlipKind::MirrorVertical: return "mirror-v";
  }
  return "?";
}

std::optional<FlipKind> parse_flip(std::string_view name) {
  for (FlipKind f : kAllFlips) {
    if (flip_name(f) == name) return f;
  }
  return std::nullopt;
}

CoinSet::CoinSet(std::vector<AxialCoord> coins) : coins_(std::move(coins)) {
  std::sort(coins_.begin(), coins_.end());
  coins_.erase(std::unique(coins_.begin(), coins_.end()), coins_.end());
}

CoinSet::CoinSet(std::initializer_list<AxialCoord> coins)
    : CoinSet(std::vector<AxialCoord>(coins)) {}

bool CoinSet::contains(const AxialCoord& c) const {
  return std::binary_search(coins_.begin(), coins_.end(), c);
}

CoinSet set_union(const CoinSet& lhs, const CoinSet& rhs) {
  std::vector<AxialCoord> out;
  std::set_union(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(out));
  return CoinSet(std::move(out));
}

CoinSet set_intersection(const CoinSet& lhs, const CoinSet& rhs) {
  std::vector<AxialCoord> out;
  std::set_intersection(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                        std::back_inserter(out));
  return CoinSet(std::move(out));
}

CoinSet set_difference(const CoinSet& lhs, const CoinSet& rhs) {
  std::vector<AxialCoord> out;
  std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(out));
  return CoinSet(std::move(out));
}

AxialCoord rotate180(const AxialCoord& c) { return {checked_neg(c.a), checked_neg(c.b)}; }

AxialCoord mirror_horizontal(const AxialCoord& c) {
  return {checked_neg(checked_add(c.a, c.b)), c.b};
}

AxialCoord mirror_vertical(const AxialCoord& c) { return {checked_add(c.a, c.b), checked_neg(c.b)}; }

AxialCoord apply_flip(FlipKind flip, const AxialCoord& c) {
  switch (flip) {
    case FlipKind::Rotate180: return rotate180(c);
    case FlipKind::MirrorHorizontal: return mirror_horizontal(c);
    case FlipKind::MirrorVertical: return mirror_vertical(c);
  }
  throw std::invalid_argument("coinflip: unknown flip kind");
}

CoinSet apply_flip(FlipKind flip, const CoinSet& s) {
  std::vector<AxialCoord> out;
  out.reserve(s.size());
  for (const auto& c : s) out.push_back(apply_flip(flip, c));
  return CoinSet(std::move(out));
}

AxialCoord translate(const AxialCoord& c, const Translation& t) {
  return {checked_add(c.a, t.da), checked_add(c.b, t.db)};
}

CoinSet translate(const CoinSet& s, const Translation& t) {
  std::vector<AxialCoord> out;
  out.reserve(s.size());
  for (const auto& c : s) out.push_back(translate(c, t));
  return CoinSet(std::move(out));
}

Coord squared_distance(const AxialCoord& p, const AxialCoord& q) {
  const Coord da = checked_sub(p.a, q.a);
  const Coord db = checked_sub(p.b, q.b);
  return checked_add(checked_add(checked_mul(da, da), checked_mul(da, db)), checked_mul(db, db));
}

std::array<AxialCoord, 6> neighbors(const AxialCoord& c) {
  std::array<AxialCoord, 6> out;
  for (std::size_t i = 0; i < kNeighborOffsets.size(); ++i) {
    out[i] = translate(c, {kNeighborOffsets[i].a, kNeighborOffsets[i].b});
  }
  return out;
}

std::vector<CoinSet> connected_components(const CoinSet& s) {
  const auto& coins = s.coords();
  auto index_of = [&](const AxialCoord& c) -> std::optional<std::size_t> {
    auto it = std::lower_bound(coins.begin(), coins.end(), c);
    if (it == coins.end() || *it != c) return std::nullopt;
    return static_cast<std::size_t>(it - coins.begin());
  };

  std::vector<bool> seen(coins.size(), false);
  std::vector<CoinSet> out;
  std::vector<std::size_t> stack;
  // Seeds are visited in sorted order, so components come out ordered by
  // their smallest member.
  for (std::size_t seed = 0; seed < coins.size(); ++seed) {
    if (seen[seed]) continue;
    std::vector<AxialCoord> members;
    seen[seed] = true;
    stack.push_back(seed);
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      members.push_back(coins[i]);
      for (const auto& n : neighbors(coins[i])) {
        if (auto j = index_of(n); j && !seen[*j]) {
          seen[*j] = true;
          stack.push_back(*j);
        }
      }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

std::string_view orientation_name(Orientation o) {
  return o == Orientation::Up ? "up" : "down";
}

namespace {

// Number of rows k with k(k+1)/2 == n, if any.
std::optional<Coord> triangular_root(std::size_t n) {
  Coord k = 0;
  std::size_t t = 0;
  while (t < n) {
    ++k;
    t += static_cast<std::size_t>(k);
  }
  if (t != n) return std::nullopt;
  return k;
}

}  // namespace

std::optional<TriangleShape> classify_triangle(const CoinSet& component) {
  if (component.empty()) throw std::invalid_argument("classify_triangle: empty coin set");
  const auto rows = triangular_root(component.size());
  if (!rows) return std::nullopt;

  Coord min_a = component.begin()->a, max_a = min_a;
  Coord min_b = component.begin()->b, max_b = min_b;
  for (const auto& c : component) {
    min_a = std::min(min_a, c.a);
    max_a = std::max(max_a, c.a);
    min_b = std::min(min_b, c.b);
    max_b = std::max(max_b, c.b);
  }

  // A k-row triangle holds exactly k(k+1)/2 cells, so with the count already
  // matching it suffices that every coin lies inside the candidate outline.
  const Coord last = *rows - 1;
  const bool up = std::all_of(component.begin(), component.end(), [&](const AxialCoord& c) {
    return checked_add(checked_sub(c.a, min_a), checked_sub(c.b, min_b)) <= last;
  });
  if (up) return TriangleShape{Orientation::Up, *rows};
  const bool down = std::all_of(component.begin(), component.end(), [&](const AxialCoord& c) {
    return checked_add(checked_sub(max_a, c.a), checked_sub(max_b, c.b)) <= last;
  });
  if (down) return TriangleShape{Orientation::Down, *rows};
  return std::nullopt;
}

}  // namespace coinflip
