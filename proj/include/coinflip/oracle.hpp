#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coinflip/lattice.hpp"

namespace coinflip {

// One superimposition: the start shape flipped, then shifted.
struct Placement {
  FlipKind flip = FlipKind::Rotate180;
  Translation shift;

  friend bool operator==(const Placement&, const Placement&) = default;
};

// translate(apply_flip(flip, start), shift)
CoinSet target(const CoinSet& start, const Placement& placement);

struct OverlapResult {
  std::size_t total_coins = 0;
  std::size_t max_overlap = 0;
  std::size_t min_moves = 0;
  // Every maximising placement, ordered by (shift.da, shift.db).
  std::vector<Placement> optimal_placements;
};

// Exhaustive search over every lattice translation that can make the two
// shapes share a coin. Throws std::invalid_argument on an empty start.
OverlapResult solve(const CoinSet& start, FlipKind flip);

std::size_t count_optimal_placements(const CoinSet& start, FlipKind flip);

struct ProtrusionComponent {
  CoinSet coins;
  std::size_t size = 0;
  std::optional<TriangleShape> triangle;
};

struct ProtrusionReport {
  Placement placement;
  std::vector<ProtrusionComponent> source_components;  // start minus target
  std::vector<ProtrusionComponent> target_components;  // target minus start
  // Source component sizes, largest first, zero padded to the requested arity.
  std::vector<std::size_t> size_multiset;
};

// Protrusion decomposition of an optimal placement. With no arity the
// multiset has one entry per component. Throws std::invalid_argument if the
// placement does not reach the maximum overlap.
ProtrusionReport protrusions(const CoinSet& start, const Placement& placement,
                             std::optional<std::size_t> arity = std::nullopt);

struct Move {
  AxialCoord from;
  AxialCoord to;

  friend bool operator==(const Move&, const Move&) = default;
};

struct MovePlan {
  std::vector<Move> moves;
};

// Pairs sorted(start - target) with sorted(target - start) in order.
// Throws std::invalid_argument for a non-optimal placement.
MovePlan move_plan(const CoinSet& start, const Placement& placement);

// Removes every `from` and adds every `to`. Throws std::invalid_argument if a
// move starts on an empty cell or lands on an occupied one.
CoinSet apply_move_plan(const CoinSet& start, const MovePlan& plan);

}  // namespace coinflip
