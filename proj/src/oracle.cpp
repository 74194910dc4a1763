#include "coinflip/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "checked.hpp"

namespace coinflip {

using detail::checked_add;
using detail::checked_sub;

CoinSet target(const CoinSet& start, const Placement& placement) {
  return translate(apply_flip(placement.flip, start), placement.shift);
}

namespace {

struct Range {
  Coord lo = std::numeric_limits<Coord>::max();
  Coord hi = std::numeric_limits<Coord>::min();

  void add(Coord v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
};

struct Bounds {
  Range a, b, sum;
};

Bounds bounds_of(const CoinSet& s) {
  Bounds out;
  for (const auto& c : s) {
    out.a.add(c.a);
    out.b.add(c.b);
    out.sum.add(checked_add(c.a, c.b));
  }
  return out;
}

// Translations t with S and F + t sharing a coin satisfy t = s - f, so each
// axis of t lies in [min S - max F, max S - min F].
Range difference_range(const Range& s, const Range& f) {
  return {checked_sub(s.lo, f.hi), checked_sub(s.hi, f.lo)};
}

// Dense histograms above this many cells switch to a hash map.
constexpr std::size_t kMaxDenseCells = std::size_t{1} << 24;

}  // namespace

OverlapResult solve(const CoinSet& start, FlipKind flip) {
  if (start.empty()) throw std::invalid_argument("solve: start shape is empty");
  const CoinSet flipped = apply_flip(flip, start);
  const Bounds sb = bounds_of(start);
  const Bounds fb = bounds_of(flipped);
  const Range ta = difference_range(sb.a, fb.a);
  const Range tb = difference_range(sb.b, fb.b);
  const Range tsum = difference_range(sb.sum, fb.sum);

  // overlap(t) = #{(s, f) : s - f == t}; accumulating over all pairs visits
  // exactly the translations with overlap >= 1, all inside the ranges above.
  OverlapResult result;
  result.total_coins = start.size();

  auto record = [&](std::size_t overlap, Translation t) {
    if (overlap > result.max_overlap) {
      result.max_overlap = overlap;
      result.optimal_placements.clear();
    }
    if (overlap == result.max_overlap) result.optimal_placements.push_back({flip, t});
  };

  const auto width = static_cast<unsigned long long>(checked_sub(ta.hi, ta.lo)) + 1;
  const auto height = static_cast<unsigned long long>(checked_sub(tb.hi, tb.lo)) + 1;
  if (width <= kMaxDenseCells && height <= kMaxDenseCells / width) {
    std::vector<std::uint32_t> hist(static_cast<std::size_t>(width * height), 0);
    for (const auto& s : start) {
      for (const auto& f : flipped) {
        const auto i = static_cast<std::size_t>(s.a - f.a - ta.lo);
        const auto j = static_cast<std::size_t>(s.b - f.b - tb.lo);
        ++hist[i * height + j];
      }
    }
    // Row-major over (da, db) gives the canonical placement order directly.
    for (std::size_t i = 0; i < width; ++i) {
      for (std::size_t j = 0; j < height; ++j) {
        const Translation t{ta.lo + static_cast<Coord>(i), tb.lo + static_cast<Coord>(j)};
        if (hist[i * height + j] == 0) continue;
        const Coord tsum_value = t.da + t.db;
        if (tsum_value < tsum.lo || tsum_value > tsum.hi) {
          throw std::logic_error("solve: translation outside the a+b difference range");
        }
        record(hist[i * height + j], t);
      }
    }
  } else {
    std::unordered_map<Translation, std::size_t, decltype([](const Translation& t) {
                         return std::hash<Coord>{}(t.da) * 1000003u ^ std::hash<Coord>{}(t.db);
                       })>
        hist;
    for (const auto& s : start) {
      for (const auto& f : flipped) ++hist[{checked_sub(s.a, f.a), checked_sub(s.b, f.b)}];
    }
    std::vector<std::pair<Translation, std::size_t>> sorted(hist.begin(), hist.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [t, overlap] : sorted) record(overlap, t);
  }

  result.min_moves = result.total_coins - result.max_overlap;
  return result;
}

std::size_t count_optimal_placements(const CoinSet& start, FlipKind flip) {
  return solve(start, flip).optimal_placements.size();
}

namespace {

void require_optimal(const CoinSet& start, const Placement& placement, const char* fn) {
  const auto result = solve(start, placement.flip);
  const auto& opt = result.optimal_placements;
  if (std::find(opt.begin(), opt.end(), placement) == opt.end()) {
    throw std::invalid_argument(std::string(fn) + ": placement with shift (" +
                                std::to_string(placement.shift.da) + "," +
                                std::to_string(placement.shift.db) + ") is not optimal");
  }
}

std::vector<ProtrusionComponent> classify_components(const CoinSet& leftover) {
  std::vector<ProtrusionComponent> out;
  for (auto& comp : connected_components(leftover)) {
    ProtrusionComponent pc;
    pc.size = comp.size();
    pc.triangle = classify_triangle(comp);
    pc.coins = std::move(comp);
    out.push_back(std::move(pc));
  }
  return out;
}

}  // namespace

ProtrusionReport protrusions(const CoinSet& start, const Placement& placement,
                             std::optional<std::size_t> arity) {
  require_optimal(start, placement, "protrusions");
  const CoinSet end = target(start, placement);

  ProtrusionReport report;
  report.placement = placement;
  report.source_components = classify_components(set_difference(start, end));
  report.target_components = classify_components(set_difference(end, start));
  for (const auto& c : report.source_components) report.size_multiset.push_back(c.size);
  std::sort(report.size_multiset.rbegin(), report.size_multiset.rend());
  if (arity && report.size_multiset.size() < *arity) report.size_multiset.resize(*arity, 0);
  return report;
}

MovePlan move_plan(const CoinSet& start, const Placement& placement) {
  require_optimal(start, placement, "move_plan");
  const CoinSet end = target(start, placement);
  const CoinSet from = set_difference(start, end);
  const CoinSet to = set_difference(end, start);
  // |start| == |end|, so both differences have the same size.
  MovePlan plan;
  for (std::size_t i = 0; i < from.size(); ++i) plan.moves.push_back({from.coords()[i], to.coords()[i]});
  return plan;
}

CoinSet apply_move_plan(const CoinSet& start, const MovePlan& plan) {
  std::vector<AxialCoord> coins(start.begin(), start.end());
  for (const auto& mv : plan.moves) {
    auto it = std::find(coins.begin(), coins.end(), mv.from);
    if (it == coins.end()) throw std::invalid_argument("apply_move_plan: no coin at " + to_string(mv.from));
    coins.erase(it);
  }
  for (const auto& mv : plan.moves) {
    if (std::find(coins.begin(), coins.end(), mv.to) != coins.end()) {
      throw std::invalid_argument("apply_move_plan: " + to_string(mv.to) + " is already occupied");
    }
    coins.push_back(mv.to);
  }
  return CoinSet(std::move(coins));
}

}  // namespace coinflip
