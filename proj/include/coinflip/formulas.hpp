#pragma once

#include <array>
#include <cstdint>

namespace coinflip::formulas {

using Count = std::int64_t;

// T_k = k(k+1)/2, with T_0 = 0.
Count triangular(Count k);

// Quotient and remainder selecting a branch of the piecewise move formulas.
struct DivisionWitness {
  Count m = 0;
  Count p = 0;

  friend bool operator==(const DivisionWitness&, const DivisionWitness&) = default;
};

// Moves as a sum of triangular numbers, largest first. `indices[i]` is the k
// with parts[i] == T_k.
template <std::size_t N>
struct Decomposition {
  std::array<Count, N> indices{};
  std::array<Count, N> parts{};
  Count moves = 0;
};

using TriangleDecomposition = Decomposition<3>;
using RhombusDecomposition = Decomposition<2>;

// All of the following throw std::invalid_argument for rows < 1
// (rows < 2 for the increment).

// floor(T_rows / 3)
Count triangle_moves_old(Count rows);

// m = floor((rows-1)/3), p = rows mod 3. The shifted quotient makes the
// p == 0 branch (2*T_{m+1} + T_m) agree with the tabulated counts; plain
// rows/3 would overshoot, e.g. 15 instead of 7 for six rows.
DivisionWitness triangle_division(Count rows);

// p=1: 3*T_m; p=2: T_{m+1} + 2*T_m; p=0: 2*T_{m+1} + T_m.
TriangleDecomposition triangle_moves_new(Count rows);

// p=1: (3m^2+3m)/2; p=2: (3m^2+5m+2)/2; p=0: (3m^2+7m+4)/2.
Count triangle_moves_polynomial(Count rows);

// moves(rows) - moves(rows-1), which equals ceil((rows-1)/3).
Count triangle_move_increment(Count rows);

// floor(rows^2 / 4)
Count rhombus_moves_old(Count rows);

// rows = 2m + p, p in {0, 1}.
DivisionWitness rhombus_division(Count rows);

// p=1: 2*T_m; p=0: T_m + T_{m-1}.
RhombusDecomposition rhombus_moves_new(Count rows);

// p=1: m^2 + m; p=0: m^2.
Count rhombus_moves_polynomial(Count rows);

}  // namespace coinflip::formulas
