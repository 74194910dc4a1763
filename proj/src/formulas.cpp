#include "coinflip/formulas.hpp"

#include <stdexcept>
#include <string>

#include "checked.hpp"

namespace coinflip::formulas {

using detail::checked_add;
using detail::checked_mul;

namespace {

void require_rows(Count rows, Count min, const char* fn) {
  if (rows < min) {
    throw std::invalid_argument(std::string(fn) + ": rows must be >= " + std::to_string(min) +
                                ", got " + std::to_string(rows));
  }
}

}  // namespace

Count triangular(Count k) {
  if (k < 0) throw std::invalid_argument("triangular: index must be >= 0, got " + std::to_string(k));
  // One of k, k+1 is even; halve it first so the product cannot overflow early.
  const Count next = checked_add(k, 1);
  return k % 2 == 0 ? checked_mul(k / 2, next) : checked_mul(k, next / 2);
}

Count triangle_moves_old(Count rows) {
  require_rows(rows, 1, "triangle_moves_old");
  return triangular(rows) / 3;
}

DivisionWitness triangle_division(Count rows) {
  require_rows(rows, 1, "triangle_division");
  return {(rows - 1) / 3, rows % 3};
}

TriangleDecomposition triangle_moves_new(Count rows) {
  require_rows(rows, 1, "triangle_moves_new");
  const auto [m, p] = triangle_division(rows);
  TriangleDecomposition d;
  switch (p) {
    case 1: d.indices = {m, m, m}; break;
    case 2: d.indices = {m + 1, m, m}; break;
    default: d.indices = {m + 1, m + 1, m}; break;
  }
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    d.parts[i] = triangular(d.indices[i]);
    d.moves = checked_add(d.moves, d.parts[i]);
  }
  return d;
}

Count triangle_moves_polynomial(Count rows) {
  require_rows(rows, 1, "triangle_moves_polynomial");
  const auto [m, p] = triangle_division(rows);
  const Count m2 = checked_mul(m, m);
  const Count three_m2 = checked_mul(3, m2);
  switch (p) {
    case 1: return checked_add(three_m2, checked_mul(3, m)) / 2;
    case 2: return checked_add(checked_add(three_m2, checked_mul(5, m)), 2) / 2;
    default: return checked_add(checked_add(three_m2, checked_mul(7, m)), 4) / 2;
  }
}

Count triangle_move_increment(Count rows) {
  require_rows(rows, 2, "triangle_move_increment");
  return triangle_moves_new(rows).moves - triangle_moves_new(rows - 1).moves;
}

Count rhombus_moves_old(Count rows) {
  require_rows(rows, 1, "rhombus_moves_old");
  return checked_mul(rows, rows) / 4;
}

DivisionWitness rhombus_division(Count rows) {
  require_rows(rows, 1, "rhombus_division");
  return {rows / 2, rows % 2};
}

RhombusDecomposition rhombus_moves_new(Count rows) {
  require_rows(rows, 1, "rhombus_moves_new");
  const auto [m, p] = rhombus_division(rows);
  RhombusDecomposition d;
  d.indices = p == 1 ? std::array<Count, 2>{m, m} : std::array<Count, 2>{m, m - 1};
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    d.parts[i] = triangular(d.indices[i]);
    d.moves = checked_add(d.moves, d.parts[i]);
  }
  return d;
}

Count rhombus_moves_polynomial(Count rows) {
  require_rows(rows, 1, "rhombus_moves_polynomial");
  const auto [m, p] = rhombus_division(rows);
  const Count m2 = checked_mul(m, m);
  return p == 1 ? checked_add(m2, m) : m2;
}

}  // namespace coinflip::formulas
