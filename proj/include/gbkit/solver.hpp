#pragma once

#include <optional>
#include <vector>

#include "gbkit/polynomial.hpp"

namespace gbkit {

struct DimensionReport {
  bool zero_dimensional;
  std::optional<std::size_t> degree;
};

DimensionReport dimension_report(const std::vector<Polynomial>& GB);

// True iff some element is a nonzero constant.
bool unit_ideal_check(const std::vector<Polynomial>& GB);

struct SolutionSet {
  // Points of Z(I) with coordinates in F_p, in variable order, sorted.
  std::vector<std::vector<Residue>> points;
  // Roots are searched exhaustively over F_p; points over proper extensions
  // are never reported.
  bool complete_over_base = true;
  // Reduced lexicographic basis the points were read from.
  std::vector<Polynomial> lex_basis;
  std::size_t degree = 0;
};

// Exhaustive root search needs p below this bound.
inline constexpr std::uint32_t kMaxSolveModulus = 1u << 20;

// Throws NotZeroDimensional for positive-dimensional systems and
// ModulusTooLarge when p >= 2^20.
SolutionSet solve(const std::vector<Polynomial>& F);

// Back-substitution over a reduced lex basis; every point is checked against
// the polynomials in check.
std::vector<std::vector<Residue>> solve_from_lex_basis(const std::vector<Polynomial>& lex,
                                                       const std::vector<Polynomial>& check);

}  // namespace gbkit
