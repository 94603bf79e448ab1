#pragma once

#include <optional>
#include <vector>

#include "gbkit/polynomial.hpp"

namespace gbkit {

struct DivisionResult {
  Polynomial remainder;
  // Aligned with the divisor list when quotient tracking was requested.
  std::optional<std::vector<Polynomial>> quotients;
};

// Reduces the leading term until it is divisible by no LT(g). The reducer is
// always the first g (lowest index) whose LT divides the current LT.
Polynomial multi_var_red(const Polynomial& f, const std::vector<Polynomial>& G);

// Complete division: no term of the remainder is divisible by any LT(g).
DivisionResult multi_var_div(const Polynomial& f, const std::vector<Polynomial>& G, bool track_quotients = false);

// Shortcut for multi_var_div(f, G).remainder.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G);

// Stable sort ascending by leading term.
std::vector<Polynomial> asc_ord_lt(std::vector<Polynomial> F);

struct InterredTrace {
  // Sorted leading terms after each pass of the main loop.
  std::vector<std::vector<Monomial>> lt_multisets;
};

// Monic, interreduced list generating the same ideal, ascending by LT.
std::vector<Polynomial> interred(const std::vector<Polynomial>& F, InterredTrace* trace = nullptr);

}  // namespace gbkit
