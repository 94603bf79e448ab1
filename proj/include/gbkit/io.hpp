#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gbkit/polynomial.hpp"

namespace gbkit {

struct System {
  RingPtr ring;
  std::vector<Polynomial> polys;
};

// Header lines `p <prime>`, `vars <names>`, `order <name>` followed by one
// polynomial per nonempty line; `#` starts a comment. Errors are ParseError
// with 1-based line/column and one of the codes ParseError, UnknownVariable,
// CompositeModulus, InvalidModulus, EmptyInput.
System parse_system(std::string_view text);

// Parses a single polynomial in the given ring. Line numbers in errors are
// offset by first_line.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, std::size_t first_line = 1);

struct RenderOptions {
  // Print coefficients in (-p/2, p/2] instead of [0, p).
  bool signed_coefficients = false;
};

std::string render_monomial(const Ring& ring, const Monomial& m);
std::string render(const Polynomial& f, RenderOptions opts = {});
// The system file that parse_system maps back to (ring, polys).
std::string render_system(const RingPtr& ring, const std::vector<Polynomial>& polys, RenderOptions opts = {});

}  // namespace gbkit
