#pragma once

#include <utility>
#include <vector>

#include "gbkit/polynomial.hpp"

namespace gbkit {

// (LM(g) / gcd(LT f, LT g)) * f. Throws ZeroPolynomial on zero input.
Polynomial s_half(const Polynomial& f, const Polynomial& g);
Polynomial s_pol(const Polynomial& f, const Polynomial& g);

struct CriticalPair {
  Monomial lcm;
  Polynomial left;   // s_half(G[i], G[j])
  Polynomial right;  // s_half(G[j], G[i])
  std::uint64_t degree;
  std::size_t i;
  std::size_t j;
};

// Requires i < j.
CriticalPair make_critical_pair(const std::vector<Polynomial>& G, std::size_t i, std::size_t j);

struct BuchbergerTrace {
  // Pairs in the order they were taken off the queue.
  std::vector<std::pair<std::size_t, std::size_t>> processed;
  // Queue position (index into processed) at which each new element was added.
  std::vector<std::size_t> additions;
};

// Plain Buchberger with a FIFO pair queue and no criteria. Returns F extended
// by the nonzero remainders, which is a Groebner basis of (F).
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& F, BuchbergerTrace* trace = nullptr);

// Buchberger's criterion on the monic versions of G.
bool is_groebner(const std::vector<Polynomial>& G);

// The reduced Groebner basis, ascending by leading term. Throws
// NotAGroebnerBasis if G fails the criterion.
std::vector<Polynomial> reduce_basis(const std::vector<Polynomial>& G);

// Monic, interreduced and a Groebner basis.
bool is_reduced_groebner(const std::vector<Polynomial>& G);

// Reduced Groebner basis of (F): buchberger followed by reduce_basis.
std::vector<Polynomial> reduced_groebner_basis(const std::vector<Polynomial>& F);

}  // namespace gbkit
