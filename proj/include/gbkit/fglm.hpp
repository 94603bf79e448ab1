#pragma once

#include <vector>

#include "gbkit/linalg.hpp"

namespace gbkit {

struct Staircase {
  // Ascending under the basis' order; terms[0] is 1.
  std::vector<Monomial> terms;
  std::size_t size() const noexcept { return terms.size(); }
  // Position of m, or size() if m is not in the staircase.
  std::size_t index_of(const Monomial& m) const;
};

// Terms divisible by no leading term of GB. Throws NotZeroDimensional when
// some variable has no pure power among the leading terms. The unit ideal
// has the empty staircase.
Staircase staircase(const std::vector<Polynomial>& GB);

// x_i * w for w in the staircase, outside the staircase; ascending.
std::vector<Monomial> border(const Staircase& S, const RingPtr& ring);

// M[k] column j holds the staircase coordinates of NF(x_k * w_j).
std::vector<Matrix> mult_matrices(const std::vector<Polynomial>& GB, const Staircase& S);

// One transition-matrix update with pivot row r (0-based): afterwards
// P * v = e_r where lambda = P * v. Throws NoPivot if lambda[r..] is zero.
Matrix update(const PrimeField& F, Matrix P, std::size_t r, std::vector<Residue> lambda);

struct FglmTrace {
  // Terms actually tested (popped and not pruned).
  std::size_t steps = 0;
  std::vector<Monomial> tested;
  std::vector<std::vector<Residue>> lambdas;
  // Transition matrix after each tested term.
  std::vector<Matrix> transitions;
};

// Converts a reduced Groebner basis of a zero-dimensional ideal to the reduced
// basis for target_order, ascending. Throws NotReduced, NotZeroDimensional or
// UnitIdeal.
std::vector<Polynomial> fglm(const std::vector<Polynomial>& GB, TermOrder target_order, FglmTrace* trace = nullptr);

// Monic generator of I ∩ k[x_var], in the ring of GB.
Polynomial min_poly_var(const std::vector<Polynomial>& GB, std::size_t var);

}  // namespace gbkit
