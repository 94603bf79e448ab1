#pragma once

#include <functional>
#include <vector>

#include "gbkit/buchberger.hpp"
#include "gbkit/linalg.hpp"

namespace gbkit {

enum class SelectionStrategy { All, FirstOnly, NormalDegree };

std::string to_string(SelectionStrategy s);
// "all", "first", "normal".
SelectionStrategy parse_strategy(const std::string& name);

// How symbolic preprocessing walks the support.
enum class SymPreMode {
  // Every term that ever enters Supp(F), including those brought in by
  // reductors, gets a reductor. Guarantees LT(h) outside LT(G) for Red output.
  Closure,
  // Only the terms of the input s-halves are visited, once.
  SinglePass,
};

// Which pairs a newly accepted polynomial spawns.
enum class PairUpdate {
  // Against every element already in the basis, including polynomials
  // accepted earlier in the same iteration.
  Full,
  // Against the basis as it was before the iteration; pairs between two
  // polynomials of the same iteration are kept only when their leading terms
  // share a variable (coprime ones reduce to zero anyway).
  OldNew,
};

struct F4Options {
  SelectionStrategy strategy = SelectionStrategy::NormalDegree;
  SymPreMode sym_pre = SymPreMode::SinglePass;
  PairUpdate pair_update = PairUpdate::OldNew;
  bool interreduce_input = true;
  // Called after each matrix is built and after it is reduced.
  std::function<void(std::size_t iter, const TermMatrix& built, const TermMatrix& reduced)> on_matrix;
};

struct F4IterationStats {
  std::size_t iter;
  std::uint64_t step_degree;
  std::size_t pairs_pending;
  std::size_t pairs_selected;
  std::size_t pairs_new;
  std::size_t rows;
  std::size_t cols;

  friend bool operator==(const F4IterationStats&, const F4IterationStats&) = default;
};

struct F4Result {
  // Reduced Groebner basis, ascending by leading term.
  std::vector<Polynomial> basis;
  // The working basis at loop exit, before the final interreduction.
  std::vector<Polynomial> working_basis;
  std::vector<F4IterationStats> stats;
  // Pairs chosen by the selection function in each iteration.
  std::vector<std::vector<CriticalPair>> selected;
};

// Throws EmptyInput on an empty list.
std::vector<CriticalPair> select(SelectionStrategy strategy, const std::vector<CriticalPair>& P);

std::vector<Polynomial> sym_pre(const std::vector<Polynomial>& L, const std::vector<Polynomial>& G,
                                SymPreMode mode = SymPreMode::SinglePass);

// sym_pre, RREF, then the rows with new leading terms.
std::vector<Polynomial> red(const std::vector<Polynomial>& L, const std::vector<Polynomial>& G,
                            SymPreMode mode = SymPreMode::SinglePass);

F4Result f4(const std::vector<Polynomial>& F, const F4Options& opts = {});
F4Result f4(const std::vector<Polynomial>& F, SelectionStrategy strategy);

}  // namespace gbkit
