#include "gbkit/f4.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "gbkit/reduction.hpp"

namespace gbkit {

std::string to_string(SelectionStrategy s) {
  switch (s) {
    case SelectionStrategy::All: return "all";
    case SelectionStrategy::FirstOnly: return "first";
    case SelectionStrategy::NormalDegree: return "normal";
  }
  return "?";
}

SelectionStrategy parse_strategy(const std::string& name) {
  if (name == "all") return SelectionStrategy::All;
  if (name == "first") return SelectionStrategy::FirstOnly;
  if (name == "normal") return SelectionStrategy::NormalDegree;
  throw Error(Errc::ParseError, "unknown selection strategy '" + name + "'");
}

std::vector<CriticalPair> select(SelectionStrategy strategy, const std::vector<CriticalPair>& P) {
  if (P.empty()) throw Error(Errc::EmptyInput, "no critical pairs to select from");
  switch (strategy) {
    case SelectionStrategy::All: return P;
    case SelectionStrategy::FirstOnly: return {P.front()};
    case SelectionStrategy::NormalDegree: {
      std::uint64_t d = P.front().degree;
      for (const auto& p : P) d = std::min(d, p.degree);
      std::vector<CriticalPair> out;
      for (const auto& p : P) {
        if (p.degree == d) out.push_back(p);
      }
      return out;
    }
  }
  throw Error(Errc::Internal, "bad selection strategy");
}

namespace {

// First g in storage order whose LT divides t.
const Polynomial* find_reductor(const Monomial& t, const std::vector<Polynomial>& G) {
  for (const auto& g : G) {
    if (g.lt().divides(t)) return &g;
  }
  return nullptr;
}

}  // namespace

std::vector<Polynomial> sym_pre(const std::vector<Polynomial>& L, const std::vector<Polynomial>& G, SymPreMode mode) {
  std::vector<Polynomial> F;
  for (const auto& f : L) {
    if (!f.is_zero()) F.push_back(f);
  }
  for (const auto& g : G) {
    if (g.is_zero()) throw Error(Errc::ZeroDivisorPolynomial, "zero polynomial in the basis");
  }
  if (F.empty()) return F;
  check_same_ring(F);
  const Ring& R = *F[0].ring();

  std::unordered_set<Monomial, MonomialHash> done;
  for (const auto& f : F) done.insert(f.lt());

  if (mode == SymPreMode::SinglePass) {
    for (const auto& t : support(F)) {
      if (!done.insert(t).second) continue;
      if (const Polynomial* g = find_reductor(t, G)) F.push_back(g->mul_term(t / g->lt(), 1));
    }
    return F;
  }

  auto desc = [&R](const Monomial& a, const Monomial& b) { return R.cmp(a, b) > 0; };
  std::set<Monomial, decltype(desc)> todo(desc);
  for (const auto& f : F) {
    for (const auto& t : f.terms()) {
      if (!done.count(t.mono)) todo.insert(t.mono);
    }
  }
  while (!todo.empty()) {
    Monomial t = *todo.begin();
    todo.erase(todo.begin());
    done.insert(t);
    const Polynomial* g = find_reductor(t, G);
    if (!g) continue;
    Polynomial r = g->mul_term(t / g->lt(), 1);
    for (const auto& u : r.terms()) {
      if (!done.count(u.mono)) todo.insert(u.mono);
    }
    F.push_back(std::move(r));
  }
  return F;
}

namespace {

struct RedOutput {
  std::vector<Polynomial> rows;
  std::vector<Polynomial> fresh;
  std::size_t nrows = 0;
  std::size_t ncols = 0;
  std::uint64_t step_degree = 0;
};

RedOutput red_detailed(const std::vector<Polynomial>& L, const std::vector<Polynomial>& G, SymPreMode mode,
                       const F4Options* opts, std::size_t iter) {
  RedOutput out;
  out.rows = sym_pre(L, G, mode);
  if (out.rows.empty()) return out;
  for (const auto& f : out.rows) out.step_degree = std::max(out.step_degree, f.degree());
  TermMatrix M = matrix_of(out.rows);
  out.nrows = M.data.rows();
  out.ncols = M.cols.size();
  TermMatrix Mr = rref(M);
  if (opts && opts->on_matrix) opts->on_matrix(iter, M, Mr);
  std::vector<Polynomial> tilde;
  for (auto& f : rows_of(Mr)) {
    if (!f.is_zero()) tilde.push_back(std::move(f));
  }
  out.fresh = new_leading_rows(tilde, out.rows);
  return out;
}

}  // namespace

std::vector<Polynomial> red(const std::vector<Polynomial>& L, const std::vector<Polynomial>& G, SymPreMode mode) {
  return red_detailed(L, G, mode, nullptr, 0).fresh;
}

F4Result f4(const std::vector<Polynomial>& F, SelectionStrategy strategy) {
  F4Options o;
  o.strategy = strategy;
  return f4(F, o);
}

F4Result f4(const std::vector<Polynomial>& F, const F4Options& opts) {
  if (F.empty()) throw Error(Errc::EmptyInput, "no generators");
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (F[i].is_zero()) throw Error(Errc::ZeroPolynomial, "generator " + std::to_string(i) + " is zero");
  }
  check_same_ring(F);

  std::vector<Polynomial> G;
  if (opts.interreduce_input) {
    std::vector<Polynomial> distinct;
    for (const auto& f : F) {
      if (std::find(distinct.begin(), distinct.end(), f) == distinct.end()) distinct.push_back(f);
    }
    G = interred(distinct);
  } else {
    G = F;
  }

  std::vector<CriticalPair> P;
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) P.push_back(make_critical_pair(G, i, j));
  }

  F4Result result;
  std::size_t iter = 0;
  while (!P.empty()) {
    ++iter;
    F4IterationStats st{};
    st.iter = iter;
    st.pairs_pending = P.size();

    std::vector<CriticalPair> sel = select(opts.strategy, P);
    // Remove the selection from P, keeping the order of the rest.
    std::vector<bool> taken(P.size(), false);
    if (opts.strategy == SelectionStrategy::All) {
      std::fill(taken.begin(), taken.end(), true);
    } else if (opts.strategy == SelectionStrategy::FirstOnly) {
      taken[0] = true;
    } else {
      for (std::size_t k = 0; k < P.size(); ++k) taken[k] = P[k].degree == sel.front().degree;
    }
    std::vector<CriticalPair> rest;
    for (std::size_t k = 0; k < P.size(); ++k) {
      if (!taken[k]) rest.push_back(std::move(P[k]));
    }
    P = std::move(rest);
    st.pairs_selected = sel.size();

    std::vector<Polynomial> L;
    for (const auto& p : sel) {
      L.push_back(p.left);
      L.push_back(p.right);
    }
    RedOutput ro = red_detailed(L, G, opts.sym_pre, &opts, iter);
    st.step_degree = ro.step_degree;
    st.rows = ro.nrows;
    st.cols = ro.ncols;

    // Weak interreduction against the basis and the polynomials accepted so far.
    const std::size_t old_size = G.size();
    for (const auto& h : ro.fresh) {
      Polynomial r = multi_var_div(h, G).remainder;
      if (r.is_zero()) continue;
      G.push_back(r.monic());
    }
    std::size_t before = P.size();
    for (std::size_t m = old_size; m < G.size(); ++m) {
      for (std::size_t k = 0; k < m; ++k) {
        if (opts.pair_update == PairUpdate::OldNew && k >= old_size && gcd(G[k].lt(), G[m].lt()).is_one()) continue;
        P.push_back(make_critical_pair(G, k, m));
      }
    }
    st.pairs_new = P.size() - before;
    result.stats.push_back(st);
    result.selected.push_back(std::move(sel));
  }
  result.working_basis = G;
  result.basis = reduce_basis(G);
  return result;
}

}  // namespace gbkit
