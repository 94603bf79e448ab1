#include "gbkit/fglm.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "gbkit/buchberger.hpp"
#include "gbkit/reduction.hpp"

namespace gbkit {

std::size_t Staircase::index_of(const Monomial& m) const {
  auto it = std::find(terms.begin(), terms.end(), m);
  return static_cast<std::size_t>(it - terms.begin());
}

namespace {

bool divisible_by_any(const Monomial& t, const std::vector<Monomial>& lts) {
  return std::any_of(lts.begin(), lts.end(), [&](const Monomial& l) { return l.divides(t); });
}

std::vector<Monomial> leading_terms(const std::vector<Polynomial>& G) {
  std::vector<Monomial> out;
  for (const auto& g : G) {
    if (g.is_zero()) throw Error(Errc::ZeroPolynomial, "zero polynomial in a basis");
    out.push_back(g.lt());
  }
  return out;
}

void check_zero_dimensional(const std::vector<Monomial>& lts, std::size_t nvars) {
  for (std::size_t i = 0; i < nvars; ++i) {
    bool pure = std::any_of(lts.begin(), lts.end(), [&](const Monomial& m) { return m[i] == m.degree(); });
    if (!pure) throw Error(Errc::NotZeroDimensional, "no pure power of variable " + std::to_string(i + 1) + " among the leading terms");
  }
}

std::vector<Residue> coordinates(const Polynomial& f, const Staircase& S, const std::unordered_map<Monomial, std::size_t, MonomialHash>& index) {
  std::vector<Residue> v(S.size(), 0);
  for (const auto& t : f.terms()) {
    auto it = index.find(t.mono);
    if (it == index.end()) throw Error(Errc::Internal, "normal form leaves the staircase");
    v[it->second] = t.coeff;
  }
  return v;
}

}  // namespace

Staircase staircase(const std::vector<Polynomial>& GB) {
  if (GB.empty()) throw Error(Errc::NotZeroDimensional, "the zero ideal is not zero-dimensional");
  check_same_ring(GB);
  const Ring& R = *GB[0].ring();
  std::vector<Monomial> lts = leading_terms(GB);
  Staircase S;
  if (std::any_of(lts.begin(), lts.end(), [](const Monomial& m) { return m.is_one(); })) return S;
  check_zero_dimensional(lts, R.nvars());
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<Monomial> frontier{Monomial(R.nvars())};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& w : frontier) {
      S.terms.push_back(w);
      for (std::size_t i = 0; i < R.nvars(); ++i) {
        Monomial c = w * Monomial::variable(R.nvars(), i);
        if (divisible_by_any(c, lts) || !seen.insert(c).second) continue;
        next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  std::sort(S.terms.begin(), S.terms.end(), [&](const Monomial& a, const Monomial& b) { return R.cmp(a, b) < 0; });
  return S;
}

std::vector<Monomial> border(const Staircase& S, const RingPtr& ring) {
  const Ring& R = *ring;
  std::unordered_set<Monomial, MonomialHash> inside(S.terms.begin(), S.terms.end());
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<Monomial> out;
  for (const auto& w : S.terms) {
    for (std::size_t i = 0; i < R.nvars(); ++i) {
      Monomial c = w * Monomial::variable(R.nvars(), i);
      if (inside.count(c) || !seen.insert(c).second) continue;
      out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return R.cmp(a, b) < 0; });
  return out;
}

std::vector<Matrix> mult_matrices(const std::vector<Polynomial>& GB, const Staircase& S) {
  if (GB.empty()) throw Error(Errc::EmptyInput, "empty basis");
  const RingPtr& ring = GB[0].ring();
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t j = 0; j < S.size(); ++j) index.emplace(S.terms[j], j);
  std::vector<Matrix> M;
  for (std::size_t k = 0; k < ring->nvars(); ++k) {
    Matrix m(S.size(), S.size());
    Monomial xk = Monomial::variable(ring->nvars(), k);
    for (std::size_t j = 0; j < S.size(); ++j) {
      std::vector<Residue> col = coordinates(normal_form(Polynomial::monomial(ring, S.terms[j] * xk), GB), S, index);
      for (std::size_t i = 0; i < S.size(); ++i) m(i, j) = col[i];
    }
    M.push_back(std::move(m));
  }
  return M;
}

Matrix update(const PrimeField& F, Matrix P, std::size_t r, std::vector<Residue> lambda) {
  const std::size_t D = P.rows();
  if (P.cols() != D || lambda.size() != D || r >= D) throw Error(Errc::ArityMismatch, "update shape mismatch");
  std::size_t k = r;
  while (k < D && lambda[k] == 0) ++k;
  if (k == D) throw Error(Errc::NoPivot, "lambda vanishes below row " + std::to_string(r));
  P.swap_rows(r, k);
  std::swap(lambda[r], lambda[k]);
  Residue inv = F.inv(lambda[r]);
  Residue* pr = P.row(r);
  for (std::size_t j = 0; j < D; ++j) pr[j] = F.mul(pr[j], inv);
  for (std::size_t i = 0; i < D; ++i) {
    if (i == r || lambda[i] == 0) continue;
    Residue* pi = P.row(i);
    for (std::size_t j = 0; j < D; ++j) pi[j] = F.sub_mul(pi[j], pr[j], lambda[i]);
  }
  return P;
}

std::vector<Polynomial> fglm(const std::vector<Polynomial>& GB, TermOrder target_order, FglmTrace* trace) {
  if (GB.empty()) throw Error(Errc::NotZeroDimensional, "the zero ideal is not zero-dimensional");
  check_same_ring(GB);
  if (std::any_of(GB.begin(), GB.end(), [](const Polynomial& g) { return !g.is_zero() && g.is_constant(); })) {
    throw Error(Errc::UnitIdeal, "the ideal is the whole ring");
  }
  if (!is_reduced_groebner(GB)) throw Error(Errc::NotReduced, "input is not a reduced Groebner basis");
  const RingPtr& src = GB[0].ring();
  const PrimeField& F = src->field();
  const std::size_t n = src->nvars();
  Staircase W = staircase(GB);
  const std::size_t D = W.size();
  std::vector<Matrix> M = mult_matrices(GB, W);

  RingPtr dst = with_order(src, target_order);
  const Ring& R2 = *dst;

  std::vector<Monomial> S{Monomial(n)};
  std::vector<std::vector<Residue>> V;
  V.emplace_back(D, 0);
  V[0][0] = 1;
  Matrix P = Matrix::identity(D);
  std::vector<Polynomial> G;
  std::vector<Monomial> lts;

  struct Pending {
    std::size_t k;
    std::size_t l;
    Monomial term;
  };
  auto less2 = [&R2](const Pending& a, const Pending& b) { return R2.cmp(a.term, b.term) < 0; };
  std::vector<Pending> L;
  auto insert_children = [&](std::size_t l) {
    for (std::size_t k = 0; k < n; ++k) {
      Monomial t = S[l] * Monomial::variable(n, k);
      if (divisible_by_any(t, lts)) continue;
      if (std::any_of(L.begin(), L.end(), [&](const Pending& p) { return p.term == t; })) continue;
      Pending p{k, l, std::move(t)};
      L.insert(std::upper_bound(L.begin(), L.end(), p, less2), std::move(p));
    }
  };
  insert_children(0);

  while (!L.empty()) {
    Pending cur = std::move(L.front());
    L.erase(L.begin());
    if (divisible_by_any(cur.term, lts)) continue;
    const std::size_t r = S.size();
    std::vector<Residue> v = multiply(F, M[cur.k], V[cur.l]);
    std::vector<Residue> lambda = multiply(F, P, v);
    bool dependent = std::all_of(lambda.begin() + static_cast<std::ptrdiff_t>(r), lambda.end(), [](Residue x) { return x == 0; });
    if (trace) {
      ++trace->steps;
      trace->tested.push_back(cur.term);
      trace->lambdas.push_back(lambda);
    }
    if (dependent) {
      std::vector<Term> terms{Term{cur.term, 1}};
      for (std::size_t i = 0; i < r; ++i) {
        if (lambda[i] != 0) terms.push_back(Term{S[i], F.neg(lambda[i])});
      }
      G.emplace_back(dst, std::move(terms));
      lts.push_back(cur.term);
      L.erase(std::remove_if(L.begin(), L.end(), [&](const Pending& p) { return cur.term.divides(p.term); }), L.end());
    } else {
      if (r >= D) throw Error(Errc::Internal, "staircase overflow");
      P = update(F, std::move(P), r, lambda);
      S.push_back(cur.term);
      V.push_back(std::move(v));
      insert_children(r);
    }
    if (trace) trace->transitions.push_back(P);
  }
  return G;
}

Polynomial min_poly_var(const std::vector<Polynomial>& GB, std::size_t var) {
  if (GB.empty()) throw Error(Errc::NotZeroDimensional, "the zero ideal is not zero-dimensional");
  check_same_ring(GB);
  const RingPtr& ring = GB[0].ring();
  if (var >= ring->nvars()) throw Error(Errc::ArityMismatch, "variable index out of range");
  const PrimeField& F = ring->field();
  if (std::any_of(GB.begin(), GB.end(), [](const Polynomial& g) { return !g.is_zero() && g.is_constant(); })) {
    return Polynomial::constant(ring, 1);
  }
  Staircase W = staircase(GB);
  const std::size_t D = W.size();
  Matrix Mi = mult_matrices(GB, W)[var];
  Matrix P = Matrix::identity(D);
  std::vector<Residue> v(D, 0);
  v[0] = 1;
  for (std::size_t j = 0; j <= D; ++j) {
    std::vector<Residue> lambda = multiply(F, P, v);
    bool dependent = std::all_of(lambda.begin() + static_cast<std::ptrdiff_t>(j), lambda.end(), [](Residue x) { return x == 0; });
    if (dependent) {
      std::vector<Term> terms;
      std::vector<std::uint32_t> e(ring->nvars(), 0);
      e[var] = static_cast<std::uint32_t>(j);
      terms.push_back(Term{Monomial(e), 1});
      for (std::size_t i = 0; i < j; ++i) {
        e[var] = static_cast<std::uint32_t>(i);
        if (lambda[i] != 0) terms.push_back(Term{Monomial(e), F.neg(lambda[i])});
      }
      return Polynomial(ring, std::move(terms));
    }
    P = update(F, std::move(P), j, lambda);
    v = multiply(F, Mi, v);
  }
  throw Error(Errc::Internal, "no dependency among D+1 powers");
}

}  // namespace gbkit
