#include "gbkit/reduction.hpp"

#include <algorithm>

namespace gbkit {

namespace {

void check_divisors(const Polynomial& f, const std::vector<Polynomial>& G) {
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i].is_zero()) throw Error(Errc::ZeroDivisorPolynomial, "divisor " + std::to_string(i) + " is zero");
    check_same_ring(f, G[i]);
  }
}

// Index of the first g whose LT divides t, or G.size().
std::size_t find_reducer(const Monomial& t, const std::vector<Polynomial>& G) {
  for (std::size_t k = 0; k < G.size(); ++k) {
    if (G[k].lt().divides(t)) return k;
  }
  return G.size();
}

std::vector<Monomial> sorted_lts(const std::vector<Polynomial>& L) {
  std::vector<Monomial> lts;
  for (const auto& f : L) lts.push_back(f.lt());
  if (!L.empty()) {
    const Ring& R = *L[0].ring();
    std::sort(lts.begin(), lts.end(), [&](const Monomial& a, const Monomial& b) { return R.cmp(a, b) < 0; });
  }
  return lts;
}

}  // namespace

Polynomial multi_var_red(const Polynomial& f, const std::vector<Polynomial>& G) {
  check_divisors(f, G);
  if (f.is_zero()) return f;
  Polynomial p = f;
  const PrimeField& F = f.ring()->field();
  while (!p.is_zero()) {
    std::size_t k = find_reducer(p.lt(), G);
    if (k == G.size()) break;
    const Polynomial& g = G[k];
    Residue c = F.mul(p.terms().front().coeff, F.inv(g.terms().front().coeff));
    p = p.sub_mul_term(p.lt() / g.lt(), c, g);
  }
  return p;
}

DivisionResult multi_var_div(const Polynomial& f, const std::vector<Polynomial>& G, bool track_quotients) {
  check_divisors(f, G);
  DivisionResult out;
  if (track_quotients) {
    std::vector<Polynomial> q;
    for (std::size_t i = 0; i < G.size(); ++i) q.emplace_back(f.ring());
    out.quotients = std::move(q);
  }
  if (f.is_zero()) {
    out.remainder = f;
    return out;
  }
  const PrimeField& F = f.ring()->field();
  std::vector<Residue> inv_lc;
  for (const auto& g : G) inv_lc.push_back(F.inv(g.terms().front().coeff));
  std::vector<Term> rem;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term& lead = p.terms().front();
    std::size_t k = find_reducer(lead.mono, G);
    if (k == G.size()) {
      rem.push_back(lead);
      p = p.tail();
      continue;
    }
    const Polynomial& g = G[k];
    Residue c = F.mul(lead.coeff, inv_lc[k]);
    Monomial m = lead.mono / g.lt();
    if (out.quotients) {
      auto& qk = (*out.quotients)[k];
      qk = qk + Polynomial::monomial(f.ring(), m, c);
    }
    p = p.sub_mul_term(m, c, g);
  }
  out.remainder = Polynomial::from_sorted(f.ring(), std::move(rem));
  return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G) {
  return multi_var_div(f, G).remainder;
}

std::vector<Polynomial> asc_ord_lt(std::vector<Polynomial> F) {
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (F[i].is_zero()) throw Error(Errc::ZeroDivisorPolynomial, "polynomial " + std::to_string(i) + " is zero");
  }
  if (F.empty()) return F;
  check_same_ring(F);
  const Ring& R = *F[0].ring();
  std::stable_sort(F.begin(), F.end(), [&](const Polynomial& a, const Polynomial& b) { return R.cmp(a.lt(), b.lt()) < 0; });
  return F;
}

std::vector<Polynomial> interred(const std::vector<Polynomial>& F, InterredTrace* trace) {
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (F[i].is_zero()) throw Error(Errc::ZeroDivisorPolynomial, "polynomial " + std::to_string(i) + " is zero");
    for (std::size_t j = 0; j < i; ++j) {
      if (F[i] == F[j]) throw Error(Errc::DuplicatePolynomial, "polynomials " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
    }
  }
  std::vector<Polynomial> L = asc_ord_lt(F);
  std::vector<Monomial> pi = sorted_lts(L);
  while (true) {
    std::vector<Polynomial> succ;
    for (const auto& f : L) {
      Polynomial r = multi_var_red(f, succ);
      if (!r.is_zero()) succ.push_back(std::move(r));
    }
    std::vector<Monomial> pi_succ = sorted_lts(succ);
    if (trace) trace->lt_multisets.push_back(pi_succ);
    L = asc_ord_lt(std::move(succ));
    if (pi_succ == pi) break;
    pi = std::move(pi_succ);
  }
  // Leading terms are now mutually irreducible; clear the tails.
  std::vector<Polynomial> out;
  out.reserve(L.size());
  for (std::size_t j = 0; j < L.size(); ++j) {
    std::vector<Polynomial> others;
    for (std::size_t k = 0; k < L.size(); ++k) {
      if (k != j) others.push_back(L[k]);
    }
    out.push_back(multi_var_div(L[j], others).remainder.monic());
  }
  return out;
}

}  // namespace gbkit
