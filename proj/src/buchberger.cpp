#include "gbkit/buchberger.hpp"

#include <algorithm>
#include <deque>

#include "gbkit/reduction.hpp"

namespace gbkit {

Polynomial s_half(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw Error(Errc::ZeroPolynomial, "S-half of the zero polynomial");
  check_same_ring(f, g);
  return f.mul_term(g.lt() / gcd(f.lt(), g.lt()), g.terms().front().coeff);
}

Polynomial s_pol(const Polynomial& f, const Polynomial& g) { return s_half(f, g) - s_half(g, f); }

CriticalPair make_critical_pair(const std::vector<Polynomial>& G, std::size_t i, std::size_t j) {
  if (i >= j || j >= G.size()) throw Error(Errc::Internal, "critical pair indices out of order");
  Monomial l = lcm(G[i].lt(), G[j].lt());
  std::uint64_t d = l.degree();
  return CriticalPair{std::move(l), s_half(G[i], G[j]), s_half(G[j], G[i]), d, i, j};
}

namespace {

void check_generators(const std::vector<Polynomial>& F) {
  if (F.empty()) throw Error(Errc::EmptyInput, "no generators");
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (F[i].is_zero()) throw Error(Errc::ZeroPolynomial, "generator " + std::to_string(i) + " is zero");
  }
  check_same_ring(F);
}

}  // namespace

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& F, BuchbergerTrace* trace) {
  check_generators(F);
  std::vector<Polynomial> G = F;
  std::deque<std::pair<std::size_t, std::size_t>> queue;
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) queue.emplace_back(i, j);
  }
  while (!queue.empty()) {
    auto [i, j] = queue.front();
    queue.pop_front();
    if (trace) trace->processed.emplace_back(i, j);
    Polynomial r = multi_var_div(s_pol(G[i], G[j]), G).remainder;
    if (r.is_zero()) continue;
    std::size_t m = G.size();
    G.push_back(std::move(r));
    if (trace) trace->additions.push_back(trace->processed.size());
    for (std::size_t k = 0; k < m; ++k) queue.emplace_back(k, m);
  }
  return G;
}

bool is_groebner(const std::vector<Polynomial>& G) {
  std::vector<Polynomial> H;
  for (const auto& g : G) {
    if (g.is_zero()) throw Error(Errc::ZeroPolynomial, "zero polynomial in a candidate basis");
    H.push_back(g.monic());
  }
  for (std::size_t i = 0; i < H.size(); ++i) {
    for (std::size_t j = i + 1; j < H.size(); ++j) {
      if (!multi_var_div(s_pol(H[i], H[j]), H).remainder.is_zero()) return false;
    }
  }
  return true;
}

std::vector<Polynomial> reduce_basis(const std::vector<Polynomial>& G) {
  std::vector<Polynomial> H;
  for (const auto& g : G) {
    if (g.is_zero()) continue;
    if (std::find(H.begin(), H.end(), g) == H.end()) H.push_back(g);
  }
  if (H.empty()) return H;
  if (!is_groebner(H)) throw Error(Errc::NotAGroebnerBasis, "input fails Buchberger's criterion");
  return interred(H);
}

bool is_reduced_groebner(const std::vector<Polynomial>& G) {
  for (const auto& g : G) {
    if (g.is_zero() || g.terms().front().coeff != 1) return false;
  }
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (const auto& t : G[i].terms()) {
      for (std::size_t k = 0; k < G.size(); ++k) {
        if (k != i && G[k].lt().divides(t.mono)) return false;
      }
    }
  }
  return is_groebner(G);
}

std::vector<Polynomial> reduced_groebner_basis(const std::vector<Polynomial>& F) { return reduce_basis(buchberger(F)); }

}  // namespace gbkit
