#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "gbkit/polynomial.hpp"

namespace gbkit::testing {

// Random polynomial with up to max_terms terms of total degree <= max_deg.
inline Polynomial random_poly(std::mt19937_64& rng, const RingPtr& r, std::uint32_t max_deg, std::size_t max_terms) {
  const std::size_t n = r->nvars();
  std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
  std::uniform_int_distribution<std::uint64_t> coeff(1, r->field().modulus() - 1);
  std::vector<Term> terms;
  const std::size_t k = nterms(rng);
  for (std::size_t t = 0; t < k; ++t) {
    std::vector<std::uint32_t> e(n, 0);
    std::uint32_t budget = std::uniform_int_distribution<std::uint32_t>(0, max_deg)(rng);
    for (std::uint32_t b = 0; b < budget; ++b) ++e[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)];
    terms.push_back({Monomial(e), static_cast<Residue>(coeff(rng))});
  }
  return Polynomial(r, terms);
}

inline std::vector<Polynomial> random_system(std::mt19937_64& rng, const RingPtr& r, std::size_t max_gens,
                                             std::uint32_t max_deg, std::size_t max_terms) {
  std::vector<Polynomial> F;
  const std::size_t k = std::uniform_int_distribution<std::size_t>(1, max_gens)(rng);
  while (F.size() < k) {
    Polynomial f = random_poly(rng, r, max_deg, max_terms);
    if (!f.is_zero() && std::find(F.begin(), F.end(), f) == F.end()) F.push_back(f);
  }
  return F;
}

inline std::vector<std::string> names_for(std::size_t n) {
  static const char* all[] = {"x", "y", "z", "w"};
  return std::vector<std::string>(all, all + n);
}

// Every point of F_p^n on which all of F vanish, lexicographically sorted.
inline std::vector<std::vector<Residue>> brute_force_zeros(const std::vector<Polynomial>& F) {
  const RingPtr& r = F.at(0).ring();
  const std::size_t n = r->nvars();
  const Residue p = static_cast<Residue>(r->field().modulus());
  std::vector<std::vector<Residue>> out;
  std::vector<Residue> pt(n, 0);
  while (true) {
    bool ok = true;
    for (const auto& f : F) {
      if (f.evaluate(pt) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(pt);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++pt[i] < p) break;
      pt[i] = 0;
      if (i == 0) return out;
    }
  }
}

// Zero-dimensional by construction: f_i = x_i^d_i + (terms of degree < d_i),
// so every variable has a pure power among the leading terms of any
// degree-compatible basis.
inline std::vector<Polynomial> random_zero_dim_system(std::mt19937_64& rng, const RingPtr& r, std::uint32_t max_deg) {
  const std::size_t n = r->nvars();
  std::vector<Polynomial> F;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t d = std::uniform_int_distribution<std::uint32_t>(1, max_deg)(rng);
    std::vector<std::uint32_t> e(n, 0);
    e[i] = d;
    Polynomial f = Polynomial::monomial(r, Monomial(e));
    if (d > 1) f = f + random_poly(rng, r, d - 1, 4);
    F.push_back(f);
  }
  return F;
}

// The randomized cross-check corpus: n <= 3 variables, <= 3 generators,
// total degree <= 3, coefficients in F_101, always built under DegRevLex.
inline std::vector<std::vector<Polynomial>> random_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Polynomial>> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t n = 1 + i % 3;
    RingPtr r = make_ring(101, names_for(n), TermOrder::DegRevLex);
    out.push_back(random_system(rng, r, 3, 3, 4));
  }
  return out;
}

inline std::vector<Polynomial> in_order(const std::vector<Polynomial>& F, TermOrder order) {
  RingPtr r = with_order(F.at(0).ring(), order);
  std::vector<Polynomial> out;
  for (const auto& f : F) out.push_back(f.with_ring(r));
  return out;
}

}  // namespace gbkit::testing
