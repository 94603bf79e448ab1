#include "gbkit/solver.hpp"

#include <algorithm>

#include "gbkit/f4.hpp"
#include "gbkit/fglm.hpp"
#include "gbkit/univariate.hpp"

namespace gbkit {

DimensionReport dimension_report(const std::vector<Polynomial>& GB) {
  try {
    return DimensionReport{true, staircase(GB).size()};
  } catch (const Error& e) {
    if (e.code() != Errc::NotZeroDimensional) throw;
    return DimensionReport{false, std::nullopt};
  }
}

bool unit_ideal_check(const std::vector<Polynomial>& GB) {
  return std::any_of(GB.begin(), GB.end(), [](const Polynomial& g) { return !g.is_zero() && g.is_constant(); });
}

namespace {

// Smallest variable index present in the leading term.
std::size_t level_of(const Polynomial& f) {
  const Monomial& lt = f.lt();
  for (std::size_t i = 0; i < lt.nvars(); ++i) {
    if (lt[i] != 0) return i;
  }
  return lt.nvars();
}

UPoly substitute(const PrimeField& F, const Polynomial& f, std::size_t level, const std::vector<Residue>& point) {
  UPoly u;
  for (const auto& t : f.terms()) {
    Residue c = t.coeff;
    for (std::size_t j = level + 1; j < point.size(); ++j) {
      if (t.mono[j] != 0) c = F.mul(c, F.pow(point[j], t.mono[j]));
    }
    std::size_t e = t.mono[level];
    if (u.size() <= e) u.resize(e + 1, 0);
    u[e] = F.add(u[e], c);
  }
  trim(u);
  return u;
}

// x_i - g_i(x_n) for i < n-1 plus g_n(x_n).
bool is_shape_form(const std::vector<Polynomial>& lex) {
  if (lex.empty()) return false;
  const std::size_t n = lex[0].ring()->nvars();
  if (lex.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (const auto& g : lex) {
    std::size_t lv = level_of(g);
    if (lv >= n || seen[lv]) return false;
    seen[lv] = true;
    if (lv == n - 1) continue;
    if (g.lt() != Monomial::variable(n, lv)) return false;
    for (std::size_t k = 1; k < g.terms().size(); ++k) {
      const Monomial& m = g.terms()[k].mono;
      if (m.degree() != m[n - 1]) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::vector<Residue>> solve_from_lex_basis(const std::vector<Polynomial>& lex,
                                                       const std::vector<Polynomial>& check) {
  std::vector<std::vector<Residue>> points;
  if (lex.empty()) throw Error(Errc::NotZeroDimensional, "empty basis");
  if (unit_ideal_check(lex)) return points;
  const RingPtr& ring = lex[0].ring();
  const PrimeField& F = ring->field();
  const std::size_t n = ring->nvars();
  if (F.modulus() >= kMaxSolveModulus) {
    throw Error(Errc::ModulusTooLarge, "root search needs p < 2^20, got " + std::to_string(F.modulus()));
  }

  std::vector<std::vector<const Polynomial*>> levels(n);
  for (const auto& g : lex) levels[level_of(g)].push_back(&g);

  if (is_shape_form(lex)) {
    const Polynomial* last = levels[n - 1].front();
    for (Residue a : roots(F, substitute(F, *last, n - 1, std::vector<Residue>(n, 0)))) {
      std::vector<Residue> pt(n, 0);
      pt[n - 1] = a;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        // x_i + tail(x_n) = 0
        pt[i] = F.neg(levels[i].front()->tail().evaluate(pt));
      }
      points.push_back(std::move(pt));
    }
  } else {
    std::vector<Residue> pt(n, 0);
    auto dfs = [&](auto&& self, std::size_t level) -> void {
      UPoly g;
      for (const Polynomial* f : levels[level]) g = gcd(F, g, substitute(F, *f, level, pt));
      std::vector<Residue> cands;
      if (g.empty()) {
        for (Residue a = 0; a < F.modulus(); ++a) cands.push_back(a);
      } else {
        cands = roots(F, g);
      }
      for (Residue a : cands) {
        pt[level] = a;
        if (level == 0) {
          points.push_back(pt);
        } else {
          self(self, level - 1);
        }
      }
      pt[level] = 0;
    };
    dfs(dfs, n - 1);
  }

  for (const auto& pt : points) {
    for (const auto& f : check) {
      if (f.evaluate(pt) != 0) throw Error(Errc::Internal, "back-substitution produced a non-solution");
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

SolutionSet solve(const std::vector<Polynomial>& F) {
  std::vector<Polynomial> gens;
  for (const auto& f : F) {
    if (!f.is_zero()) gens.push_back(f);
  }
  if (gens.empty()) throw Error(Errc::NotZeroDimensional, "the zero ideal is not zero-dimensional");
  check_same_ring(gens);
  if (gens[0].ring()->field().modulus() >= kMaxSolveModulus) {
    throw Error(Errc::ModulusTooLarge, "root search needs p < 2^20");
  }
  RingPtr drl = with_order(gens[0].ring(), TermOrder::DegRevLex);
  std::vector<Polynomial> H;
  for (const auto& f : gens) {
    Polynomial h = f.with_ring(drl);
    if (std::find(H.begin(), H.end(), h) == H.end()) H.push_back(std::move(h));
  }
  SolutionSet out;
  std::vector<Polynomial> gb = f4(H, SelectionStrategy::NormalDegree).basis;
  if (unit_ideal_check(gb)) {
    out.lex_basis = {Polynomial::constant(with_order(drl, TermOrder::Lex), 1)};
    return out;
  }
  DimensionReport dim = dimension_report(gb);
  if (!dim.zero_dimensional) throw Error(Errc::NotZeroDimensional, "the system has infinitely many solutions over the closure");
  out.degree = *dim.degree;
  out.lex_basis = fglm(gb, TermOrder::Lex);
  std::vector<Polynomial> check;
  for (const auto& h : H) check.push_back(h);
  out.points = solve_from_lex_basis(out.lex_basis, check);
  return out;
}

}  // namespace gbkit
