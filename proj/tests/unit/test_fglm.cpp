#include "gbkit/buchberger.hpp"
#include "gbkit/error.hpp"
#include "gbkit/fglm.hpp"
#include "gbkit/linalg.hpp"
#include "gbkit/reduction.hpp"
#include "test_util.hpp"

using namespace gbkit;
using namespace gbkit::testing;

namespace {

RingPtr drl2() { return ring(101, {"x", "y"}); }

std::vector<Polynomial> eight(const RingPtr& r) { return Ps(r, {"x*y^2-y", "y^4-x^2", "x^3-y^3"}); }
std::vector<Polynomial> toy(const RingPtr& r) { return Ps(r, {"y^2+34*x+y+2", "x^2+x*y+2*y"}); }

Residue m(std::int64_t v) { return static_cast<Residue>(((v % 101) + 101) % 101); }

Matrix signed_matrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  Matrix out(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (auto v : row) out(i, j++) = m(v);
    ++i;
  }
  return out;
}

std::vector<std::string> mono_names(const RingPtr& r, const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& t : ms) out.push_back(render_monomial(*r, t));
  return out;
}

}  // namespace

TEST(Staircase, EightElementExample) {
  auto r = drl2();
  Staircase S = staircase(eight(r));
  EXPECT_EQ(mono_names(r, S.terms), (std::vector<std::string>{"1", "y", "x", "y^2", "x*y", "x^2", "y^3", "x^2*y"}));
  EXPECT_EQ(S.index_of(Monomial{1, 1}), 4u);
  EXPECT_EQ(S.index_of(Monomial{5, 5}), S.size());
}

TEST(Staircase, MaximalIdealAndToy) {
  auto r = ring(101, {"x", "y", "z"});
  EXPECT_EQ(staircase(Ps(r, {"x", "y", "z"})).terms, (std::vector<Monomial>{{0, 0, 0}}));
  auto r2 = drl2();
  EXPECT_EQ(mono_names(r2, staircase(toy(r2)).terms), (std::vector<std::string>{"1", "y", "x", "x*y"}));
}

TEST(Staircase, NotZeroDimensional) {
  auto r = drl2();
  try {
    staircase(Ps(r, {"x"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotZeroDimensional);
  }
  EXPECT_EQ(staircase(Ps(r, {"1"})).size(), 0u);
}

TEST(Border, Examples) {
  auto r = drl2();
  auto B = border(staircase(eight(r)), r);
  auto names = mono_names(r, B);
  std::sort(names.begin(), names.end());
  std::vector<std::string> expect{"x*y^2", "x^3", "y^4", "x*y^3", "x^2*y^2", "x^3*y"};
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(names, expect);
  Staircase one{{Monomial{0, 0}}};
  auto b1 = border(one, r);
  EXPECT_EQ(mono_names(r, b1), (std::vector<std::string>{"y", "x"}));
}

TEST(Border, EveryElementIsLeadingTermOrVariableTimesBorder) {
  auto r = drl2();
  auto G = eight(r);
  auto S = staircase(G);
  auto B = border(S, r);
  for (const auto& b : B) {
    bool is_lt = std::any_of(G.begin(), G.end(), [&](auto& g) { return g.lt() == b; });
    bool step = false;
    for (std::size_t i = 0; i < 2; ++i) {
      if (b[i] == 0) continue;
      Monomial q = b / Monomial::variable(2, i);
      step = step || std::find(B.begin(), B.end(), q) != B.end();
    }
    EXPECT_TRUE(is_lt || step) << render_monomial(*r, b);
  }
  for (const auto& g : G) EXPECT_NE(std::find(B.begin(), B.end(), g.lt()), B.end());
  EXPECT_LE(B.size(), 2 * S.size());
}

TEST(MultMatrices, ToyMatchesDisplayedMatrices) {
  auto r = drl2();
  auto G = toy(r);
  auto M = mult_matrices(G, staircase(G));
  ASSERT_EQ(M.size(), 2u);
  EXPECT_EQ(M[0], signed_matrix({{0, 0, 0, 4}, {0, 0, -2, 35}, {1, 0, 0, -31}, {0, 1, -1, -33}}));
  EXPECT_EQ(M[1], signed_matrix({{0, -2, 0, 0}, {1, -1, 0, -33}, {0, -34, 0, -2}, {0, 0, 1, 33}}));
}

TEST(MultMatrices, Univariate) {
  auto r = ring(101, {"x"});
  auto M = mult_matrices(Ps(r, {"x-3"}), staircase(Ps(r, {"x-3"})));
  EXPECT_EQ(M.at(0), (Matrix{{3}}));
}

TEST(Update, WalkthroughStepTwo) {
  PrimeField F(101);
  Matrix P = update(F, Matrix::identity(4), 2, {m(-2), m(-1), m(-34), 0});
  EXPECT_EQ(P, signed_matrix({{1, 0, -6, 0}, {0, 1, -3, 0}, {0, 0, -3, 0}, {0, 0, 0, 1}}));
}

TEST(Update, AlignedLambdaLeavesPUnchanged) {
  PrimeField F(101);
  Matrix P = update(F, Matrix::identity(3), 1, {0, 1, 0});
  EXPECT_EQ(P, Matrix::identity(3));
}

TEST(Update, NoPivot) {
  PrimeField F(101);
  try {
    update(F, Matrix::identity(3), 1, {5, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoPivot);
  }
}

TEST(Fglm, ToyWalkthrough) {
  auto r = drl2();
  FglmTrace tr;
  auto G = fglm(toy(r), TermOrder::Lex, &tr);
  auto lex = with_order(r, TermOrder::Lex);
  EXPECT_EQ(G, Ps(lex, {"y^4-32*y^3-29*y^2+26*y+4", "x+3*y^2+3*y+6"}));
  ASSERT_GE(tr.transitions.size(), 3u);
  EXPECT_EQ(tr.transitions[1], signed_matrix({{1, 0, -6, 0}, {0, 1, -3, 0}, {0, 0, -3, 0}, {0, 0, 0, 1}}));
  EXPECT_EQ(tr.transitions[2], signed_matrix({{1, 0, -6, 0}, {0, 1, -3, -6}, {0, 0, -3, -3}, {0, 0, 0, -3}}));
  EXPECT_EQ(mono_names(r, tr.tested), (std::vector<std::string>{"y", "y^2", "y^3", "y^4", "x"}));
  std::vector<std::vector<Residue>> lambdas{{0, 1, 0, 0}, {m(-2), m(-1), m(-34), 0}, {0, m(-2), m(-1), m(-34)},
                                            {m(-4), m(-26), 29, 32}, {m(-6), m(-3), m(-3), 0}};
  EXPECT_EQ(tr.lambdas, lambdas);
  EXPECT_LE(tr.steps, 2u * 4 + 4);
}

TEST(Fglm, SameOrderIsIdentity) {
  auto r = drl2();
  auto G = reduce_basis(eight(r));
  EXPECT_EQ(fglm(G, TermOrder::DegRevLex), G);
}

TEST(Fglm, EightElementToLex) {
  auto r = drl2();
  auto G = reduce_basis(eight(r));
  auto out = fglm(G, TermOrder::Lex);
  auto lex = with_order(r, TermOrder::Lex);
  std::vector<Polynomial> moved;
  for (const auto& g : eight(r)) moved.push_back(g.with_ring(lex));
  EXPECT_TRUE(is_groebner(out));
  EXPECT_TRUE(is_reduced_groebner(out));
  EXPECT_EQ(out, reduced_groebner_basis(moved));
  EXPECT_LE(out.size(), 2 * staircase(G).size());
}

TEST(Fglm, Errors) {
  auto r = drl2();
  auto code = [&](const std::vector<Polynomial>& G) {
    try {
      fglm(G, TermOrder::Lex);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Internal;
  };
  EXPECT_EQ(code(Ps(r, {"1"})), Errc::UnitIdeal);
  EXPECT_EQ(code(Ps(r, {"x"})), Errc::NotZeroDimensional);
  EXPECT_EQ(code(Ps(r, {"2*y^2+68*x+2*y+4", "x^2+x*y+2*y"})), Errc::NotReduced);
  EXPECT_EQ(code(Ps(r, {"x*y^2-y", "y^4-x^2", "x^3-y^3", "x^3*y-y^4"})), Errc::NotReduced);
}

TEST(MinPolyVar, Examples) {
  auto r = drl2();
  EXPECT_EQ(min_poly_var(toy(r), 1), P(r, "y^4-32*y^3-29*y^2+26*y+4"));
  auto r1 = ring(101, {"x"});
  EXPECT_EQ(min_poly_var(Ps(r1, {"x-3"}), 0), P(r1, "x-3"));
  // oracle: Lex with x as the last variable puts the eliminant of x at the bottom
  auto swapped = ring(101, {"y", "x"}, TermOrder::Lex);
  std::vector<Polynomial> moved;
  for (const auto& g : toy(r)) moved.push_back(parse_polynomial(swapped, render(g)));
  auto lexb = reduced_groebner_basis(moved);
  Polynomial hx = lexb.front();
  EXPECT_EQ(render(min_poly_var(toy(r), 0)), render(hx));
}
