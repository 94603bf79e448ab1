#include "gbkit/buchberger.hpp"
#include "gbkit/error.hpp"
#include "gbkit/reduction.hpp"
#include "test_util.hpp"

using namespace gbkit;
using namespace gbkit::testing;

TEST(SHalf, Examples) {
  auto lex = ring(101, {"x", "y", "z"}, TermOrder::Lex);
  EXPECT_EQ(s_half(P(lex, "x*y*z+100"), P(lex, "y^3*z+1")), P(lex, "x*y^3*z+100*y^2"));
  EXPECT_EQ(s_half(P(lex, "y^3*z+1"), P(lex, "x*y*z+100")), P(lex, "x*y^3*z+x"));
  auto drl = ring(101, {"x", "y"});
  Polynomial f = P(drl, "x^2+x+1");
  EXPECT_EQ(s_half(f, f), f);
  EXPECT_EQ(s_half(P(drl, "3*x+1"), P(drl, "3*x+1")), P(drl, "9*x+3"));
  EXPECT_EQ(s_half(f, P(drl, "x*y-x")), P(drl, "x^2*y+x*y+y"));
  EXPECT_THROW(s_half(f, Polynomial(drl)), Error);
}

TEST(SPol, Examples) {
  auto r = ring(101, {"x", "y"});
  Polynomial f1 = P(r, "x^2+x+1"), f2 = P(r, "x*y-x"), f3 = P(r, "y-1");
  EXPECT_EQ(s_pol(f1, f2), P(r, "x^2+x*y+y"));
  EXPECT_TRUE(s_pol(f1, f1).is_zero());
  EXPECT_TRUE(multi_var_div(s_pol(f1, f3), {f1, f3}).remainder.is_zero());
  try {
    s_pol(Polynomial(r), f1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroPolynomial);
  }
}

TEST(CriticalPair, Invariants) {
  auto r = ring(101, {"x", "y", "z"});
  auto G = Ps(r, {"x^3+y^2+x*z-1", "x^2+y^2+z-1", "y^2*z+x*z^2-1"});
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      CriticalPair p = make_critical_pair(G, i, j);
      EXPECT_EQ(p.lcm, lcm(G[i].lt(), G[j].lt()));
      EXPECT_EQ(p.left.lt(), p.lcm);
      EXPECT_EQ(p.right.lt(), p.lcm);
      EXPECT_EQ(p.degree, p.lcm.degree());
      EXPECT_EQ(p.left - p.right, s_pol(G[i], G[j]));
    }
  }
}

TEST(Buchberger, GuidedExample) {
  auto r = ring(101, {"x", "y"});
  auto G = buchberger(Ps(r, {"x^2+x+1", "x*y-x"}));
  EXPECT_TRUE(is_groebner(G));
  EXPECT_EQ(sorted_rendered(reduce_basis(G)), sorted_rendered(Ps(r, {"x^2+x+1", "y-1"})));
}

TEST(Buchberger, DegLexExample) {
  auto r = ring(101, {"x", "y"}, TermOrder::DegLex);
  auto G = reduced_groebner_basis(Ps(r, {"x^2+x*y+x+1", "x*y-x"}));
  EXPECT_EQ(sorted_rendered(G), sorted_rendered(Ps(r, {"x^2+2*x+1", "y-1"})));
}

TEST(Buchberger, UnitIdeal) {
  auto r = ring(101, {"x"});
  EXPECT_EQ(reduced_groebner_basis(Ps(r, {"1"})), Ps(r, {"1"}));
  EXPECT_EQ(reduced_groebner_basis(Ps(r, {"x", "x+1"})), Ps(r, {"1"}));
}

TEST(Buchberger, Errors) {
  auto r = ring(101, {"x"});
  EXPECT_THROW(buchberger({}), Error);
  EXPECT_THROW(buchberger({Polynomial(r)}), Error);
}

TEST(Buchberger, TraceGrowsLeadingTermIdeal) {
  auto r = ring(101, {"x", "y", "z"});
  auto F = Ps(r, {"x^3+y^2+x*z-1", "x^2+y^2+z-1", "y^2*z+x*z^2-1"});
  BuchbergerTrace tr;
  auto G = buchberger(F, &tr);
  EXPECT_EQ(tr.additions.size(), G.size() - F.size());
  for (std::size_t k = F.size(); k < G.size(); ++k) {
    for (std::size_t i = 0; i < k; ++i) EXPECT_FALSE(G[i].lt().divides(G[k].lt()));
  }
  for (std::size_t i = 0; i < F.size(); ++i) EXPECT_EQ(G[i], F[i]);
}

TEST(IsGroebner, Examples) {
  auto drl = ring(101, {"x", "y"});
  EXPECT_TRUE(is_groebner(Ps(drl, {"x*y^2-y", "y^4-x^2", "x^3-y^3"})));
  auto lex = ring(101, {"x", "y"}, TermOrder::Lex);
  EXPECT_FALSE(is_groebner(Ps(lex, {"x^2+y^2", "x*y"})));
  EXPECT_TRUE(is_groebner(Ps(lex, {"x^2+y^2", "x*y", "y^3"})));
  EXPECT_TRUE(is_groebner(Ps(lex, {"x^5+y+3"})));
}

TEST(ReduceBasis, Examples) {
  auto drl = ring(101, {"x", "y", "z"});
  auto toy = Ps(drl, {"x^2+z", "y^2-1", "x*z^2+z-1", "z^3-x*z+x"});
  auto red = reduce_basis(toy);
  EXPECT_EQ(sorted_rendered(red), sorted_rendered(toy));
  EXPECT_EQ(reduce_basis(red), red);
  // ascending by leading term
  for (std::size_t i = 1; i < red.size(); ++i) EXPECT_TRUE(drl->cmp(red[i - 1].lt(), red[i].lt()) < 0);

  auto lex = ring(101, {"x", "y", "z"}, TermOrder::Lex);
  auto G = Ps(lex, {"x*y*z+100", "x*z+y^2*z", "y^3*z+1", "x+y^2"});
  EXPECT_EQ(reduce_basis(G), interred(buchberger(Ps(lex, {"x*y*z+100", "x*z+y^2*z"}))));
  EXPECT_EQ(sorted_rendered(reduce_basis(G)), sorted_rendered(Ps(lex, {"y^3*z+1", "x+y^2"})));

  auto bad = ring(101, {"x", "y"}, TermOrder::Lex);
  try {
    reduce_basis(Ps(bad, {"x^2+y^2", "x*y"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotAGroebnerBasis);
  }
}
