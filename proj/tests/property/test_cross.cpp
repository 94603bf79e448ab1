#include <filesystem>
#include <fstream>
#include <sstream>

#include "gbkit/buchberger.hpp"
#include "gbkit/f4.hpp"
#include "gbkit/fglm.hpp"
#include "gbkit/reduction.hpp"
#include "gbkit/solver.hpp"
#include "test_util.hpp"

using namespace gbkit;
using namespace gbkit::testing;

namespace {

constexpr TermOrder kOrders[] = {TermOrder::Lex, TermOrder::DegLex, TermOrder::DegRevLex};
constexpr SelectionStrategy kStrategies[] = {SelectionStrategy::All, SelectionStrategy::FirstOnly,
                                             SelectionStrategy::NormalDegree};

const std::vector<std::vector<Polynomial>>& corpus() {
  static const auto c = random_corpus(150, 20240601);
  return c;
}

bool zero_dimensional_proper(const std::vector<Polynomial>& gb) {
  return !unit_ideal_check(gb) && dimension_report(gb).zero_dimensional;
}

std::vector<System> fixture_systems() {
  std::vector<System> out;
  std::vector<std::filesystem::path> paths;
  for (const auto& e : std::filesystem::directory_iterator(std::string(GBKIT_FIXTURE_DIR) + "/solver")) {
    if (e.path().extension() == ".sys") paths.push_back(e.path());
  }
  std::sort(paths.begin(), paths.end());
  for (const auto& p : paths) {
    std::ifstream f(p);
    std::ostringstream s;
    s << f.rdbuf();
    out.push_back(parse_system(s.str()));
  }
  return out;
}

}  // namespace

TEST(Cross, BuchbergerAndF4AgreeOnRandomSystems) {
  for (const auto& F0 : corpus()) {
    for (auto o : kOrders) {
      auto F = in_order(F0, o);
      auto expect = reduce_basis(buchberger(F));
      EXPECT_TRUE(is_groebner(expect));
      EXPECT_TRUE(is_reduced_groebner(expect));
      for (auto s : kStrategies) {
        auto res = f4(F, s);
        EXPECT_TRUE(is_groebner(res.basis));
        EXPECT_TRUE(is_groebner(res.working_basis));
        EXPECT_EQ(reduce_basis(res.working_basis), expect);
        EXPECT_EQ(res.basis, expect);
      }
    }
  }
}

TEST(Cross, F4VariantsAgree) {
  for (const auto& F0 : corpus()) {
    auto F = in_order(F0, TermOrder::DegRevLex);
    auto expect = reduced_groebner_basis(F);
    for (auto sp : {SymPreMode::Closure, SymPreMode::SinglePass}) {
      for (auto pu : {PairUpdate::Full, PairUpdate::OldNew}) {
        F4Options o;
        o.sym_pre = sp;
        o.pair_update = pu;
        o.interreduce_input = false;
        EXPECT_EQ(f4(F, o).basis, expect);
      }
    }
  }
}

TEST(Cross, BuchbergerOutputLiesInTheIdeal) {
  std::size_t checked = 0;
  for (const auto& F0 : corpus()) {
    auto F = in_order(F0, TermOrder::DegRevLex);
    auto G = buchberger(F);
    // every element has a zero normal form modulo the reduced basis of (F)
    auto R = reduced_groebner_basis(F);
    for (const auto& g : G) EXPECT_TRUE(multi_var_div(g, R).remainder.is_zero());
    // and each element of (G) reduces to zero against G itself
    for (const auto& f : F) EXPECT_TRUE(multi_var_div(f, G).remainder.is_zero());
    ++checked;
  }
  EXPECT_GE(checked, 100u);
}

TEST(Cross, FglmMatchesLexBuchberger) {
  std::size_t instances = 0;
  auto run = [&](const std::vector<Polynomial>& F0) {
    auto drl = reduced_groebner_basis(in_order(F0, TermOrder::DegRevLex));
    if (!zero_dimensional_proper(drl)) return;
    ++instances;
    const std::size_t n = drl[0].ring()->nvars();
    const std::size_t D = staircase(drl).size();
    for (auto target : {TermOrder::Lex, TermOrder::DegLex}) {
      FglmTrace tr;
      auto out = fglm(drl, target, &tr);
      EXPECT_EQ(out, reduced_groebner_basis(in_order(F0, target)));
      EXPECT_LE(tr.steps, n * D + D);
      EXPECT_LE(out.size(), n * D);
    }
  };
  for (const auto& F0 : corpus()) run(F0);
  std::mt19937_64 rng(77);
  for (int i = 0; i < 60; ++i) {
    auto r = ring(101, names_for(1 + i % 3));
    run(random_zero_dim_system(rng, r, 3));
  }
  EXPECT_GE(instances, 60u);
}

TEST(Cross, SolverMatchesBruteForceOnFixtures) {
  std::size_t n2 = 0, n3 = 0;
  for (const auto& sys : fixture_systems()) {
    const std::size_t n = sys.ring->nvars();
    const auto p = sys.ring->field().modulus();
    ASSERT_TRUE((n == 2 && p == 101) || (n == 3 && p == 11));
    (n == 2 ? n2 : n3)++;
    auto sol = solve(sys.polys);
    EXPECT_EQ(sol.points, brute_force_zeros(sys.polys));
  }
  EXPECT_GT(n2, 0u);
  EXPECT_GT(n3, 0u);
}

TEST(Cross, SolverMatchesBruteForceOnRandomSystems) {
  std::mt19937_64 rng(78);
  for (int i = 0; i < 80; ++i) {
    const bool three = i % 2;
    auto r = ring(three ? 11 : 101, names_for(three ? 3 : 2));
    auto F = random_zero_dim_system(rng, r, 3);
    if (i % 4 == 0) F.push_back(random_poly(rng, r, 2, 3));
    F.erase(std::remove_if(F.begin(), F.end(), [](auto& f) { return f.is_zero(); }), F.end());
    auto sol = solve(F);
    EXPECT_EQ(sol.points, brute_force_zeros(F));
    if (!sol.lex_basis.empty() && !sol.lex_basis[0].is_constant()) {
      const Polynomial& last = sol.lex_basis.front();
      for (std::size_t k = 0; k + 1 < r->nvars(); ++k) EXPECT_EQ(last.lt()[k], 0u);
      EXPECT_LE(last.degree(), sol.degree);
      for (std::size_t v = 0; v < r->nvars(); ++v) {
        Polynomial h = min_poly_var(reduced_groebner_basis(F), v);
        for (const auto& pt : sol.points) EXPECT_EQ(h.evaluate(pt), 0u);
      }
    }
  }
}
