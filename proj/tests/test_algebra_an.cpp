#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "pq/algebra_an.hpp"
#include "pq/error.hpp"

using namespace pq;
using pqtest::c;
using pqtest::v;

namespace {

LaurentPoly yx(const VarSpecPtr& s, int i) {
  return v(s, "y" + std::to_string(i)) * v(s, "x" + std::to_string(i));
}

}  // namespace

TEST(BuildAn, CfgAEntries) {
  auto a = build_an(cfg_a());
  auto s = a.spec();
  EXPECT_EQ(bracket(a, v(s, "y1"), v(s, "x2")), -6 * (v(s, "y1") * v(s, "x2")));
  EXPECT_EQ(bracket(a, v(s, "x1"), v(s, "x2")), 3 * (v(s, "x1") * v(s, "x2")));
  EXPECT_EQ(bracket(a, v(s, "y1"), v(s, "y2")), v(s, "y1") * v(s, "y2"));
  EXPECT_EQ(bracket(a, v(s, "x1"), v(s, "y2")), 2 * (v(s, "y2") * v(s, "x1")));
  EXPECT_TRUE(a.is_validated());
}

TEST(BuildAn, SingleLevel) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    auto p = PoissonParams::random(1, rng);
    auto a = build_an(p);
    ASSERT_LE(a.table().size(), 1u);
    EXPECT_EQ(a.entry(0, 1), -p.q[0] * yx(a.spec(), 1));
  }
}

TEST(BuildAn, JacobiOnCanonicalAndRandom) {
  EXPECT_TRUE(jacobi_check(build_an(cfg_a())));
  EXPECT_TRUE(jacobi_check(build_an(cfg_phi())));
  std::mt19937_64 rng(4);
  for (int n = 1; n <= 3; ++n)
    for (int t = 0; t < 20; ++t) EXPECT_TRUE(jacobi_check(build_an(PoissonParams::random(n, rng))));
}

TEST(BuildAn, InvalidParams) {
  auto p = cfg_a();
  p.q[1] = p.p[1];
  EXPECT_THROW(build_an(p), InvalidParams);
  p = cfg_a();
  p.gamma[1][0] = 1;
  EXPECT_THROW(build_an(p), InvalidParams);
  p = cfg_a();
  p.gamma[0][0] = 1;
  EXPECT_THROW(build_an(p), InvalidParams);
  p = cfg_a();
  p.p.pop_back();
  EXPECT_THROW(build_an(p), InvalidParams);
}

TEST(Iterated, LevelTwoImages) {
  auto pres = iterated_presentation(cfg_a());
  const auto& lv = pres.levels[1];
  auto bs = lv.base.spec();
  EXPECT_EQ(lv.alpha(v(bs, "y1")), v(bs, "y1"));
  EXPECT_EQ(lv.alpha(v(bs, "x1")), 2 * v(bs, "x1"));
  EXPECT_EQ(lv.beta(v(bs, "y1")), -6 * v(bs, "y1"));
  auto ds = lv.delta.spec();
  EXPECT_EQ(lv.delta(v(ds, "y2")), -3 * yx(ds, 1));
  EXPECT_EQ(lv.c, Rational(-7));
  EXPECT_EQ(lv.d, Rational(3));
  EXPECT_EQ(pres.omegas[0], LaurentPoly(an_varspec(2)));
}

TEST(Iterated, BaseCaseAndRebuild) {
  auto p = cfg_a().truncated(1);
  auto pres = iterated_presentation(p);
  ASSERT_EQ(pres.levels.size(), 1u);
  EXPECT_TRUE(pres.levels[0].u.is_zero());
  EXPECT_EQ(pres.levels[0].c, Rational(-5));
  EXPECT_TRUE(consistency_check(p).ok());
  EXPECT_TRUE(consistency_check(cfg_a()).ok());
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 3; ++n)
    for (int t = 0; t < 5; ++t) {
      auto r = consistency_check(PoissonParams::random(n, rng));
      ASSERT_TRUE(r.ok()) << r.first_failure()->name << " " << r.first_failure()->detail;
    }
}

TEST(Iterated, LevelNormality) {
  auto r = level_normality_check(cfg_a());
  EXPECT_TRUE(r.ok()) << r.first_failure()->name;
}

TEST(Omega, Values) {
  auto s = an_varspec(2);
  EXPECT_EQ(omega(cfg_a(), 2), 3 * yx(s, 1) + 4 * yx(s, 2));
  EXPECT_TRUE(omega(cfg_a(), 0).is_zero());
  EXPECT_THROW(omega(cfg_a(), 3), InvalidArgument);
  EXPECT_THROW(omega(cfg_a(), -1), InvalidArgument);
}

TEST(Omega, BracketExamples) {
  auto a = build_an(cfg_a());
  auto s = a.spec();
  auto o1 = omega(cfg_a(), 1), o2 = omega(cfg_a(), 2);
  EXPECT_EQ(bracket(a, v(s, "y2"), o1), -3 * (v(s, "y2") * o1));
  EXPECT_TRUE(bracket(a, o1, o2).is_zero());
  // Same value through the Leibniz oracle.
  EXPECT_EQ(pqtest::leibniz_bracket(a, v(s, "y2"), o1), -3 * (v(s, "y2") * o1));
}

TEST(Omega, IdentitiesRandom) {
  EXPECT_TRUE(verify_lemma_2_3(cfg_a()).ok());
  std::mt19937_64 rng(6);
  for (int n = 1; n <= 3; ++n)
    for (int t = 0; t < 10; ++t) {
      auto r = verify_lemma_2_3(PoissonParams::random(n, rng));
      ASSERT_TRUE(r.ok()) << r.first_failure()->name << ": " << r.first_failure()->detail;
    }
}

TEST(KAction, Examples) {
  auto p = cfg_a();
  auto s = an_varspec(2);
  EXPECT_EQ(k_action(p, {{1, 1, 1, 1}}, v(s, "y1") * v(s, "x2")), 2 * (v(s, "y1") * v(s, "x2")));
  EXPECT_TRUE(k_action(p, {{1, 2, 0, 3}}, v(s, "y2")).is_zero());
  EXPECT_THROW(k_action(p, {{1, 0, 1, 1}}, v(s, "y2")), InvalidArgument);
  EXPECT_THROW(k_action(p, {{1, 0}}, v(s, "y2")), InvalidArgument);
}

TEST(KAction, PoissonDerivations) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int n = 1; n <= 3; ++n) {
    auto p = PoissonParams::random(n, rng);
    auto a = build_an(p);
    for (const auto& h : k_basis(n)) {
      ASSERT_TRUE(h.in_k());
      ASSERT_TRUE(derivation_check(a, k_derivation(p, h)));
    }
    for (int t = 0; t < 10; ++t) {
      KElement h;
      int sum = d(rng);
      for (int i = 0; i < n; ++i) {
        int first = d(rng);
        h.h.push_back(first);
        h.h.push_back(sum - first);
      }
      ASSERT_TRUE(derivation_check(a, k_derivation(p, h)));
    }
  }
}

TEST(Eigendata, CfgA) {
  auto e = theorem_3_6_eigendata(cfg_a());
  EXPECT_EQ(e.f.h, (std::vector<Rational>{1, 2, 1, 2}));
  EXPECT_EQ(e.g.h, (std::vector<Rational>{-6, 3, -7, 4}));
  EXPECT_TRUE(e.report.ok()) << e.report.first_failure()->name;
  auto s = an_varspec(2);
  EXPECT_EQ(k_action(cfg_a(), e.g, v(s, "x2")), 4 * v(s, "x2"));
}

TEST(Eigendata, SingleLevelAndRandom) {
  auto p = cfg_a().truncated(1);
  auto e = theorem_3_6_eigendata(p);
  EXPECT_EQ(e.f.h, (std::vector<Rational>{1, p.p[0] - 1}));
  EXPECT_EQ(e.g.h, (std::vector<Rational>{-p.q[0], p.q[0] - p.p[0]}));
  EXPECT_TRUE(e.report.ok());
  std::mt19937_64 rng(8);
  for (int n = 1; n <= 3; ++n)
    for (int t = 0; t < 5; ++t) EXPECT_TRUE(theorem_3_6_eigendata(PoissonParams::random(n, rng)).report.ok());
}

TEST(RMatrix, Entries) {
  auto r = r_matrix(cfg_a());
  EXPECT_EQ(r[0][1], Rational(-5));
  EXPECT_EQ(r[1][2], Rational(2));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(r[i][j] + r[j][i], Rational(0));
}

TEST(RMatrix, LogCanonicalPartOfTable) {
  std::mt19937_64 rng(9);
  for (int n = 1; n <= 3; ++n) {
    auto p = PoissonParams::random(n, rng);
    auto a = build_an(p);
    auto r = r_matrix(p);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        auto mono = (a.generator(i) * a.generator(j)).leading().first;
        ASSERT_EQ(a.entry(i, j).coefficient(mono), r[i][j]);
      }
  }
}

TEST(QuotientSystem, Examples) {
  auto p = cfg_a();
  auto s = an_varspec(2);
  auto t1 = AdmissibleSet::from_literals(2, {"Omega1", "y1"});
  auto r1 = quotient_system(p, t1);
  ASSERT_EQ(r1.rules().size(), 1u);
  EXPECT_TRUE(reduce(omega(p, 1), r1).is_zero());

  auto t2 = AdmissibleSet::from_literals(2, {"Omega2"});
  auto r2 = quotient_system(p, t2);
  ASSERT_EQ(r2.rules().size(), 1u);
  EXPECT_EQ(r2.rules()[0].replacement, Rational(-3, 4) * yx(s, 1));
  EXPECT_TRUE(reduce(omega(p, 2), r2).is_zero());

  auto r0 = quotient_system(p, AdmissibleSet(2));
  EXPECT_TRUE(r0.empty());
  EXPECT_THROW(quotient_system(p, AdmissibleSet::from_literals(2, {"Omega1"})), InvalidArgument);
}

TEST(QuotientSystem, IdealPropertiesAllT) {
  std::mt19937_64 rng(10);
  for (int n = 1; n <= 3; ++n) {
    auto p = PoissonParams::random(n, rng);
    auto a = build_an(p);
    for (const auto& t : enumerate(n)) {
      auto rs = quotient_system(p, t);
      std::vector<LaurentPoly> gens;
      for (const auto& g : t.members())
        gens.push_back(g.kind == GenKind::Omega ? omega(p, g.index) : v(a.spec(), g.str()));
      for (const auto& g : gens) {
        ASSERT_TRUE(reduce(g, rs).is_zero()) << t.str();
        for (std::size_t k = 0; k < a.size(); ++k)
          ASSERT_TRUE(reduce(bracket(a, g, a.generator(k)), rs).is_zero()) << t.str();
        for (const auto& h : k_basis(n)) ASSERT_TRUE(reduce(k_action(p, h, g), rs).is_zero()) << t.str();
      }
      for (int trial = 0; trial < 30; ++trial) {
        auto f = pqtest::random_poly(a.spec(), rng, 4);
        auto nf = reduce(f, rs);
        ASSERT_EQ(reduce_randomized(f, rs, rng), nf) << t.str();
      }
    }
  }
}
