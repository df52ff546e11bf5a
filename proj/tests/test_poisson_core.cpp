#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "pq/algebra_an.hpp"
#include "pq/error.hpp"

using namespace pq;
using pqtest::c;
using pqtest::v;

namespace {

// Example algebra: base k[b,c], alpha = -2b d/db - 2c d/dc, beta = -alpha,
// c = 0, u = 4bc, new variables a (first) and d (second).
DoubleExtensionSpec example_one() {
  auto s = make_varspec({"b", "c"});
  PoissonStructure base(s, {});
  Derivation alpha = diagonal_derivation(s, {-2, -2});
  Derivation beta = diagonal_derivation(s, {2, 2});
  DoubleExtensionSpec spec{base, alpha, beta, 0, 4 * (v(s, "b") * v(s, "c")), Rational(-4)};
  spec.y_name = "a";
  spec.x_name = "d";
  return spec;
}

PoissonStructure a1_of_cfg_a() {
  return build_an(cfg_a().truncated(1));
}

}  // namespace

TEST(Bracket, CfgAExamples) {
  auto a = build_an(cfg_a());
  auto s = a.spec();
  EXPECT_EQ(bracket(a, v(s, "x1"), v(s, "y1")), 5 * (v(s, "y1") * v(s, "x1")));
  EXPECT_EQ(bracket(a, v(s, "x2"), v(s, "y2")), 7 * (v(s, "y2") * v(s, "x2")) + 3 * (v(s, "y1") * v(s, "x1")));
  EXPECT_TRUE(jacobiator(a, v(s, "y1"), v(s, "x1"), v(s, "x2")).is_zero());
}

TEST(Bracket, RejectsForeignOperands) {
  auto a = build_an(cfg_a());
  auto other = an_varspec(1);
  EXPECT_THROW(bracket(a, v(other, "y1"), a.generator(0)), VarSpecMismatch);
}

TEST(Bracket, MatchesLeibnizOracle) {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 3; ++n) {
    auto a = build_an(PoissonParams::random(n, rng));
    for (int t = 0; t < 100; ++t) {
      auto f = pqtest::random_poly(a.spec(), rng, 4), g = pqtest::random_poly(a.spec(), rng, 4);
      ASSERT_EQ(bracket(a, f, g), pqtest::leibniz_bracket(a, f, g));
    }
  }
}

TEST(Bracket, RandomAxioms) {
  std::mt19937_64 rng(2);
  int trials = 0;
  for (int n = 1; n <= 3; ++n) {
    auto a = build_an(PoissonParams::random(n, rng));
    for (int t = 0; t < 334; ++t, ++trials) {
      auto f = pqtest::random_poly(a.spec(), rng, 4, 3), g = pqtest::random_poly(a.spec(), rng, 4, 3),
           h = pqtest::random_poly(a.spec(), rng, 4, 3);
      ASSERT_EQ(bracket(a, f, g), -bracket(a, g, f));
      ASSERT_TRUE(bracket(a, f, f).is_zero());
      ASSERT_EQ(bracket(a, f * g, h), f * bracket(a, g, h) + g * bracket(a, f, h));
      ASSERT_TRUE(jacobiator(a, f, g, h).is_zero());
    }
  }
  EXPECT_GE(trials, 1000);
}

TEST(Jacobi, CorruptedTableFails) {
  auto a = build_an(cfg_a());
  auto table = a.table();
  table[{0, 1}] = v(a.spec(), "y2");
  PoissonStructure bad(a.spec(), table);
  EXPECT_FALSE(jacobi_check(bad));
  EXPECT_THROW(bad.validated(), VerificationFailure);
}

TEST(OreExtend, SingleVariableBase) {
  auto s = make_varspec({"y1"});
  PoissonStructure k_y(s, {});
  auto ext = ore_extend(k_y, diagonal_derivation(s, {-5}), Derivation(s), "x1");
  EXPECT_TRUE(ext.same_table(a1_of_cfg_a()));
}

TEST(OreExtend, TrivialExtension) {
  auto a = build_an(cfg_a());
  auto ext = ore_extend(a, Derivation(a.spec()), Derivation(a.spec()), "t");
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(ext.entry(i, a.size()).is_zero());
  EXPECT_TRUE(jacobi_check(ext));
}

TEST(OreExtend, HamiltonianDeltaAccepted) {
  // k[y,x] with {y,x} = 1, alpha = 0, delta(y) = 1, delta(x) = 0: delta is
  // the Hamiltonian {-, x}, so the compatibility residual vanishes.
  auto s = make_varspec({"y", "x"});
  PoissonStructure a(s, {{{0, 1}, c(s, 1)}});
  Derivation delta(s, {c(s, 1), LaurentPoly(s)});
  EXPECT_TRUE(ore_residuals(a, Derivation(s), delta).empty());
  auto ext = ore_extend(a, Derivation(s), delta, "t");
  EXPECT_TRUE(jacobi_check(ext));
}

TEST(OreExtend, IncompatibleDeltaRejected) {
  auto s = make_varspec({"y", "x"});
  PoissonStructure a(s, {{{0, 1}, c(s, 1)}});
  Derivation delta(s, {v(s, "y"), LaurentPoly(s)});
  try {
    ore_extend(a, Derivation(s), delta, "t");
    FAIL() << "expected a compatibility failure";
  } catch (const CompatibilityError& e) {
    EXPECT_EQ(e.pair(), "(y, x)");
    EXPECT_EQ(e.residual(), c(s, -1));
  }
}

TEST(OreExtend, NonDerivationAlphaRejected) {
  auto a = build_an(cfg_a());
  Derivation d(a.spec());
  d.set_image(0, v(a.spec(), "x1"));
  EXPECT_FALSE(derivation_check(a, d));
  EXPECT_THROW(ore_extend(a, d, Derivation(a.spec()), "t"), CompatibilityError);
}

TEST(OreExtend, MonomialBracketFormula) {
  // Second step of level 2 in CFG-A: base A_1[y2], {a,x2} = beta'(a) x2 + delta(a).
  auto lv = iterated_presentation(cfg_a()).levels[1];
  auto with_y = ore_extend(lv.base, lv.alpha, Derivation(lv.base.spec()), "y2");
  auto ys = with_y.spec();
  Derivation beta_p(ys);
  for (std::size_t i = 0; i < lv.base.size(); ++i) beta_p.set_image(i, lv.beta.image(i).rebase(ys));
  beta_p.set_image(2, lv.c * v(ys, "y2"));
  auto full = ore_extend(with_y, beta_p, lv.delta, "x2");
  auto fs = full.spec();
  auto x = v(fs, "x2");
  std::mt19937_64 rng(4);
  for (int t = 0; t < 60; ++t) {
    auto a = pqtest::random_poly(ys, rng, 3, 3), b = pqtest::random_poly(ys, rng, 3, 3);
    int i = static_cast<int>(rng() % 4), j = static_cast<int>(rng() % 4);
    auto lhs = bracket(full, a.rebase(fs) * x.pow(i), b.rebase(fs) * x.pow(j));
    auto rhs = (bracket(with_y, a, b) + j * (b * beta_p(a)) - i * (a * beta_p(b))).rebase(fs) * x.pow(i + j);
    if (i + j > 0) rhs += (j * (b * lv.delta(a)) - i * (a * lv.delta(b))).rebase(fs) * x.pow(i + j - 1);
    ASSERT_EQ(lhs, rhs);
  }
}

TEST(DoubleExtend, ExampleOne) {
  auto spec = example_one();
  auto e = double_extend(spec);
  auto s = e.spec();
  auto a = v(s, "a"), b = v(s, "b"), cc = v(s, "c"), d = v(s, "d");
  EXPECT_EQ(bracket(e, b, a), -2 * (b * a));
  EXPECT_EQ(bracket(e, cc, a), -2 * (cc * a));
  EXPECT_EQ(bracket(e, b, d), 2 * (b * d));
  EXPECT_EQ(bracket(e, cc, d), 2 * (cc * d));
  EXPECT_EQ(bracket(e, a, d), 4 * (b * cc));
  EXPECT_TRUE(bracket(e, b, cc).is_zero());
  EXPECT_TRUE(jacobi_check(e));
}

TEST(DoubleExtend, WeylFromField) {
  auto s = make_varspec({});
  DoubleExtensionSpec spec{PoissonStructure(s, {}), Derivation(s), Derivation(s), 0, c(s, 1), std::nullopt};
  auto e = double_extend(spec);
  EXPECT_EQ(bracket(e, e.generator("y"), e.generator("x")), c(e.spec(), 1));
}

TEST(DoubleExtend, TorusCase) {
  auto s = make_varspec({"t"});
  DoubleExtensionSpec spec{PoissonStructure(s, {}), Derivation(s), Derivation(s), 1, LaurentPoly(s), std::nullopt};
  auto e = double_extend(spec);
  auto y = e.generator("y"), x = e.generator("x"), t = e.generator("t");
  EXPECT_EQ(bracket(e, y, x), y * x);
  EXPECT_TRUE(bracket(e, t, y).is_zero());
  EXPECT_TRUE(bracket(e, t, x).is_zero());
}

TEST(DoubleExtend, ViolationsNamed) {
  auto spec = example_one();
  spec.u = 4 * v(spec.base.spec(), "b");  // alpha(u) = -2u, not d u
  EXPECT_THROW(double_extend(spec), InvalidArgument);
  spec = example_one();
  spec.d = Rational(0);
  spec.c = 0;
  EXPECT_THROW(double_extend(spec), InvalidArgument);
}

TEST(NormalElement, ExampleOne) {
  auto spec = example_one();
  auto e = double_extend(spec);
  auto s = e.spec();
  auto z = normal_element(spec, e);
  EXPECT_EQ(z, -4 * (v(s, "a") * v(s, "d")) + 4 * (v(s, "b") * v(s, "c")));
  auto gamma = is_poisson_normal(e, z);
  ASSERT_TRUE(gamma.has_value());
  EXPECT_TRUE((*gamma)[s->index_of("b")].is_zero());
  EXPECT_TRUE((*gamma)[s->index_of("a")].is_zero());
  // {a, z} = (alpha+beta)(a) z on base generators, {y,z} = c y z, {x,z} = -c x z.
  for (const char* g : {"b", "c", "a", "d"}) EXPECT_TRUE(bracket(e, v(s, g), z).is_zero()) << g;
}

TEST(NormalElement, OmegaTwoInCfgA) {
  auto a = build_an(cfg_a());
  auto s = a.spec();
  auto gamma = is_poisson_normal(a, omega(cfg_a(), 2));
  ASSERT_TRUE(gamma.has_value());
  EXPECT_EQ((*gamma)[0], -5 * v(s, "y1"));
  EXPECT_EQ((*gamma)[1], 5 * v(s, "x1"));
  EXPECT_EQ((*gamma)[2], -7 * v(s, "y2"));
  EXPECT_EQ((*gamma)[3], 7 * v(s, "x2"));
}

TEST(NormalElement, NotNormal) {
  auto a = build_an(cfg_a());
  EXPECT_FALSE(is_poisson_normal(a, v(a.spec(), "y1") + v(a.spec(), "x2")).has_value());
  EXPECT_THROW(is_poisson_normal(a, LaurentPoly(a.spec())), InvalidArgument);
}

TEST(Localize, InverseBracket) {
  auto loc = localize(a1_of_cfg_a(), {"y1"});
  auto s = loc.spec();
  EXPECT_EQ(bracket(loc, v(s, "y1").pow(-1), v(s, "x1")), 5 * (v(s, "y1").pow(-1) * v(s, "x1")));
  EXPECT_THROW(localize(loc, {"q"}), UnknownVariable);
  EXPECT_TRUE(localize(loc, {}).same_table(loc));
}

TEST(Localize, QuotientRuleFormula) {
  auto loc = localize(build_an(cfg_a()), {"y1", "y2"});
  auto s = loc.spec();
  EXPECT_TRUE(jacobi_check(loc));
  std::mt19937_64 rng(8);
  auto base = an_varspec(2);
  for (int t = 0; t < 100; ++t) {
    auto a = pqtest::random_poly(base, rng, 3, 3).rebase(s), b = pqtest::random_poly(base, rng, 3, 3).rebase(s);
    auto sv = v(s, "y1").pow(1 + static_cast<int>(rng() % 2)), tv = v(s, "y2").pow(1 + static_cast<int>(rng() % 2));
    auto lhs = bracket(loc, a * sv.monomial_inverse(), b * tv.monomial_inverse());
    auto num = bracket(loc, a, b) * sv * tv - bracket(loc, a, tv) * b * sv - bracket(loc, sv, b) * a * tv +
               bracket(loc, sv, tv) * a * b;
    ASSERT_EQ(lhs, num * sv.pow(2).monomial_inverse() * tv.pow(2).monomial_inverse());
    ASSERT_TRUE(jacobiator(loc, a * sv.monomial_inverse(), b, tv.monomial_inverse()).is_zero());
  }
}

TEST(Derivations, KElementAndHamiltonian) {
  auto a = build_an(cfg_a());
  EXPECT_TRUE(derivation_check(a, diagonal_derivation(a.spec(), {1, 1, 1, 1})));
  EXPECT_TRUE(derivation_check(a, hamiltonian(a, v(a.spec(), "y1"))));
  std::mt19937_64 rng(6);
  EXPECT_TRUE(derivation_check(a, hamiltonian(a, pqtest::random_poly(a.spec(), rng, 3))));
}

TEST(DoubleExtend, NormalElementEigenEquations) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 10; ++t) {
    auto p = PoissonParams::random(3, rng);
    auto r = level_normality_check(p);
    ASSERT_TRUE(r.ok()) << r.first_failure()->name;
  }
}

TEST(OreExtend, SwapOrderMatches) {
  // A[y; alpha][x; beta] with {y,x} = c y x against A[x; beta][y; alpha'] with alpha'(x) = -c x.
  auto lv = iterated_presentation(cfg_a()).levels[1];
  const auto& base = lv.base;
  auto bs = base.spec();
  auto yx = ore_extend(base, lv.alpha, Derivation(bs), "y2");
  Derivation beta_y(yx.spec());
  for (std::size_t i = 0; i < base.size(); ++i) beta_y.set_image(i, lv.beta.image(i).rebase(yx.spec()));
  beta_y.set_image(2, lv.c * v(yx.spec(), "y2"));
  auto first = ore_extend(yx, beta_y, Derivation(yx.spec()), "x2");

  auto xb = ore_extend(base, lv.beta, Derivation(bs), "x2");
  Derivation alpha_x(xb.spec());
  for (std::size_t i = 0; i < base.size(); ++i) alpha_x.set_image(i, lv.alpha.image(i).rebase(xb.spec()));
  alpha_x.set_image(2, -lv.c * v(xb.spec(), "x2"));
  auto second = ore_extend(xb, alpha_x, Derivation(xb.spec()), "y2");
  EXPECT_TRUE(first.same_table(second));
}
