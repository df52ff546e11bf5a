#include <gtest/gtest.h>

#include <map>
#include <random>

#include "helpers.hpp"
#include "pq/algebra_kn.hpp"
#include "pq/error.hpp"

using namespace pq;

namespace {

// Naive oracle: words over generator indices, rewritten by scanning for the
// first descent and applying the defining relation until every word is
// nondecreasing.
using Word = std::vector<std::size_t>;
using WordPoly = std::map<Word, Rational>;

int lvl(std::size_t v) { return static_cast<int>(v / 2) + 1; }

WordPoly word_normal_form(const QuantumParams& p, WordPoly f) {
  WordPoly done;
  while (!f.empty()) {
    auto it = f.begin();
    Word w = it->first;
    Rational c = it->second;
    f.erase(it);
    std::size_t pos = 0;
    while (pos + 1 < w.size() && w[pos] <= w[pos + 1]) ++pos;
    if (pos + 1 >= w.size()) {
      if ((done[w] += c).is_zero()) done.erase(w);
      continue;
    }
    std::size_t k = w[pos], j = w[pos + 1];
    int a = lvl(j), b = lvl(k);
    bool kx = k % 2, jx = j % 2;
    Rational coef;
    Word swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    if (a == b) {
      // x_a y_a = q_a y_a x_a + sum_{l<a} (q_l - p_l) y_l x_l
      coef = p.q_(a);
      for (int l = 1; l < a; ++l) {
        Word t(w.begin(), w.begin() + static_cast<long>(pos));
        t.push_back(static_cast<std::size_t>(2 * (l - 1)));
        t.push_back(static_cast<std::size_t>(2 * (l - 1) + 1));
        t.insert(t.end(), w.begin() + static_cast<long>(pos) + 2, w.end());
        if ((f[t] += c * (p.q_(l) - p.p_(l))).is_zero()) f.erase(t);
      }
    } else {
      // Read off y_a y_b = g y_b y_a, x_a y_b = p_b^{-1} g y_b x_a,
      // y_a x_b = q_a^{-1} g^{-1} x_b y_a, x_a x_b = q_a p_b^{-1} g x_b x_a
      // solved for the word with the larger generator first.
      Rational g = p.g(a, b);
      if (!kx && !jx) coef = g.inverse();
      else if (!kx && jx) coef = p.p_(b).inverse() * g;
      else if (kx && !jx) coef = p.q_(a) * g;
      else coef = p.p_(b) * (p.q_(a) * g).inverse();
    }
    if ((f[swapped] += c * coef).is_zero()) f.erase(swapped);
  }
  return done;
}

WordPoly to_words(const NCElement& e) {
  WordPoly out;
  for (const auto& [m, c] : e.pbw.terms()) {
    Word w;
    for (std::size_t v = 0; v < m.size(); ++v)
      for (int k = 0; k < m[v]; ++k) w.push_back(v);
    out[w] = c;
  }
  return out;
}

WordPoly word_product(const WordPoly& a, const WordPoly& b) {
  WordPoly out;
  for (const auto& [u, x] : a)
    for (const auto& [v, y] : b) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      if ((out[w] += x * y).is_zero()) out.erase(w);
    }
  return out;
}

NCElement random_element(const QuantumAlgebra& k, std::mt19937_64& rng, int max_degree, int max_terms) {
  return NCElement(pqtest::random_poly(k.spec(), rng, max_degree, max_terms));
}

}  // namespace

TEST(NcMultiply, CfgQExamples) {
  QuantumAlgebra k(cfg_q());
  auto y1 = k.generator("y1"), x1 = k.generator("x1"), y2 = k.generator("y2"), x2 = k.generator("x2");
  EXPECT_EQ(k.multiply(x1, y1), 4 * k.multiply(y1, x1));
  EXPECT_EQ(k.multiply(x2, y2), 32 * k.multiply(y2, x2) + 2 * k.multiply(y1, x1));
  EXPECT_EQ(k.multiply(y2, y1), Rational(1, 2) * k.multiply(y1, y2));
  EXPECT_EQ(k.multiply(y1, x1).str(), "y1*x1");
}

TEST(NcMultiply, CommutatorRelationVerbatim) {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 3; ++n) {
    auto p = QuantumParams::random(n, rng);
    QuantumAlgebra k(p);
    for (int i = 1; i <= n; ++i) {
      auto yi = k.generator(y_index(i)), xi = k.generator(x_index(i));
      EXPECT_EQ(k.multiply(xi, yi), p.q_(i) * k.multiply(yi, xi) + k.omega(i - 1));
    }
  }
}

TEST(NcMultiply, MatchesWordOracle) {
  std::mt19937_64 rng(2);
  for (int n = 1; n <= 3; ++n) {
    auto p = QuantumParams::random(n, rng);
    QuantumAlgebra k(p);
    for (int t = 0; t < 60; ++t) {
      auto f = random_element(k, rng, 3, 3), g = random_element(k, rng, 3, 3);
      auto expected = word_normal_form(p, word_product(to_words(f), to_words(g)));
      ASSERT_EQ(to_words(k.multiply(f, g)), expected);
    }
  }
}

TEST(NcMultiply, AssociativityRandom) {
  std::mt19937_64 rng(3);
  int trials = 0;
  for (int n = 1; n <= 3; ++n) {
    auto p = QuantumParams::random(n, rng);
    QuantumAlgebra k(p);
    for (int t = 0; t < 100; ++t, ++trials) {
      auto f = random_element(k, rng, 4, 2), g = random_element(k, rng, 4, 2), h = random_element(k, rng, 4, 2);
      ASSERT_EQ(k.multiply(k.multiply(f, g), h), k.multiply(f, k.multiply(g, h)));
    }
  }
}

TEST(NcMultiply, DegreeFiltration) {
  std::mt19937_64 rng(4);
  auto p = QuantumParams::random(3, rng);
  QuantumAlgebra k(p);
  auto s = s_matrix(p);
  QTorus torus(s, an_varspec(3)->names(), {}, {});
  for (int t = 0; t < 100; ++t) {
    auto u = pqtest::random_poly(k.spec(), rng, 4, 1), v = pqtest::random_poly(k.spec(), rng, 4, 1);
    if (u.is_zero() || v.is_zero()) continue;
    auto prod = k.multiply(NCElement(u), NCElement(v));
    ASSERT_LE(prod.pbw.degree(), u.degree() + v.degree());
    // Leading term agrees with the torus product; the Omega tails only add
    // smaller monomials of the same degree.
    auto twisted = torus.multiply(u.rebase(torus.spec()), v.rebase(torus.spec())).rebase(k.spec());
    ASSERT_EQ(prod.pbw.leading(), twisted.leading());
  }
}

TEST(NcMultiply, BudgetAndMismatch) {
  QuantumAlgebra k(cfg_q());
  auto x2 = k.generator("x2"), y1 = k.generator("y1");
  EXPECT_THROW(k.multiply(k.pow(x2, 3), k.pow(y1, 3), 2), StepBudgetExceeded);
  QuantumAlgebra other(QuantumParams{1, {{1}}, {2}, {4}});
  EXPECT_THROW(k.multiply(x2, other.generator("x1")), VarSpecMismatch);
}

TEST(QuantumParamsTest, Validation) {
  auto p = cfg_q();
  p.q[0] = p.p[0];
  EXPECT_THROW(QuantumAlgebra{p}, InvalidParams);
  p = cfg_q();
  p.q[0] = -p.p[0];
  EXPECT_THROW(QuantumAlgebra{p}, InvalidParams);
  p = cfg_q();
  p.gamma[1][0] = 2;
  EXPECT_THROW(QuantumAlgebra{p}, InvalidParams);
  p = cfg_q();
  p.gamma[0][1] = 0;
  EXPECT_THROW(QuantumAlgebra{p}, InvalidParams);
}

TEST(OmegaQ, Values) {
  auto s = an_varspec(2);
  auto om = omega_q(cfg_q(), 2);
  EXPECT_EQ(om.pbw, 2 * (pqtest::v(s, "y1") * pqtest::v(s, "x1")) + 24 * (pqtest::v(s, "y2") * pqtest::v(s, "x2")));
  EXPECT_TRUE(omega_q(cfg_q(), 1).pbw.is_monomial());
  EXPECT_THROW(omega_q(cfg_q(), 0), InvalidArgument);
  EXPECT_THROW(omega_q(cfg_q(), 3), InvalidArgument);
}

TEST(OmegaQ, NormalityLambda) {
  auto r = normality_check(cfg_q(), 1);
  EXPECT_TRUE(r.report.ok());
  // Omega1 y1 = y1 x1 y1 = q1 y1 y1 x1, so the scalar is q1.
  EXPECT_EQ(r.lambda[0], Rational(4));
  EXPECT_EQ(r.lambda[1], Rational(1, 4));
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 3; ++n) {
    auto p = QuantumParams::random(n, rng);
    for (int i = 1; i <= n; ++i) EXPECT_TRUE(normality_check(p, i).report.ok());
  }
}

TEST(SMatrix, Entries) {
  auto s = s_matrix(cfg_q());
  EXPECT_EQ(s[0][1], Rational(1, 4));
  EXPECT_EQ(s[1][2], Rational(4));
  EXPECT_EQ(s[0][2], Rational(2));
  EXPECT_EQ(s[0][3], Rational(1, 8));
  EXPECT_EQ(s[1][3], Rational(1));
  std::mt19937_64 rng(6);
  auto r = s_matrix(QuantumParams::random(3, rng));
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) EXPECT_TRUE((r[i][j] * r[j][i]).is_one());
}

TEST(QTorusTest, Examples) {
  auto t = qtorus(cfg_q(), {}, {});
  auto y1 = t.variable("Y1"), x1 = t.variable("X1");
  EXPECT_EQ(t.multiply(x1, y1), 4 * t.multiply(y1, x1));

  auto killed = qtorus(cfg_q(), {"Y1"}, {});
  EXPECT_TRUE(killed.multiply(killed.variable("Y1"), killed.variable("X2")).is_zero());

  auto inv = qtorus(cfg_q(), {}, {"Y2"});
  auto y2inv = inv.inverse(inv.variable("Y2"));
  auto iy1 = inv.variable("Y1");
  EXPECT_EQ(inv.multiply(y2inv, iy1), 2 * inv.multiply(iy1, y2inv));
  EXPECT_EQ(inv.multiply(y2inv, inv.variable("Y2")), LaurentPoly(inv.spec(), 1));
  EXPECT_THROW(qtorus(cfg_q(), {"Y1"}, {"Y1"}), InvalidArgument);
  EXPECT_THROW(qtorus(cfg_q(), {"Z1"}, {}), UnknownVariable);
}

TEST(QTorusTest, TwistIsBicharacter) {
  std::mt19937_64 rng(7);
  auto p = QuantumParams::random(3, rng);
  std::set<std::string> all;
  auto names = an_varspec(3, "Y", "X");
  for (const auto& n : names->names()) all.insert(n);
  auto t = qtorus(p, {}, all);
  std::uniform_int_distribution<int> e(-3, 3);
  auto rnd = [&] {
    Monomial m(6);
    for (std::size_t i = 0; i < 6; ++i) m[i] = e(rng);
    return m;
  };
  for (int k = 0; k < 200; ++k) {
    auto u = rnd(), u2 = rnd(), w = rnd();
    ASSERT_EQ(t.twist(u * u2, w), t.twist(u, w) * t.twist(u2, w));
    ASSERT_EQ(t.twist(w, u * u2), t.twist(w, u) * t.twist(w, u2));
  }
}

TEST(QTorusTest, AssociativeWithInverses) {
  std::mt19937_64 rng(8);
  auto p = QuantumParams::random(2, rng);
  auto t = qtorus(p, {"X1"}, {"Y1", "Y2"});
  for (int k = 0; k < 100; ++k) {
    auto a = pqtest::random_poly(t.spec(), rng, 3, 2), b = pqtest::random_poly(t.spec(), rng, 3, 2),
         c = pqtest::random_poly(t.spec(), rng, 3, 2);
    ASSERT_EQ(t.multiply(t.multiply(a, b), c), t.multiply(a, t.multiply(b, c)));
  }
}
