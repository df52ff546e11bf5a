#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "pq/laurent_poly.hpp"
#include "pq/poisson.hpp"

namespace pqtest {

using pq::LaurentPoly;
using pq::Monomial;
using pq::Rational;
using pq::VarSpecPtr;

inline LaurentPoly v(const VarSpecPtr& s, const std::string& name) { return LaurentPoly::variable(s, name); }
inline LaurentPoly c(const VarSpecPtr& s, const Rational& r) { return LaurentPoly(s, r); }

// Random polynomial with small integer coefficients; exponents may go
// negative on invertible variables.
inline LaurentPoly random_poly(const VarSpecPtr& s, std::mt19937_64& rng, int max_degree = 3, int max_terms = 4) {
  std::uniform_int_distribution<int> coef(-4, 4), nterms(1, max_terms), deg(0, max_degree);
  LaurentPoly f(s);
  int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    Monomial m(s->size());
    int budget = deg(rng);
    for (int k = 0; k < budget; ++k) {
      std::size_t var = std::uniform_int_distribution<std::size_t>(0, s->size() - 1)(rng);
      m[var] += (s->invertible(var) && rng() % 4 == 0) ? -1 : 1;
    }
    int a = coef(rng);
    if (a) f.add_term(m, a);
  }
  return f;
}

inline LaurentPoly random_nonzero(const VarSpecPtr& s, std::mt19937_64& rng, int max_degree = 3, int max_terms = 4) {
  for (;;) {
    LaurentPoly f = random_poly(s, rng, max_degree, max_terms);
    if (!f.is_zero()) return f;
  }
}

// Evaluation at a rational point; a ring homomorphism independent of the
// multiplication code.
inline Rational eval(const LaurentPoly& f, const std::vector<Rational>& point) {
  Rational total = 0;
  for (const auto& [m, a] : f.terms()) {
    Rational t = a;
    for (std::size_t i = 0; i < m.size(); ++i) t *= point[i].pow(m[i]);
    total += t;
  }
  return total;
}

inline std::vector<Rational> random_point(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 5);
  std::vector<Rational> p;
  for (std::size_t i = 0; i < n; ++i) p.emplace_back(num(rng) * (rng() % 2 ? 1 : -1), den(rng));
  return p;
}

// {m1, m2} by peeling one variable at a time with the Leibniz rule, using
// only the generator table. Polynomial monomials only.
inline LaurentPoly leibniz_mono(const pq::PoissonStructure& s, const Monomial& a, const Monomial& b) {
  const auto& spec = s.spec();
  auto first_var = [](const Monomial& m) -> long {
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) return static_cast<long>(i);
    return -1;
  };
  long i = first_var(a), j = first_var(b);
  if (i < 0 || j < 0) return LaurentPoly(spec);
  Monomial ua = Monomial::unit(a.size(), static_cast<std::size_t>(i));
  Monomial ub = Monomial::unit(b.size(), static_cast<std::size_t>(j));
  Monomial ra = a / ua, rb = b / ub;
  if (!ra.is_one()) {
    // {g r, b} = g {r, b} + r {g, b}
    return LaurentPoly::term(spec, ua) * leibniz_mono(s, ra, b) + LaurentPoly::term(spec, ra) * leibniz_mono(s, ua, b);
  }
  if (!rb.is_one())
    return LaurentPoly::term(spec, ub) * leibniz_mono(s, a, rb) + LaurentPoly::term(spec, rb) * leibniz_mono(s, a, ub);
  return s.entry(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
}

inline LaurentPoly leibniz_bracket(const pq::PoissonStructure& s, const LaurentPoly& f, const LaurentPoly& g) {
  LaurentPoly out(s.spec());
  for (const auto& [m1, a] : f.terms())
    for (const auto& [m2, b] : g.terms()) out += (a * b) * leibniz_mono(s, m1, m2);
  return out;
}

}  // namespace pqtest
