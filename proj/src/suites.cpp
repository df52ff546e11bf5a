#include "pq/suites.hpp"

#include "pq/correspondence.hpp"
#include "pq/poisson.hpp"
#include "pq/reduction.hpp"

namespace pq {

LaurentPoly random_polynomial(const VarSpecPtr& spec, std::mt19937_64& rng, int max_degree, int max_terms) {
  std::uniform_int_distribution<int> coef(-4, 4), nterms(1, max_terms), deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, spec->size() - 1);
  LaurentPoly f(spec);
  int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    Monomial m(spec->size());
    for (int k = deg(rng); k > 0; --k) m[pick(rng)] += 1;
    if (int a = coef(rng)) f.add_term(m, a);
  }
  return f;
}

CheckReport suite_jacobi(const PoissonParams& params) {
  CheckReport r{"jacobi", {}};
  auto s = build_an(params);
  std::size_t d = s.size();
  bool antisym = true;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (!(s.entry(i, j) == -s.entry(j, i))) antisym = false;
  r.add("antisymmetry", antisym);
  // Leibniz on generator products: {a b, c} = a {b, c} + {a, c} b.
  bool leibniz = true;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        auto a = s.generator(i), b = s.generator(j), c = s.generator(k);
        if (!(bracket(s, a * b, c) == a * bracket(s, b, c) + bracket(s, a, c) * b)) leibniz = false;
      }
  r.add("leibniz", leibniz);
  auto fail = find_jacobi_failure(s);
  r.add("jacobi", !fail, fail ? fail->value.str() : std::string{});
  return r;
}

CheckReport suite_confluence(const PoissonParams& params, const std::vector<AdmissibleSet>& ts, int samples,
                             std::uint64_t seed) {
  CheckReport r{"confluence", {}};
  std::mt19937_64 rng(seed);
  auto spec = an_varspec(params.n);
  for (const auto& t : ts) {
    auto rules = quotient_system(params, t);
    std::string bad;
    for (int k = 0; k < samples && bad.empty(); ++k) {
      auto f = random_polynomial(spec, rng, 4);
      auto nf = reduce(f, rules);
      if (!is_normal_form(nf, rules) || !(reduce_randomized(f, rules, rng) == nf)) bad = f.str();
    }
    r.add(t.str(), bad.empty(), bad.empty() ? std::string{} : "diverging input " + bad);
  }
  return r;
}

CheckReport suite_kstable(const PoissonParams& params, const std::vector<AdmissibleSet>& ts) {
  CheckReport r{"kstable", {}};
  auto a = build_an(params);
  auto basis = k_basis(params.n);
  for (const auto& t : ts) {
    auto rules = quotient_system(params, t);
    std::string bad;
    for (const auto& g : t.members()) {
      auto gen = g.kind == GenKind::Omega ? omega(params, g.index) : LaurentPoly::variable(a.spec(), g.str());
      if (!reduce(gen, rules).is_zero()) bad = g.str() + " not in ideal";
      for (std::size_t k = 0; k < a.size() && bad.empty(); ++k) {
        auto res = reduce(bracket(a, gen, a.generator(k)), rules);
        if (!res.is_zero()) bad = "{" + g.str() + ", " + a.spec()->name(k) + "} -> " + res.str();
      }
      for (const auto& h : basis) {
        if (!bad.empty()) break;
        auto res = reduce(k_action(params, h, gen), rules);
        if (!res.is_zero()) bad = "K-derivation of " + g.str() + " -> " + res.str();
      }
      if (!bad.empty()) break;
    }
    r.add(t.str(), bad.empty(), bad);
  }
  return r;
}

CheckReport suite_associativity(const QuantumParams& params, int samples, std::uint64_t seed, int max_degree) {
  CheckReport r{"associativity", {}};
  std::mt19937_64 rng(seed);
  QuantumAlgebra k(params);
  std::string bad;
  for (int s = 0; s < samples && bad.empty(); ++s) {
    NCElement f(random_polynomial(k.spec(), rng, max_degree, 2)), g(random_polynomial(k.spec(), rng, max_degree, 2)),
        h(random_polynomial(k.spec(), rng, max_degree, 2));
    if (!(k.multiply(k.multiply(f, g), h) == k.multiply(f, k.multiply(g, h))))
      bad = "(" + f.str() + ")(" + g.str() + ")(" + h.str() + ")";
  }
  r.add(std::to_string(samples) + " random triples", bad.empty(), bad);
  // x_i y_i = q_i y_i x_i + Omega_{i-1} verbatim.
  for (int i = 1; i <= params.n; ++i) {
    auto y = k.generator(y_index(i)), x = k.generator(x_index(i));
    auto lhs = k.multiply(x, y);
    auto rhs = NCElement(LaurentPoly::term(k.spec(), Monomial::unit(k.spec()->size(), y_index(i)) *
                                                         Monomial::unit(k.spec()->size(), x_index(i)),
                                           params.q_(i))) +
               k.omega(i - 1);
    r.add("x" + std::to_string(i) + " y" + std::to_string(i), lhs == rhs, lhs == rhs ? "" : lhs.str());
  }
  return r;
}

CheckReport suite_psi(const PoissonParams& params, const std::vector<AdmissibleSet>& ts) {
  CheckReport r{"psi", {}};
  for (const auto& t : ts) {
    auto v = verify_psi(params, t);
    const Check* f = v.first_failure();
    r.add(t.str(), !f, f ? f->name + ": " + f->detail : std::string{});
  }
  return r;
}

CheckReport suite_upsilon(const QuantumParams& params, const std::vector<AdmissibleSet>& ts) {
  CheckReport r{"upsilon", {}};
  for (const auto& t : ts) {
    auto v = verify_upsilon(params, t);
    const Check* f = v.first_failure();
    r.add(t.str(), !f, f ? f->name + ": " + f->detail : std::string{});
  }
  return r;
}

}  // namespace pq
