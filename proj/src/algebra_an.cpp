#include "pq/algebra_an.hpp"

#include "pq/error.hpp"

namespace pq {

namespace {

LaurentPoly var(const VarSpecPtr& s, std::size_t i) { return LaurentPoly::variable(s, i); }

}  // namespace

void PoissonParams::validate() const {
  if (n < 1) throw InvalidParams("n must be a positive integer");
  const auto un = static_cast<std::size_t>(n);
  if (gamma.size() != un || p.size() != un || q.size() != un)
    throw InvalidParams("gamma must be n x n and p, q must have n entries");
  for (int i = 1; i <= n; ++i) {
    if (gamma[i - 1].size() != un) throw InvalidParams("gamma must be n x n");
    if (!g(i, i).is_zero()) throw InvalidParams("gamma must vanish on the diagonal");
    for (int j = i + 1; j <= n; ++j)
      if (!(g(i, j) == -g(j, i)))
        throw InvalidParams("gamma is not skew-symmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    if (p_(i) == q_(i)) throw InvalidParams("p_" + std::to_string(i) + " equals q_" + std::to_string(i));
  }
}

PoissonParams PoissonParams::truncated(int m) const {
  if (m < 0 || m > n) throw InvalidArgument("truncation index out of range");
  PoissonParams out;
  out.n = m;
  for (int i = 0; i < m; ++i) {
    out.gamma.emplace_back(gamma[i].begin(), gamma[i].begin() + m);
    out.p.push_back(p[i]);
    out.q.push_back(q[i]);
  }
  return out;
}

PoissonParams PoissonParams::random(int n, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> pick(-bound, bound);
  PoissonParams out;
  out.n = n;
  out.gamma.assign(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      out.gamma[i][j] = pick(rng);
      out.gamma[j][i] = -out.gamma[i][j];
    }
  for (int i = 0; i < n; ++i) {
    int a = pick(rng), b = pick(rng);
    while (a == b) b = pick(rng);
    out.p.push_back(a);
    out.q.push_back(b);
  }
  return out;
}

PoissonParams cfg_a() { return {2, {{0, 1}, {-1, 0}}, {2, 3}, {5, 7}}; }
PoissonParams cfg_phi() { return {2, {{0, 1}, {-1, 0}}, {1, 3}, {2, 5}}; }

LaurentPoly omega(const PoissonParams& params, int i) {
  if (i < 0 || i > params.n) throw InvalidArgument("Omega index out of range");
  VarSpecPtr s = an_varspec(params.n);
  LaurentPoly out(s);
  for (int k = 1; k <= i; ++k) out += (params.q_(k) - params.p_(k)) * (var(s, y_index(k)) * var(s, x_index(k)));
  return out;
}

PoissonStructure build_an(const PoissonParams& params) {
  params.validate();
  VarSpecPtr s = an_varspec(params.n);
  PoissonStructure::Table t;
  for (int i = 1; i <= params.n; ++i) {
    const LaurentPoly yi = var(s, y_index(i)), xi = var(s, x_index(i));
    t[{y_index(i), x_index(i)}] = -params.q_(i) * (yi * xi) - omega(params, i - 1);
    for (int j = i + 1; j <= params.n; ++j) {
      const LaurentPoly yj = var(s, y_index(j)), xj = var(s, x_index(j));
      const Rational& g = params.g(i, j);
      t[{y_index(i), y_index(j)}] = g * (yi * yj);
      t[{x_index(i), y_index(j)}] = (params.p_(j) - g) * (yj * xi);
      t[{y_index(i), x_index(j)}] = -(params.q_(i) + g) * (yi * xj);
      t[{x_index(i), x_index(j)}] = (params.q_(i) - params.p_(j) + g) * (xi * xj);
    }
  }
  return PoissonStructure(s, std::move(t)).validated();
}

DoubleExtensionSpec IteratedLevel::spec(const PoissonStructure& on_base) const {
  DoubleExtensionSpec out{on_base, alpha, beta, c, u, d};
  out.y_name = "y" + std::to_string(j);
  out.x_name = "x" + std::to_string(j);
  return out;
}

IteratedPresentation iterated_presentation(const PoissonParams& params) {
  params.validate();
  IteratedPresentation out;
  for (int i = 0; i <= params.n; ++i) out.omegas.push_back(omega(params, i));
  for (int j = 1; j <= params.n; ++j) {
    PoissonParams lower = params.truncated(j - 1);
    IteratedLevel lv;
    lv.j = j;
    VarSpecPtr bs = an_varspec(j - 1);
    lv.base = j == 1 ? PoissonStructure(bs, {}) : build_an(lower);
    lv.alpha = Derivation(bs);
    lv.beta = Derivation(bs);
    for (int i = 1; i < j; ++i) {
      const Rational& g = params.g(i, j);
      lv.alpha.set_image(y_index(i), g * var(bs, y_index(i)));
      lv.alpha.set_image(x_index(i), (params.p_(j) - g) * var(bs, x_index(i)));
      lv.beta.set_image(y_index(i), -(params.q_(i) + g) * var(bs, y_index(i)));
      lv.beta.set_image(x_index(i), (params.q_(i) - params.p_(j) + g) * var(bs, x_index(i)));
    }
    lv.c = -params.q_(j);
    lv.d = params.p_(j);
    lv.u = j == 1 ? LaurentPoly(bs) : -omega(lower, j - 1);
    std::vector<std::string> with_y = bs->names();
    with_y.push_back("y" + std::to_string(j));
    VarSpecPtr ys = make_varspec(with_y);
    lv.delta = Derivation(ys);
    lv.delta.set_image(ys->size() - 1, lv.u.rebase(ys));
    out.levels.push_back(std::move(lv));
  }
  return out;
}

CheckReport consistency_check(const PoissonParams& params) {
  CheckReport r{"iterated presentation rebuild", {}};
  auto pres = iterated_presentation(params);
  PoissonStructure direct = build_an(params);
  PoissonStructure rebuilt(an_varspec(0), {});
  for (const auto& lv : pres.levels) {
    try {
      rebuilt = double_extend(lv.spec(rebuilt));
    } catch (const Error& e) {
      r.add("level " + std::to_string(lv.j), false, e.what());
      return r;
    }
    PoissonStructure expected = build_an(params.truncated(lv.j));
    const VarSpec& vs = *expected.spec();
    bool level_ok = true;
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b) {
        LaurentPoly got = rebuilt.entry(a, b).rebase(expected.spec());
        if (!(got == expected.entry(a, b))) {
          level_ok = false;
          r.add("level " + std::to_string(lv.j) + " entry {" + vs.name(a) + ", " + vs.name(b) + "}", false,
                "rebuilt " + got.str() + " vs direct " + expected.entry(a, b).str());
        }
      }
    if (level_ok) r.add("level " + std::to_string(lv.j), true);
  }
  r.add("final table", rebuilt.same_table(direct));
  return r;
}

CheckReport level_normality_check(const PoissonParams& params) {
  CheckReport r{"normal element per level", {}};
  auto pres = iterated_presentation(params);
  for (const auto& lv : pres.levels) {
    const std::string tag = "level " + std::to_string(lv.j);
    DoubleExtensionSpec spec = lv.spec(lv.base);
    PoissonStructure ext = double_extend(spec);
    LaurentPoly z = normal_element(spec, ext);
    LaurentPoly expected_z = -omega(params.truncated(lv.j), lv.j);
    r.add(tag + ": z = -Omega_j", z == expected_z.rebase(ext.spec()), z.str());
    r.add(tag + ": z Poisson normal", is_poisson_normal(ext, z).has_value());
    for (std::size_t i = 0; i < lv.base.size(); ++i) {
      LaurentPoly a = ext.generator(i);
      LaurentPoly lhs = bracket(ext, a, z);
      LaurentPoly rhs = (lv.alpha.image(i) + lv.beta.image(i)).rebase(ext.spec()) * z;
      r.add(tag + ": {" + ext.spec()->name(i) + ", z} = (alpha+beta) z", lhs == rhs, (lhs - rhs).str());
    }
    LaurentPoly y = ext.generator(spec.y_name), x = ext.generator(spec.x_name);
    LaurentPoly ry = bracket(ext, y, z) - lv.c * (y * z);
    LaurentPoly rx = bracket(ext, x, z) + lv.c * (x * z);
    r.add(tag + ": {y, z} = c y z", ry.is_zero(), ry.str());
    r.add(tag + ": {x, z} = -c x z", rx.is_zero(), rx.str());
  }
  return r;
}

CheckReport verify_lemma_2_3(const PoissonParams& params) {
  CheckReport r{"Omega identities", {}};
  PoissonStructure a = build_an(params);
  const int n = params.n;
  VarSpecPtr s = a.spec();
  std::vector<LaurentPoly> om;
  for (int i = 0; i <= n; ++i) om.push_back(omega(params, i));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const Rational sy = i <= j ? -params.q_(i) : -params.p_(i);
      LaurentPoly yi = var(s, y_index(i)), xi = var(s, x_index(i));
      LaurentPoly ry = bracket(a, yi, om[j]) - sy * (yi * om[j]);
      LaurentPoly rx = bracket(a, xi, om[j]) + sy * (xi * om[j]);
      r.add("{y" + std::to_string(i) + ", Omega" + std::to_string(j) + "}", ry.is_zero(), ry.str());
      r.add("{x" + std::to_string(i) + ", Omega" + std::to_string(j) + "}", rx.is_zero(), rx.str());
    }
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      LaurentPoly v = bracket(a, om[i], om[j]);
      r.add("{Omega" + std::to_string(i) + ", Omega" + std::to_string(j) + "} = 0", v.is_zero(), v.str());
    }
  for (int i = 1; i <= n; ++i) {
    LaurentPoly yi = var(s, y_index(i)), xi = var(s, x_index(i));
    LaurentPoly b = bracket(a, xi, yi);
    LaurentPoly lo = b - params.q_(i) * (yi * xi) - om[i - 1];
    LaurentPoly hi = b - params.p_(i) * (yi * xi) - om[i];
    r.add("Omega" + std::to_string(i - 1) + " = {x_i, y_i} - q_i y_i x_i", lo.is_zero(), lo.str());
    r.add("Omega" + std::to_string(i) + " = {x_i, y_i} - p_i y_i x_i", hi.is_zero(), hi.str());
  }
  return r;
}

bool KElement::in_k() const {
  if (h.size() % 2) return false;
  for (std::size_t i = 2; i < h.size(); i += 2)
    if (!(h[i] + h[i + 1] == h[0] + h[1])) return false;
  return true;
}

Derivation k_derivation(const PoissonParams& params, const KElement& h) {
  if (h.h.size() != static_cast<std::size_t>(2 * params.n)) throw InvalidArgument("K element needs 2n entries");
  if (!h.in_k()) throw InvalidArgument("vector is not in K: pair sums h_{2i-1} + h_{2i} differ");
  return diagonal_derivation(an_varspec(params.n), h.h);
}

LaurentPoly k_action(const PoissonParams& params, const KElement& h, const LaurentPoly& f) {
  return k_derivation(params, h)(f);
}

std::vector<KElement> k_basis(int n) {
  std::vector<KElement> out;
  for (int i = 0; i < n; ++i) {
    KElement e{std::vector<Rational>(2 * n, 0)};
    e.h[2 * i] = 1;
    e.h[2 * i + 1] = -1;
    out.push_back(e);
  }
  KElement diag{std::vector<Rational>(2 * n, 0)};
  for (int i = 0; i < n; ++i) diag.h[2 * i] = 1;
  out.push_back(diag);
  return out;
}

EigenData theorem_3_6_eigendata(const PoissonParams& params) {
  params.validate();
  const int n = params.n;
  EigenData out;
  for (int i = 1; i < n; ++i) {
    const Rational& g = params.g(i, n);
    out.f.h.push_back(g);
    out.f.h.push_back(params.p_(n) - g);
    out.g.h.push_back(-params.q_(i) - g);
    out.g.h.push_back(params.q_(i) - params.p_(n) + g);
  }
  out.f.h.push_back(1);
  out.f.h.push_back(params.p_(n) - 1);
  out.g.h.push_back(-params.q_(n));
  out.g.h.push_back(params.q_(n) - params.p_(n));

  CheckReport& r = out.report;
  r.title = "eigendata";
  r.add("f in K", out.f.in_k());
  r.add("g in K", out.g.in_k());
  if (!r.ok()) return out;

  PoissonStructure a = build_an(params);
  VarSpecPtr s = a.spec();
  auto lv = iterated_presentation(params).levels.back();
  Derivation df = k_derivation(params, out.f), dg = k_derivation(params, out.g);
  r.add("f Poisson derivation", derivation_check(a, df));
  r.add("g Poisson derivation", derivation_check(a, dg));
  for (int i = 1; i < n; ++i)
    for (std::size_t v : {y_index(i), x_index(i)}) {
      const std::string name = s->name(v);
      r.add("f(" + name + ") = alpha_n(" + name + ")", df(var(s, v)) == lv.alpha.image(v).rebase(s));
      r.add("g(" + name + ") = beta_n(" + name + ")", dg(var(s, v)) == lv.beta.image(v).rebase(s));
    }
  LaurentPoly yn = var(s, y_index(n)), xn = var(s, x_index(n));
  r.add("f(y_n) = y_n", df(yn) == yn);
  r.add("g(y_n) = -q_n y_n", dg(yn) == -params.q_(n) * yn);
  r.add("g(x_n) = (q_n - p_n) x_n", dg(xn) == (params.q_(n) - params.p_(n)) * xn);
  return out;
}

Matrix r_matrix(const PoissonParams& params) {
  params.validate();
  const int n = params.n;
  Matrix r(2 * n, std::vector<Rational>(2 * n, 0));
  auto set = [&](std::size_t a, std::size_t b, const Rational& v) {
    r[a][b] = v;
    r[b][a] = -v;
  };
  for (int i = 1; i <= n; ++i) {
    set(y_index(i), x_index(i), -params.q_(i));
    for (int j = i + 1; j <= n; ++j) {
      const Rational& g = params.g(i, j);
      set(y_index(i), y_index(j), g);
      set(x_index(i), y_index(j), params.p_(j) - g);
      set(y_index(i), x_index(j), -(params.q_(i) + g));
      set(x_index(i), x_index(j), params.q_(i) - params.p_(j) + g);
    }
  }
  return r;
}

ReductionSystem quotient_system(const PoissonParams& params, const AdmissibleSet& t) {
  params.validate();
  if (t.n() != params.n) throw InvalidArgument("admissible set has the wrong n");
  if (!t.is_admissible()) throw InvalidArgument(t.str() + " is not admissible");
  VarSpecPtr s = an_varspec(params.n);
  const std::size_t nv = s->size();
  std::vector<RewriteRule> rules;
  for (int i = 1; i <= params.n; ++i) {
    if (t.y(i)) rules.push_back({Monomial::unit(nv, y_index(i)), LaurentPoly(s)});
    if (t.x(i)) rules.push_back({Monomial::unit(nv, x_index(i)), LaurentPoly(s)});
    if (t.omega(i) && !t.y(i) && !t.x(i)) {
      LaurentPoly rhs = -(params.q_(i) - params.p_(i)).inverse() * omega(params, i - 1);
      rhs = reduce(rhs, ReductionSystem(s, rules));
      rules.push_back({Monomial::unit(nv, y_index(i)) * Monomial::unit(nv, x_index(i)), rhs});
    }
  }
  return ReductionSystem(s, std::move(rules));
}

}  // namespace pq
