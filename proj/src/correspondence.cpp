#include "pq/correspondence.hpp"

#include <json.hpp>

#include "pq/error.hpp"

namespace pq {

namespace {

std::string yname(int i) { return "Y" + std::to_string(i); }
std::string xname(int i) { return "X" + std::to_string(i); }

void require_admissible(const AdmissibleSet& t, int n) {
  if (t.n() != n) throw InvalidArgument("admissible set has the wrong n");
  if (!t.is_admissible()) throw InvalidArgument(t.str() + " is not admissible");
}

// Drop terms touching a killed variable, then re-express by name.
LaurentPoly project_to(const VarSpecPtr& target, const std::set<std::string>& kill, const LaurentPoly& full) {
  const VarSpec& fs = *full.spec();
  LaurentPoly out(target);
  for (const auto& [m, c] : full.terms()) {
    Monomial mm(target->size());
    bool dead = false;
    for (std::size_t i = 0; i < fs.size() && !dead; ++i) {
      if (m[i] == 0) continue;
      if (kill.count(fs.name(i))) dead = true;
      else mm[target->index_of(fs.name(i))] = m[i];
    }
    if (!dead) out += LaurentPoly::term(target, mm, c);
  }
  return out;
}

// Log-canonical structure {a,b} = r_ab ab on the surviving variables.
PoissonStructure log_canonical_target(const Matrix& r, int n, const std::set<std::string>& kill,
                                      const std::set<std::string>& invert) {
  VarSpecPtr full = an_varspec(n, "Y", "X");
  std::vector<std::string> kept;
  std::vector<bool> inv;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < full->size(); ++i) {
    if (kill.count(full->name(i))) continue;
    kept.push_back(full->name(i));
    inv.push_back(invert.count(full->name(i)) > 0);
    idx.push_back(i);
  }
  VarSpecPtr spec = make_varspec(kept, inv);
  PoissonStructure::Table table;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      const Rational& coef = r[idx[a]][idx[b]];
      if (!coef.is_zero())
        table[{a, b}] = coef * (LaurentPoly::variable(spec, a) * LaurentPoly::variable(spec, b));
    }
  return PoissonStructure(spec, std::move(table));
}

std::string pair_name(const VarSpec& s, std::size_t a, std::size_t b) {
  return "{" + s.name(a) + ", " + s.name(b) + "}";
}

LaurentPoly source_generator(const PoissonParams& params, const GenRef& g) {
  if (g.kind == GenKind::Omega) return omega(params, g.index);
  return LaurentPoly::variable(an_varspec(params.n), g.str());
}

}  // namespace

const char* to_string(ImageCase c) {
  switch (c) {
    case ImageCase::Zero: return "zero";
    case ImageCase::Plain: return "plain";
    case ImageCase::TailOnly: return "tail_only";
    case ImageCase::Shifted: return "shifted";
  }
  return "";
}

std::vector<ImageCase> image_cases(const AdmissibleSet& t) {
  std::vector<ImageCase> out;
  for (int i = 1; i <= t.n(); ++i) {
    out.push_back(t.y(i) ? ImageCase::Zero : ImageCase::Plain);
    if (t.x(i)) out.push_back(ImageCase::Zero);
    else if (i == 1 || t.omega(i - 1)) out.push_back(ImageCase::Plain);
    else if (t.omega(i)) out.push_back(ImageCase::TailOnly);
    else out.push_back(ImageCase::Shifted);
  }
  return out;
}

Rational shift_coefficient(const std::vector<Rational>& p, const std::vector<Rational>& q, int i) {
  if (i < 2 || i > static_cast<int>(p.size())) throw InvalidArgument("shift coefficient needs 2 <= i <= n");
  return (q[i - 1] - p[i - 1]).inverse() * (q[i - 2] - p[i - 2]);
}

std::set<std::string> kill_set(const AdmissibleSet& t) {
  std::set<std::string> out;
  for (const auto& g : eta(t)) out.insert(g.target_str());
  return out;
}

std::set<std::string> invert_set(const AdmissibleSet& t) {
  std::set<std::string> out;
  for (const auto& g : derived_sets(t).u_t) out.insert(g.target_str());
  return out;
}

LaurentPoly PsiMap::apply(const LaurentPoly& f) const { return f.substitute(images, target.spec()); }

PsiMap psi_prime(const PoissonParams& params, const AdmissibleSet& t) {
  params.validate();
  require_admissible(t, params.n);
  PsiMap m;
  m.t = t;
  m.target = log_canonical_target(r_matrix(params), params.n, kill_set(t), invert_set(t));
  m.cases = image_cases(t);
  const auto& spec = m.target.spec();
  auto var = [&](const std::string& name) { return LaurentPoly::variable(spec, name); };
  for (int i = 1; i <= params.n; ++i) {
    m.images.push_back(m.cases[y_index(i)] == ImageCase::Zero ? LaurentPoly(spec) : var(yname(i)));
    LaurentPoly tail(spec);
    ImageCase c = m.cases[x_index(i)];
    if (c == ImageCase::TailOnly || c == ImageCase::Shifted)
      tail = shift_coefficient(params.p, params.q, i) *
             (var(yname(i)).monomial_inverse() * var(yname(i - 1)) * var(xname(i - 1)));
    switch (c) {
      case ImageCase::Zero: m.images.push_back(LaurentPoly(spec)); break;
      case ImageCase::Plain: m.images.push_back(var(xname(i))); break;
      case ImageCase::TailOnly: m.images.push_back(-tail); break;
      case ImageCase::Shifted: m.images.push_back(var(xname(i)) - tail); break;
    }
  }
  return m;
}

CheckReport verify_psi(const PoissonParams& params, const AdmissibleSet& t) {
  CheckReport r{"psi " + t.str(), {}};
  PsiMap m = psi_prime(params, t);
  PoissonStructure a = build_an(params);
  const VarSpec& s = *a.spec();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      LaurentPoly lhs = m.apply(a.entry(i, j));
      LaurentPoly rhs = bracket(m.target, m.images[i], m.images[j]);
      r.add(pair_name(s, i, j), lhs == rhs, lhs == rhs ? std::string() : "image " + lhs.str() + " vs " + rhs.str());
    }
  VarSpecPtr full = an_varspec(params.n, "Y", "X");
  auto kill = kill_set(t);
  for (int i = 1; i <= params.n; ++i) {
    LaurentPoly got = m.apply(omega(params, i));
    LaurentPoly want = project_to(m.target.spec(), kill,
                                  (params.q_(i) - params.p_(i)) * (LaurentPoly::variable(full, yname(i)) *
                                                                   LaurentPoly::variable(full, xname(i))));
    r.add("Omega" + std::to_string(i) + " -> (q_i - p_i) Y_i X_i", got == want, got.str());
  }
  for (const auto& g : t.members()) {
    LaurentPoly img = m.apply(source_generator(params, g));
    r.add(g.str() + " -> 0", img.is_zero(), img.str());
  }
  // Images of the y_i outside T are exactly the inverted variables.
  std::set<std::string> hit;
  bool monomial = true;
  for (const auto& g : derived_sets(t).y_t) {
    const LaurentPoly& img = m.images[y_index(g.index)];
    if (!img.is_monomial() || !img.leading().second.is_one() || img.degree() != 1) {
      monomial = false;
      continue;
    }
    const Monomial& mono = img.leading().first;
    for (std::size_t k = 0; k < mono.size(); ++k)
      if (mono[k] == 1 && m.target.spec()->invertible(k)) hit.insert(m.target.spec()->name(k));
  }
  r.add("images of Y_T generate U_T", monomial && hit == invert_set(t));
  return r;
}

CheckReport verify_psi_nested(const PoissonParams& params, const AdmissibleSet& t, const AdmissibleSet& t2) {
  CheckReport r{"nested " + t.str() + " in " + t2.str(), {}};
  if (!t.subset_of(t2)) throw InvalidArgument(t.str() + " is not contained in " + t2.str());
  PsiMap small = psi_prime(params, t), big = psi_prime(params, t2);
  VarSpecPtr names = an_varspec(params.n, "Y", "X");
  auto inv = invert_set(t2);
  std::vector<bool> flags;
  for (const auto& nm : names->names()) flags.push_back(inv.count(nm) > 0);
  VarSpecPtr common = make_varspec(names->names(), flags);
  auto ideal = kill_set(t2);

  auto lift = [&](const LaurentPoly& f) -> std::optional<LaurentPoly> {
    for (const auto& [m, c] : f.terms())
      for (std::size_t k = 0; k < m.size(); ++k)
        if (m[k] < 0 && !inv.count(f.spec()->name(k))) return std::nullopt;
    return f.rebase(common);
  };

  VarSpecPtr src = an_varspec(params.n);
  for (std::size_t g = 0; g < small.images.size(); ++g) {
    auto a = lift(small.images[g]), b = lift(big.images[g]);
    if (!a || !b) {
      r.add(src->name(g), true, "skipped: image needs an inverse of a variable in eta(T')");
      continue;
    }
    LaurentPoly diff = *a - *b;
    bool in_ideal = true;
    for (const auto& [m, c] : diff.terms()) {
      bool divisible = false;
      for (std::size_t k = 0; k < m.size(); ++k)
        if (m[k] > 0 && ideal.count(common->name(k))) divisible = true;
      if (!divisible) in_ideal = false;
    }
    r.add(src->name(g), in_ideal, diff.str());
  }
  return r;
}

LaurentPoly UpsilonMap::apply(const NCElement& f) const {
  LaurentPoly out(target.spec());
  for (const auto& [m, c] : f.pbw.terms()) {
    LaurentPoly acc(target.spec(), c);
    for (std::size_t v = 0; v < m.size(); ++v)
      for (int e = 0; e < m[v]; ++e) acc = target.multiply(acc, images[v]);
    out += acc;
  }
  return out;
}

UpsilonMap upsilon_prime(const QuantumParams& params, const AdmissibleSet& t) {
  params.validate();
  require_admissible(t, params.n);
  UpsilonMap m{t, qtorus(params, kill_set(t), invert_set(t)), {}, image_cases(t)};
  const QTorus& tor = m.target;
  for (int i = 1; i <= params.n; ++i) {
    m.images.push_back(m.cases[y_index(i)] == ImageCase::Zero ? LaurentPoly(tor.spec()) : tor.variable(yname(i)));
    LaurentPoly tail(tor.spec());
    ImageCase c = m.cases[x_index(i)];
    if (c == ImageCase::TailOnly || c == ImageCase::Shifted)
      tail = shift_coefficient(params.p, params.q, i) *
             tor.product({tor.inverse(tor.variable(yname(i))), tor.variable(yname(i - 1)), tor.variable(xname(i - 1))});
    switch (c) {
      case ImageCase::Zero: m.images.push_back(LaurentPoly(tor.spec())); break;
      case ImageCase::Plain: m.images.push_back(tor.variable(xname(i))); break;
      case ImageCase::TailOnly: m.images.push_back(-tail); break;
      case ImageCase::Shifted: m.images.push_back(tor.variable(xname(i)) - tail); break;
    }
  }
  return m;
}

CheckReport verify_upsilon(const QuantumParams& params, const AdmissibleSet& t) {
  CheckReport r{"upsilon " + t.str(), {}};
  UpsilonMap m = upsilon_prime(params, t);
  QuantumAlgebra k(params);
  const VarSpec& s = *k.spec();
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      // g_b g_a equals its PBW rewrite; both sides must agree after the map.
      LaurentPoly lhs = m.target.multiply(m.images[b], m.images[a]);
      LaurentPoly rhs = m.apply(k.multiply(k.generator(b), k.generator(a)));
      LaurentPoly res = lhs - rhs;
      r.add("relation " + s.name(b) + " " + s.name(a), res.is_zero(), res.str());
    }
  for (int i = 1; i <= params.n; ++i) {
    LaurentPoly got = m.apply(k.omega(i));
    LaurentPoly want = (params.q_(i) - params.p_(i)) * m.target.multiply(m.target.variable(yname(i)),
                                                                          m.target.variable(xname(i)));
    r.add("Omega" + std::to_string(i) + " -> (q_i - p_i) Y_i X_i", got == want, got.str());
  }
  for (const auto& g : t.members()) {
    LaurentPoly img = g.kind == GenKind::Omega ? m.apply(k.omega(g.index)) : m.images[g.kind == GenKind::Y ? y_index(g.index) : x_index(g.index)];
    r.add(g.str() + " -> 0", img.is_zero(), img.str());
  }
  return r;
}

Rational phi_value(const std::map<mpz_class, Rational>& weights, const Rational& r) {
  Rational out = 0;
  for (const auto& [p, e] : r.factor().exponents) {
    auto it = weights.find(p);
    if (it == weights.end()) throw InvalidArgument("no weight for prime " + p.get_str());
    out += Rational(e) * it->second;
  }
  return out;
}

PhiSpec phi_hom(const QuantumParams& params, std::map<mpz_class, Rational> weights) {
  params.validate();
  const int n = params.n;
  std::vector<Rational> gens;
  for (int i = 1; i <= n; ++i) {
    gens.push_back(params.p_(i));
    gens.push_back(params.q_(i));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) gens.push_back(params.g(i, j));

  PhiSpec out;
  out.group = group_analysis(gens);
  if (weights.empty()) {
    if (out.group.primes.size() != 1)
      throw InvalidArgument("phi weights must be given when the parameters involve " +
                            std::to_string(out.group.primes.size()) + " primes");
    weights[out.group.primes[0]] = 1;
  }
  for (const auto& p : out.group.primes)
    if (!weights.count(p)) throw InvalidArgument("no weight for prime " + p.get_str());
  out.weights = weights;
  out.minus_one_in_group = out.group.contains_minus_one;

  bool nonzero_somewhere = false;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    bool trivial = true;
    for (const auto& e : out.group.exponents[g]) trivial = trivial && e == 0;
    if (!trivial && !phi_value(weights, gens[g]).is_zero()) nonzero_somewhere = true;
  }
  out.injective_on_group = out.group.lattice_rank == 0 || (out.group.lattice_rank == 1 && nonzero_somewhere);

  PoissonParams& ind = out.induced;
  ind.n = n;
  ind.gamma.assign(n, std::vector<Rational>(n, 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) ind.gamma[i - 1][j - 1] = phi_value(weights, params.g(i, j));
  for (int i = 1; i <= n; ++i) {
    ind.p.push_back(phi_value(weights, params.p_(i)));
    ind.q.push_back(phi_value(weights, params.q_(i)));
    if (ind.p.back() == ind.q.back())
      throw InvalidParams("phi(p_" + std::to_string(i) + ") = phi(q_" + std::to_string(i) + ") = " + ind.p.back().str());
  }
  return out;
}

bool MapReport::ok() const {
  for (const auto& s : strata)
    if (!s.psi_ok || !s.upsilon_ok) return false;
  return true;
}

MapReport quotient_map_report(const QuantumParams& params, std::map<mpz_class, Rational> weights) {
  if (params.n > 3) throw InvalidArgument("map report is limited to n <= 3");
  MapReport out;
  out.params = params;
  out.phi = phi_hom(params, std::move(weights));
  if (out.phi.minus_one_in_group)
    throw VerificationFailure("-1 lies in the subgroup generated by the parameters");
  out.grade = out.phi.injective_on_group ? "homeomorphism" : "quotient";
  for (const auto& t : enumerate(params.n)) {
    StratumRecord rec;
    rec.label = stratum_label(t);
    rec.cases = image_cases(t);
    PsiMap psi = psi_prime(out.phi.induced, t);
    UpsilonMap ups = upsilon_prime(params, t);
    for (const auto& img : psi.images) rec.psi_images.push_back(img.str());
    for (const auto& img : ups.images) rec.upsilon_images.push_back(img.str());
    CheckReport pr = verify_psi(out.phi.induced, t), ur = verify_upsilon(params, t);
    rec.psi_ok = pr.ok();
    rec.upsilon_ok = ur.ok();
    if (auto f = pr.first_failure()) rec.psi_failure = f->name + ": " + f->detail;
    if (auto f = ur.first_failure()) rec.upsilon_failure = f->name + ": " + f->detail;
    out.strata.push_back(std::move(rec));
  }
  return out;
}

std::string MapReport::to_json() const {
  using nlohmann::ordered_json;
  auto vec = [](const std::vector<Rational>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& r : v) a.push_back(r.str());
    return a;
  };
  auto mat = [&](const Matrix& m) {
    ordered_json a = ordered_json::array();
    for (const auto& row : m) a.push_back(vec(row));
    return a;
  };
  ordered_json j;
  j["n"] = params.n;
  j["params"] = {{"gamma", mat(params.gamma)}, {"p", vec(params.p)}, {"q", vec(params.q)}};
  ordered_json w = ordered_json::object();
  for (const auto& [p, v] : phi.weights) w[p.get_str()] = v.str();
  j["phi"] = {{"weights", w},
              {"gamma", mat(phi.induced.gamma)},
              {"p", vec(phi.induced.p)},
              {"q", vec(phi.induced.q)},
              {"lattice_rank", phi.group.lattice_rank},
              {"injective_on_group", phi.injective_on_group},
              {"minus_one_in_group", phi.minus_one_in_group}};
  j["strata"] = ordered_json::array();
  VarSpecPtr src = an_varspec(params.n);
  for (const auto& s : strata) {
    ordered_json rec;
    ordered_json tl = ordered_json::array(), el = ordered_json::array();
    for (const auto& g : s.label.t.members()) tl.push_back(g.str());
    for (const auto& g : s.label.eta) el.push_back(g.target_str());
    rec["T"] = tl;
    rec["eta"] = el;
    rec["length"] = s.label.length;
    rec["gk_dim"] = s.label.gk_dim;
    rec["psi_ok"] = s.psi_ok;
    rec["upsilon_ok"] = s.upsilon_ok;
    ordered_json pi = ordered_json::object(), ui = ordered_json::object();
    for (std::size_t g = 0; g < src->size(); ++g) {
      pi[src->name(g)] = s.psi_images[g];
      ui[src->name(g)] = s.upsilon_images[g];
    }
    rec["psi_images"] = pi;
    rec["upsilon_images"] = ui;
    if (!s.psi_failure.empty()) rec["psi_failure"] = s.psi_failure;
    if (!s.upsilon_failure.empty()) rec["upsilon_failure"] = s.upsilon_failure;
    j["strata"].push_back(rec);
  }
  j["grade"] = grade;
  return j.dump(2);
}

}  // namespace pq
