#include "pq/algebra_kn.hpp"

#include <algorithm>
#include <map>

#include "pq/error.hpp"

namespace pq {

namespace {

int level(std::size_t v) { return static_cast<int>(v / 2) + 1; }
bool is_x(std::size_t v) { return v % 2 == 1; }

// g_k g_j = c g_j g_k + sum_l t_l y_l x_l for k > j.
struct Swap {
  Rational c;
  std::vector<std::pair<int, Rational>> tail;
};

Swap swap_rule(const QuantumParams& pr, std::size_t k, std::size_t j) {
  const int a = level(j), b = level(k);
  Swap s;
  if (a == b) {
    s.c = pr.q_(a);
    for (int l = 1; l < a; ++l) s.tail.emplace_back(l, pr.q_(l) - pr.p_(l));
    return s;
  }
  const Rational& g = pr.g(a, b);
  if (!is_x(k) && !is_x(j)) s.c = g.inverse();
  else if (is_x(k) && !is_x(j)) s.c = pr.q_(a) * g;
  else if (!is_x(k) && is_x(j)) s.c = pr.p_(b).inverse() * g;
  else s.c = pr.q_(a).inverse() * pr.p_(b) * g.inverse();
  return s;
}

class Multiplier {
 public:
  Multiplier(const QuantumParams& params, VarSpecPtr spec, std::size_t budget)
      : params_(params), spec_(std::move(spec)), budget_(budget) {}

  LaurentPoly apply(std::size_t k, const LaurentPoly& f) {
    LaurentPoly out(spec_);
    for (const auto& [m, a] : f.terms()) out += a * gen_times(k, m);
    return out;
  }

  LaurentPoly gen_times(std::size_t k, const Monomial& m) {
    std::size_t j = 0;
    while (j < m.size() && m[j] == 0) ++j;
    if (j >= k) return LaurentPoly::term(spec_, m * Monomial::unit(m.size(), k));
    auto key = std::make_pair(k, m);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (++steps_ > budget_)
      throw StepBudgetExceeded("PBW rewriting exceeded " + std::to_string(budget_) + " steps");

    Monomial rest = m / Monomial::unit(m.size(), j);
    Swap s = swap_rule(params_, k, j);
    LaurentPoly out = s.c * apply(j, gen_times(k, rest));
    for (const auto& [l, t] : s.tail) {
      LaurentPoly word = apply(y_index(l), apply(x_index(l), LaurentPoly::term(spec_, rest)));
      out += t * word;
    }
    memo_.emplace(std::move(key), out);
    return out;
  }

 private:
  const QuantumParams& params_;
  VarSpecPtr spec_;
  std::size_t budget_;
  std::size_t steps_ = 0;
  struct KeyLess {
    bool operator()(const std::pair<std::size_t, Monomial>& a, const std::pair<std::size_t, Monomial>& b) const {
      if (a.first != b.first) return a.first < b.first;
      return MonomialLess{}(a.second, b.second);
    }
  };
  std::map<std::pair<std::size_t, Monomial>, LaurentPoly, KeyLess> memo_;
};

}  // namespace

void QuantumParams::validate() const {
  if (n < 1) throw InvalidParams("n must be a positive integer");
  const auto un = static_cast<std::size_t>(n);
  if (gamma.size() != un || p.size() != un || q.size() != un)
    throw InvalidParams("gamma must be n x n and p, q must have n entries");
  for (int i = 1; i <= n; ++i) {
    if (gamma[i - 1].size() != un) throw InvalidParams("gamma must be n x n");
    if (!g(i, i).is_one()) throw InvalidParams("gamma must be 1 on the diagonal");
    for (int j = 1; j <= n; ++j) {
      if (g(i, j).is_zero()) throw InvalidParams("gamma entries must be nonzero");
      if (!(g(i, j) * g(j, i)).is_one())
        throw InvalidParams("gamma is not multiplicatively skew at (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")");
    }
    if (p_(i).is_zero() || q_(i).is_zero()) throw InvalidParams("p and q entries must be nonzero");
    Rational ratio = p_(i) / q_(i);
    if (ratio == Rational(1) || ratio == Rational(-1))
      throw InvalidParams("p_" + std::to_string(i) + " / q_" + std::to_string(i) + " is a root of unity");
  }
}

QuantumParams QuantumParams::random(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(-2, 2);
  auto draw = [&] {
    Rational r = Rational(2).pow(e(rng)) * Rational(3).pow(e(rng));
    return rng() % 4 == 0 ? -r : r;
  };
  QuantumParams out;
  out.n = n;
  out.gamma.assign(n, std::vector<Rational>(n, 1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      out.gamma[i][j] = draw();
      out.gamma[j][i] = out.gamma[i][j].inverse();
    }
  for (int i = 0; i < n; ++i) {
    Rational a = draw(), b = draw();
    while ((a / b).abs().is_one()) b = draw();
    out.p.push_back(a);
    out.q.push_back(b);
  }
  return out;
}

QuantumParams cfg_q() { return {2, {{1, 2}, {Rational(1, 2), 1}}, {2, 8}, {4, 32}}; }

QuantumAlgebra::QuantumAlgebra(QuantumParams params) : params_(std::move(params)) {
  params_.validate();
  spec_ = an_varspec(params_.n);
}

NCElement QuantumAlgebra::generator(std::size_t index) const { return NCElement(LaurentPoly::variable(spec_, index)); }
NCElement QuantumAlgebra::generator(std::string_view name) const { return NCElement(LaurentPoly::variable(spec_, name)); }

NCElement QuantumAlgebra::standard(const Monomial& m, const Rational& c) const {
  return NCElement(LaurentPoly::term(spec_, m, c));
}

NCElement QuantumAlgebra::multiply(const NCElement& a, const NCElement& b, std::size_t budget) const {
  if (!(*a.pbw.spec() == *spec_) || !(*b.pbw.spec() == *spec_))
    throw VarSpecMismatch("operands are not elements of this K_n");
  Multiplier mul(params_, spec_, budget);
  LaurentPoly out(spec_);
  for (const auto& [u, coef] : a.pbw.terms()) {
    LaurentPoly acc = b.pbw;
    for (std::size_t v = u.size(); v-- > 0;)
      for (int e = 0; e < u[v]; ++e) acc = mul.apply(v, acc);
    out += coef * acc;
  }
  return NCElement(out);
}

NCElement QuantumAlgebra::pow(const NCElement& a, int e) const {
  if (e < 0) throw InvalidArgument("negative powers are not defined in K_n");
  NCElement out = constant(1);
  for (int i = 0; i < e; ++i) out = multiply(out, a);
  return out;
}

NCElement QuantumAlgebra::omega(int i) const {
  if (i < 0 || i > n()) throw InvalidArgument("Omega index out of range");
  LaurentPoly out(spec_);
  for (int k = 1; k <= i; ++k)
    out += LaurentPoly::term(spec_, Monomial::unit(spec_->size(), y_index(k)) * Monomial::unit(spec_->size(), x_index(k)),
                             params_.q_(k) - params_.p_(k));
  return NCElement(out);
}

NCElement nc_multiply(const QuantumParams& params, const NCElement& f, const NCElement& g) {
  return QuantumAlgebra(params).multiply(f, g);
}

NCElement omega_q(const QuantumParams& params, int i) {
  if (i < 1 || i > params.n) throw InvalidArgument("Omega index out of range");
  return QuantumAlgebra(params).omega(i);
}

NormalityReport normality_check(const QuantumParams& params, int i) {
  QuantumAlgebra k(params);
  NCElement om = omega_q(params, i);
  NormalityReport out;
  out.report.title = "normality of Omega" + std::to_string(i);
  for (std::size_t v = 0; v < k.spec()->size(); ++v) {
    NCElement g = k.generator(v);
    NCElement left = k.multiply(om, g), right = k.multiply(g, om);
    const auto& [m, rc] = right.pbw.leading();
    Rational lambda = left.pbw.coefficient(m) / rc;
    out.lambda.push_back(lambda);
    NCElement residual = left - lambda * right;
    out.report.add("Omega" + std::to_string(i) + " * " + k.spec()->name(v) + " = " + lambda.str() + " * " +
                       k.spec()->name(v) + " * Omega" + std::to_string(i),
                   residual.is_zero(), residual.str());
  }
  return out;
}

Matrix s_matrix(const QuantumParams& params) {
  params.validate();
  const int n = params.n;
  Matrix s(2 * n, std::vector<Rational>(2 * n, 1));
  auto set = [&](std::size_t a, std::size_t b, const Rational& v) {
    s[a][b] = v;
    s[b][a] = v.inverse();
  };
  for (int i = 1; i <= n; ++i) {
    set(y_index(i), x_index(i), params.q_(i).inverse());
    for (int j = i + 1; j <= n; ++j) {
      const Rational& g = params.g(i, j);
      set(y_index(i), y_index(j), g);
      set(x_index(i), y_index(j), params.p_(j) * g.inverse());
      set(y_index(i), x_index(j), params.q_(i).inverse() * g.inverse());
      set(x_index(i), x_index(j), params.q_(i) * params.p_(j).inverse() * g);
    }
  }
  return s;
}

QTorus::QTorus(const Matrix& s, const std::vector<std::string>& names, const std::set<std::string>& kill,
               const std::set<std::string>& invert)
    : kill_(kill) {
  if (s.size() != names.size()) throw InvalidArgument("commutation matrix does not match the variable list");
  for (const auto& k : kill) {
    if (std::find(names.begin(), names.end(), k) == names.end()) throw UnknownVariable("unknown variable " + k);
    if (invert.count(k)) throw InvalidArgument("variable " + k + " is both killed and inverted");
  }
  for (const auto& k : invert)
    if (std::find(names.begin(), names.end(), k) == names.end()) throw UnknownVariable("unknown variable " + k);
  std::vector<std::string> kept;
  std::vector<bool> inv;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (kill.count(names[i])) continue;
    kept.push_back(names[i]);
    inv.push_back(invert.count(names[i]) > 0);
    idx.push_back(i);
  }
  spec_ = make_varspec(kept, inv);
  for (std::size_t a : idx) {
    std::vector<Rational> row;
    for (std::size_t b : idx) row.push_back(s[a][b]);
    s_.push_back(std::move(row));
  }
}

LaurentPoly QTorus::variable(std::string_view name) const {
  if (killed(name)) return LaurentPoly(spec_);
  return LaurentPoly::variable(spec_, name);
}

LaurentPoly QTorus::project(const LaurentPoly& full) const {
  const VarSpec& fs = *full.spec();
  LaurentPoly out(spec_);
  for (const auto& [m, c] : full.terms()) {
    Monomial target(spec_->size());
    bool dead = false;
    for (std::size_t i = 0; i < fs.size() && !dead; ++i) {
      if (m[i] == 0) continue;
      if (killed(fs.name(i))) dead = true;
      else target[spec_->index_of(fs.name(i))] = m[i];
    }
    if (!dead) out += LaurentPoly::term(spec_, target, c);
  }
  return out;
}

Rational QTorus::twist(const Monomial& u, const Monomial& v) const {
  Rational out = 1;
  for (std::size_t a = 0; a < u.size(); ++a) {
    if (u[a] == 0) continue;
    for (std::size_t b = 0; b < a; ++b)
      if (v[b] != 0) out *= s_[a][b].pow(static_cast<long>(u[a]) * v[b]);
  }
  return out;
}

LaurentPoly QTorus::multiply(const LaurentPoly& a, const LaurentPoly& b) const {
  if (!(*a.spec() == *spec_) || !(*b.spec() == *spec_)) throw VarSpecMismatch("operands are not torus elements");
  LaurentPoly out(spec_);
  for (const auto& [u, ca] : a.terms())
    for (const auto& [v, cb] : b.terms()) out.add_term(u * v, ca * cb * twist(u, v));
  return out;
}

LaurentPoly QTorus::product(std::initializer_list<LaurentPoly> factors) const {
  LaurentPoly out(spec_, 1);
  for (const auto& f : factors) out = multiply(out, f);
  return out;
}

LaurentPoly QTorus::inverse(const LaurentPoly& monomial) const {
  if (!monomial.is_monomial()) throw InvalidArgument("only single terms are invertible in the torus");
  const auto& [u, c] = monomial.leading();
  Monomial inv = u.inverse();
  return LaurentPoly::term(spec_, inv, (c * twist(u, inv)).inverse());
}

QTorus qtorus(const QuantumParams& params, const std::set<std::string>& kill, const std::set<std::string>& invert) {
  return QTorus(s_matrix(params), an_varspec(params.n, "Y", "X")->names(), kill, invert);
}

}  // namespace pq
