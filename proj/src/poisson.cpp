#include "pq/poisson.hpp"

#include <sstream>

namespace pq {

namespace {

void require_spec(const VarSpecPtr& expected, const VarSpecPtr& got, const char* what) {
  if (!got || (expected != got && !(*expected == *got)))
    throw VarSpecMismatch(std::string(what) + " does not live over the structure's VarSpec");
}

std::string pair_label(const VarSpec& spec, std::size_t i, std::size_t j) {
  return "(" + spec.name(i) + ", " + spec.name(j) + ")";
}

}  // namespace

PoissonStructure::PoissonStructure(VarSpecPtr spec, Table table) : spec_(std::move(spec)) {
  for (auto& [key, value] : table) {
    auto [i, j] = key;
    if (i >= j || j >= spec_->size()) throw InvalidArgument("bracket table keys must be (i, j) with i < j");
    require_spec(spec_, value.spec(), "bracket table entry");
    if (!value.is_zero()) table_.emplace(key, std::move(value));
  }
}

LaurentPoly PoissonStructure::entry(std::size_t i, std::size_t j) const {
  if (i == j) return LaurentPoly(spec_);
  if (i > j) return -entry(j, i);
  auto it = table_.find({i, j});
  return it == table_.end() ? LaurentPoly(spec_) : it->second;
}

PoissonStructure PoissonStructure::validated() const {
  if (auto failure = find_jacobi_failure(*this)) {
    std::ostringstream os;
    os << "Jacobi identity fails on (" << spec_->name(failure->i) << ", " << spec_->name(failure->j) << ", "
       << spec_->name(failure->k) << "): " << failure->value.str();
    throw VerificationFailure(os.str());
  }
  PoissonStructure copy(*this);
  copy.validated_ = true;
  return copy;
}

bool PoissonStructure::same_table(const PoissonStructure& other) const {
  if (size() != other.size()) return false;
  std::vector<std::size_t> map(size());
  for (std::size_t i = 0; i < size(); ++i) {
    auto j = other.spec()->find(spec_->name(i));
    if (!j) return false;
    map[i] = *j;
  }
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (!(entry(i, j) == other.entry(map[i], map[j]).rebase(spec_))) return false;
  return true;
}

LaurentPoly bracket(const PoissonStructure& s, const LaurentPoly& f, const LaurentPoly& g) {
  require_spec(s.spec(), f.spec(), "bracket operand");
  require_spec(s.spec(), g.spec(), "bracket operand");
  const std::size_t n = s.size();
  std::vector<LaurentPoly> df(n), dg(n);
  for (std::size_t i = 0; i < n; ++i) {
    df[i] = f.derivative(i);
    dg[i] = g.derivative(i);
  }
  LaurentPoly out(s.spec());
  for (const auto& [key, coef] : s.table()) {
    auto [i, j] = key;
    LaurentPoly cross(s.spec());
    if (!df[i].is_zero() && !dg[j].is_zero()) cross += df[i] * dg[j];
    if (!df[j].is_zero() && !dg[i].is_zero()) cross -= df[j] * dg[i];
    if (!cross.is_zero()) out += coef * cross;
  }
  return out;
}

LaurentPoly jacobiator(const PoissonStructure& s, const LaurentPoly& f, const LaurentPoly& g,
                       const LaurentPoly& h) {
  return bracket(s, bracket(s, f, g), h) + bracket(s, bracket(s, g, h), f) + bracket(s, bracket(s, h, f), g);
}

std::optional<JacobiFailure> find_jacobi_failure(const PoissonStructure& s) {
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        LaurentPoly v = jacobiator(s, s.generator(i), s.generator(j), s.generator(k));
        if (!v.is_zero()) return JacobiFailure{i, j, k, std::move(v)};
      }
  return std::nullopt;
}

bool jacobi_check(const PoissonStructure& s) { return !find_jacobi_failure(s).has_value(); }

Derivation::Derivation(VarSpecPtr spec) : spec_(std::move(spec)) {
  images_.assign(spec_->size(), LaurentPoly(spec_));
}

Derivation::Derivation(VarSpecPtr spec, std::vector<LaurentPoly> images)
    : spec_(std::move(spec)), images_(std::move(images)) {
  if (images_.size() != spec_->size()) throw InvalidArgument("derivation needs one image per generator");
  for (const auto& p : images_) require_spec(spec_, p.spec(), "derivation image");
}

void Derivation::set_image(std::size_t i, LaurentPoly p) {
  require_spec(spec_, p.spec(), "derivation image");
  images_.at(i) = std::move(p);
}

LaurentPoly Derivation::operator()(const LaurentPoly& f) const {
  require_spec(spec_, f.spec(), "derivation argument");
  LaurentPoly out(spec_);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].is_zero()) continue;
    LaurentPoly d = f.derivative(i);
    if (!d.is_zero()) out += d * images_[i];
  }
  return out;
}

Derivation diagonal_derivation(const VarSpecPtr& spec, const std::vector<Rational>& weights) {
  if (weights.size() != spec->size()) throw InvalidArgument("one weight per generator expected");
  Derivation d(spec);
  for (std::size_t i = 0; i < weights.size(); ++i) d.set_image(i, weights[i] * LaurentPoly::variable(spec, i));
  return d;
}

Derivation hamiltonian(const PoissonStructure& s, const LaurentPoly& a) {
  Derivation d(s.spec());
  for (std::size_t i = 0; i < s.size(); ++i) d.set_image(i, bracket(s, a, s.generator(i)));
  return d;
}

std::vector<DerivationResidual> derivation_residuals(const PoissonStructure& s, const Derivation& d) {
  require_spec(s.spec(), d.spec(), "derivation");
  std::vector<DerivationResidual> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      LaurentPoly r = d(s.entry(i, j)) - bracket(s, d.image(i), s.generator(j)) -
                      bracket(s, s.generator(i), d.image(j));
      if (!r.is_zero()) out.push_back({i, j, std::move(r)});
    }
  return out;
}

bool derivation_check(const PoissonStructure& s, const Derivation& d) { return derivation_residuals(s, d).empty(); }

std::vector<DerivationResidual> ore_residuals(const PoissonStructure& s, const Derivation& alpha,
                                              const Derivation& delta) {
  require_spec(s.spec(), alpha.spec(), "alpha");
  require_spec(s.spec(), delta.spec(), "delta");
  std::vector<DerivationResidual> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      LaurentPoly lhs = delta(s.entry(i, j)) - bracket(s, delta.image(i), s.generator(j)) -
                        bracket(s, s.generator(i), delta.image(j));
      LaurentPoly rhs = delta.image(i) * alpha.image(j) - alpha.image(i) * delta.image(j);
      LaurentPoly r = lhs - rhs;
      if (!r.is_zero()) out.push_back({i, j, std::move(r)});
    }
  return out;
}

PoissonStructure ore_extend(const PoissonStructure& s, const Derivation& alpha, const Derivation& delta,
                            const std::string& new_var) {
  const VarSpec& base = *s.spec();
  if (auto bad = derivation_residuals(s, alpha); !bad.empty())
    throw CompatibilityError("alpha is not a Poisson derivation on " + pair_label(base, bad[0].i, bad[0].j),
                             pair_label(base, bad[0].i, bad[0].j), bad[0].value);
  if (auto bad = ore_residuals(s, alpha, delta); !bad.empty())
    throw CompatibilityError("(alpha, delta) violate the Poisson-Ore condition on " +
                                 pair_label(base, bad[0].i, bad[0].j) + ", residual " + bad[0].value.str(),
                             pair_label(base, bad[0].i, bad[0].j), bad[0].value);

  std::vector<std::string> names = base.names();
  std::vector<bool> inv(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) inv[i] = base.invertible(i);
  names.push_back(new_var);
  inv.push_back(false);
  VarSpecPtr spec = make_varspec(std::move(names), std::move(inv));
  const std::size_t x = base.size();
  LaurentPoly xv = LaurentPoly::variable(spec, x);

  PoissonStructure::Table table;
  for (const auto& [key, value] : s.table()) table.emplace(key, value.rebase(spec));
  for (std::size_t i = 0; i < base.size(); ++i)
    table.emplace(std::make_pair(i, x), alpha.image(i).rebase(spec) * xv + delta.image(i).rebase(spec));
  return PoissonStructure(spec, std::move(table));
}

PoissonStructure double_extend(const DoubleExtensionSpec& spec) {
  const PoissonStructure& a = spec.base;
  const VarSpecPtr& bs = a.spec();
  require_spec(bs, spec.u.spec(), "u");
  if (!derivation_check(a, spec.alpha)) throw InvalidArgument("double extension: alpha is not a Poisson derivation");
  if (!derivation_check(a, spec.beta)) throw InvalidArgument("double extension: beta is not a Poisson derivation");
  for (std::size_t i = 0; i < a.size(); ++i) {
    const LaurentPoly g = a.generator(i);
    if (!(spec.alpha(spec.beta(g)) == spec.beta(spec.alpha(g))))
      throw InvalidArgument("double extension: alpha and beta do not commute on " + bs->name(i));
    if (!(bracket(a, g, spec.u) == (spec.alpha(g) + spec.beta(g)) * spec.u))
      throw InvalidArgument("double extension: {a,u} != (alpha+beta)(a) u for a = " + bs->name(i));
  }
  if (spec.d) {
    if (!(spec.alpha(spec.u) == *spec.d * spec.u))
      throw InvalidArgument("double extension: alpha(u) != d u");
    if (!(spec.beta(spec.u) == -*spec.d * spec.u))
      throw InvalidArgument("double extension: beta(u) != -d u");
    if ((spec.c + *spec.d).is_zero()) throw InvalidArgument("double extension: c + d = 0");
  }

  PoissonStructure with_y = ore_extend(a, spec.alpha, Derivation(bs), spec.y_name);
  const VarSpecPtr& ys = with_y.spec();
  const std::size_t y = bs->size();
  Derivation beta_prime(ys), delta(ys);
  for (std::size_t i = 0; i < bs->size(); ++i) beta_prime.set_image(i, spec.beta.image(i).rebase(ys));
  beta_prime.set_image(y, spec.c * LaurentPoly::variable(ys, y));
  delta.set_image(y, spec.u.rebase(ys));
  return ore_extend(with_y, beta_prime, delta, spec.x_name);
}

LaurentPoly normal_element(const DoubleExtensionSpec& spec, const PoissonStructure& extended) {
  if (!spec.d) throw InvalidArgument("normal element needs the eigenvalue d");
  LaurentPoly y = extended.generator(spec.y_name), x = extended.generator(spec.x_name);
  return (spec.c + *spec.d) * (y * x) + spec.u.rebase(extended.spec());
}

PoissonStructure localize(const PoissonStructure& s, const std::vector<std::string>& invert) {
  if (invert.empty()) return s;
  std::vector<std::size_t> idx;
  for (const auto& name : invert) idx.push_back(s.spec()->index_of(name));
  VarSpecPtr spec = with_inverted(*s.spec(), idx);
  PoissonStructure::Table table;
  for (const auto& [key, value] : s.table()) table.emplace(key, value.rebase(spec));
  PoissonStructure out(spec, std::move(table));
  return s.is_validated() ? out.validated() : out;
}

std::optional<std::vector<LaurentPoly>> is_poisson_normal(const PoissonStructure& s, const LaurentPoly& z) {
  require_spec(s.spec(), z.spec(), "candidate normal element");
  if (z.is_zero()) throw InvalidArgument("zero is never Poisson normal");
  std::vector<LaurentPoly> eigen;
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto q = bracket(s, s.generator(i), z).divide_exact(z);
    if (!q) return std::nullopt;
    eigen.push_back(std::move(*q));
  }
  return eigen;
}

}  // namespace pq
