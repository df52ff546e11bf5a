#include "pq/laurent_poly.hpp"

#include <algorithm>
#include <climits>
#include <ostream>

#include "pq/error.hpp"

namespace pq {

LaurentPoly::LaurentPoly(VarSpecPtr spec, const Rational& constant) : spec_(std::move(spec)) {
  if (!constant.is_zero()) terms_.emplace(Monomial(spec_->size()), constant);
}

LaurentPoly LaurentPoly::variable(VarSpecPtr spec, std::size_t index) {
  if (index >= spec->size()) throw UnknownVariable("variable index out of range");
  std::size_t n = spec->size();
  return term(std::move(spec), Monomial::unit(n, index), 1);
}

LaurentPoly LaurentPoly::variable(VarSpecPtr spec, std::string_view name) {
  std::size_t i = spec->index_of(name);
  return variable(std::move(spec), i);
}

LaurentPoly LaurentPoly::term(VarSpecPtr spec, Monomial m, const Rational& coef) {
  LaurentPoly p(std::move(spec));
  if (m.size() != p.spec_->size()) throw InvalidArgument("monomial length does not match VarSpec");
  p.check_monomial(m);
  if (!coef.is_zero()) p.terms_.emplace(std::move(m), coef);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

const std::pair<const Monomial, Rational>& LaurentPoly::leading() const {
  if (terms_.empty()) throw InvalidArgument("leading term of zero polynomial");
  return *terms_.rbegin();
}

Rational LaurentPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

long LaurentPoly::degree() const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void LaurentPoly::check_same_ring(const LaurentPoly& o) const {
  if (!spec_ || !o.spec_) throw VarSpecMismatch("polynomial without a VarSpec");
  if (spec_ != o.spec_ && !(*spec_ == *o.spec_))
    throw VarSpecMismatch("polynomials live over different VarSpecs");
}

void LaurentPoly::check_monomial(const Monomial& m) const {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] < 0 && !spec_->invertible(i))
      throw InvalidArgument("negative exponent on non-invertible variable '" + spec_->name(i) + "'");
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same_ring(b);
  LaurentPoly r(a.spec_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same_ring(b);
  return a.terms_ == b.terms_;
}

LaurentPoly LaurentPoly::pow(long e) const {
  if (e < 0) return monomial_inverse().pow(-e);
  LaurentPoly result(spec_, Rational(1));
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::derivative(std::size_t var) const {
  if (!spec_ || var >= spec_->size()) throw UnknownVariable("derivative with respect to unknown variable");
  LaurentPoly r(spec_);
  for (const auto& [m, c] : terms_) {
    int e = m[var];
    if (e == 0) continue;
    Monomial d = m;
    d[var] = e - 1;
    r.add_term(d, c * Rational(e));
  }
  return r;
}

LaurentPoly LaurentPoly::derivative(std::string_view name) const {
  if (!spec_) throw UnknownVariable("derivative with respect to unknown variable");
  return derivative(spec_->index_of(name));
}

LaurentPoly LaurentPoly::monomial_inverse() const {
  if (terms_.size() != 1) throw InvalidArgument("only nonzero single-term elements are inverted: " + str());
  const auto& [m, c] = *terms_.begin();
  return term(spec_, m.inverse(), c.inverse());
}

LaurentPoly LaurentPoly::substitute(const std::vector<LaurentPoly>& images, const VarSpecPtr& target) const {
  if (images.size() != spec_->size()) throw InvalidArgument("substitution needs one image per variable");
  // Powers are cached per variable since the same exponents recur across terms.
  std::vector<std::map<int, LaurentPoly>> cache(images.size());
  auto power = [&](std::size_t i, int e) -> const LaurentPoly& {
    auto it = cache[i].find(e);
    if (it != cache[i].end()) return it->second;
    return cache[i].emplace(e, images[i].pow(e)).first->second;
  };
  LaurentPoly r(target);
  for (const auto& [m, c] : terms_) {
    LaurentPoly t(target, c);
    for (std::size_t i = 0; i < m.size() && !t.is_zero(); ++i)
      if (m[i] != 0) t *= power(i, m[i]);
    r += t;
  }
  return r;
}

LaurentPoly LaurentPoly::rebase(const VarSpecPtr& target) const {
  if (spec_ == target) return *this;
  std::vector<std::size_t> map(spec_->size());
  for (std::size_t i = 0; i < spec_->size(); ++i) {
    auto j = target->find(spec_->name(i));
    map[i] = j.value_or(SIZE_MAX);
  }
  LaurentPoly r(target);
  for (const auto& [m, c] : terms_) {
    Monomial out(target->size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (map[i] == SIZE_MAX)
        throw VarSpecMismatch("variable '" + spec_->name(i) + "' is absent from the target VarSpec");
      out[map[i]] = m[i];
    }
    r.check_monomial(out);
    r.add_term(out, c);
  }
  return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& z) const {
  check_same_ring(z);
  if (z.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (is_zero()) return LaurentPoly(spec_);

  // Strip the monomial content on invertible variables so both sides are
  // ordinary polynomials and z no longer has an invertible variable factor.
  auto content = [&](const LaurentPoly& p) {
    Monomial m(spec_->size());
    for (std::size_t i = 0; i < spec_->size(); ++i) {
      if (!spec_->invertible(i)) continue;
      int lo = INT_MAX;
      for (const auto& [t, c] : p.terms_) lo = std::min(lo, t[i]);
      m[i] = lo;
    }
    return m;
  };
  auto shift = [&](const LaurentPoly& p, const Monomial& by) {
    LaurentPoly r(spec_);
    for (const auto& [t, c] : p.terms_) r.terms_.emplace(t / by, c);
    return r;
  };
  Monomial mz = content(z), mf = content(*this);
  LaurentPoly z0 = shift(z, mz), rem = shift(*this, mf);

  const auto& [zlead, zcoef] = z0.leading();
  LaurentPoly q(spec_);
  while (!rem.is_zero()) {
    const auto& [rlead, rcoef] = rem.leading();
    if (!zlead.divides(rlead)) return std::nullopt;
    Monomial m = rlead / zlead;
    Rational c = rcoef / zcoef;
    q.add_term(m, c);
    for (const auto& [t, tc] : z0.terms_) rem.add_term(t * m, -(tc * c));
  }
  LaurentPoly out(spec_);
  Monomial scale = mf / mz;
  for (const auto& [t, c] : q.terms_) {
    Monomial mm = t * scale;
    out.check_monomial(mm);
    out.terms_.emplace(mm, c);
  }
  return out;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    bool unit = m.is_one();
    if (unit) {
      out += mag.str();
    } else {
      if (!mag.is_one()) out += (mag.is_integer() ? mag.str() : "(" + mag.str() + ")") + "*";
      out += to_string(m, *spec_);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

}  // namespace pq
