#include "pq/monomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "pq/error.hpp"

namespace pq {

VarSpec::VarSpec(std::vector<std::string> names, std::vector<bool> invertible)
    : names_(std::move(names)), invertible_(std::move(invertible)) {
  if (invertible_.empty()) invertible_.assign(names_.size(), false);
  if (invertible_.size() != names_.size())
    throw InvalidArgument("VarSpec: invertible flags do not match the variable count");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InvalidArgument("VarSpec: empty variable name");
    if (!seen.insert(n).second) throw InvalidArgument("VarSpec: duplicate variable '" + n + "'");
  }
}

std::optional<std::size_t> VarSpec::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t VarSpec::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UnknownVariable("unknown variable '" + std::string(name) + "'");
}

VarSpecPtr make_varspec(std::vector<std::string> names, std::vector<bool> invertible) {
  return std::make_shared<const VarSpec>(std::move(names), std::move(invertible));
}

VarSpecPtr with_inverted(const VarSpec& spec, const std::vector<std::size_t>& invert) {
  std::vector<bool> flags(spec.size());
  for (std::size_t i = 0; i < spec.size(); ++i) flags[i] = spec.invertible(i);
  for (auto i : invert) {
    if (i >= spec.size()) throw UnknownVariable("variable index out of range");
    flags[i] = true;
  }
  return make_varspec(spec.names(), std::move(flags));
}

Monomial Monomial::unit(std::size_t nvars, std::size_t var, int power) {
  Monomial m(nvars);
  m.exps_.at(var) = power;
  return m;
}

long Monomial::degree() const {
  long d = 0;
  for (int e : exps_) d += std::abs(e);
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::has_negative() const {
  return std::any_of(exps_.begin(), exps_.end(), [](int e) { return e < 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= o.exps_[i];
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r(*this);
  for (auto& e : r.exps_) e = -e;
  return r;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  long da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

std::string to_string(const Monomial& m, const VarSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += spec.name(i);
    if (m[i] != 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace pq
