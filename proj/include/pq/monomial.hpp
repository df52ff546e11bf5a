#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pq {

// Ordered list of variable names with a per-variable Laurent flag. The order
// is fixed for the life of an algebra and drives both printing and the
// monomial order.
class VarSpec {
 public:
  VarSpec() = default;
  explicit VarSpec(std::vector<std::string> names, std::vector<bool> invertible = {});

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  bool invertible(std::size_t i) const { return invertible_.at(i); }

  std::optional<std::size_t> find(std::string_view name) const;
  // Throws UnknownVariable.
  std::size_t index_of(std::string_view name) const;

  bool operator==(const VarSpec&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<bool> invertible_;
};

using VarSpecPtr = std::shared_ptr<const VarSpec>;

VarSpecPtr make_varspec(std::vector<std::string> names, std::vector<bool> invertible = {});

// Same names, Laurent flags set on the listed variables (in addition to any
// already set).
VarSpecPtr with_inverted(const VarSpec& spec, const std::vector<std::size_t>& invert);

// Exponent vector indexed by a VarSpec.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

  static Monomial unit(std::size_t nvars, std::size_t var, int power = 1);

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  // Sum of absolute exponents.
  long degree() const;
  bool is_one() const;
  bool has_negative() const;
  // Exponent-wise <=, as for ordinary (non-Laurent) monomial divisibility.
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  Monomial inverse() const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<int> exps_;
};

// Total degree first, ties broken by comparing exponents from the last
// variable backwards (larger exponent on a later variable wins).
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

std::string to_string(const Monomial& m, const VarSpec& spec);

}  // namespace pq
