#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pq/monomial.hpp"
#include "pq/rational.hpp"

namespace pq {

// Finite sum of rational multiples of Laurent monomials over a VarSpec.
// Negative exponents are only admitted on variables flagged invertible.
// Zero coefficients are never stored, so structural equality is equality.
class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialLess>;

  LaurentPoly() = default;
  explicit LaurentPoly(VarSpecPtr spec) : spec_(std::move(spec)) {}
  LaurentPoly(VarSpecPtr spec, const Rational& constant);

  static LaurentPoly variable(VarSpecPtr spec, std::size_t index);
  static LaurentPoly variable(VarSpecPtr spec, std::string_view name);
  static LaurentPoly term(VarSpecPtr spec, Monomial m, const Rational& coef = 1);

  const VarSpecPtr& spec() const { return spec_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Nonzero single term c*m.
  bool is_monomial() const { return terms_.size() == 1; }

  // Largest term under MonomialLess. Precondition: nonzero.
  const std::pair<const Monomial, Rational>& leading() const;
  Rational coefficient(const Monomial& m) const;
  long degree() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly pow(long e) const;
  LaurentPoly derivative(std::size_t var) const;
  LaurentPoly derivative(std::string_view name) const;

  // Inverse of a single-term element whose variables are all invertible
  // where the inverse needs them.
  LaurentPoly monomial_inverse() const;

  // Ring homomorphism defined by images of the variables, all over `target`.
  LaurentPoly substitute(const std::vector<LaurentPoly>& images, const VarSpecPtr& target) const;

  // Re-express over another VarSpec, matching variables by name.
  LaurentPoly rebase(const VarSpecPtr& target) const;

  // Exact quotient f/z when z divides f in the (Laurent) ring, otherwise empty.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& z) const;

  std::string str() const;

  void add_term(const Monomial& m, const Rational& c);

 private:
  void check_same_ring(const LaurentPoly& o) const;
  void check_monomial(const Monomial& m) const;

  VarSpecPtr spec_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace pq
