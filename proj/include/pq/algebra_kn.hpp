#pragma once

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pq/algebra_an.hpp"
#include "pq/laurent_poly.hpp"
#include "pq/reduction.hpp"
#include "pq/report.hpp"

namespace pq {

// Multiplicative parameters: gamma_ji = gamma_ij^{-1}, gamma_ii = 1, all
// entries nonzero, p_i / q_i not in {1, -1}.
struct QuantumParams {
  int n = 0;
  Matrix gamma;
  std::vector<Rational> p, q;

  const Rational& g(int i, int j) const { return gamma.at(i - 1).at(j - 1); }
  const Rational& p_(int i) const { return p.at(i - 1); }
  const Rational& q_(int i) const { return q.at(i - 1); }

  void validate() const;  // throws InvalidParams
  // Signed products of 2^a 3^b with |a|, |b| <= 2.
  static QuantumParams random(int n, std::mt19937_64& rng);
};

QuantumParams cfg_q();

// Element of K_n: coefficients of the standard monomials
// y1^a1 x1^b1 ... yn^an xn^bn, stored as a LaurentPoly over an_varspec(n)
// whose terms are read as PBW words rather than commutative monomials.
struct NCElement {
  LaurentPoly pbw;

  NCElement() = default;
  explicit NCElement(LaurentPoly p) : pbw(std::move(p)) {}

  bool is_zero() const { return pbw.is_zero(); }
  std::string str() const { return pbw.str(); }

  friend NCElement operator+(const NCElement& a, const NCElement& b) { return NCElement(a.pbw + b.pbw); }
  friend NCElement operator-(const NCElement& a, const NCElement& b) { return NCElement(a.pbw - b.pbw); }
  friend NCElement operator*(const Rational& c, const NCElement& a) { return NCElement(c * a.pbw); }
  NCElement operator-() const { return NCElement(-pbw); }
  friend bool operator==(const NCElement& a, const NCElement& b) { return a.pbw == b.pbw; }
};

class QuantumAlgebra {
 public:
  explicit QuantumAlgebra(QuantumParams params);

  const QuantumParams& params() const { return params_; }
  const VarSpecPtr& spec() const { return spec_; }
  int n() const { return params_.n; }

  NCElement zero() const { return NCElement(LaurentPoly(spec_)); }
  NCElement constant(const Rational& c) const { return NCElement(LaurentPoly(spec_, c)); }
  NCElement generator(std::size_t index) const;
  NCElement generator(std::string_view name) const;
  // The standard monomial with the given exponents.
  NCElement standard(const Monomial& m, const Rational& c = 1) const;

  NCElement multiply(const NCElement& a, const NCElement& b, std::size_t budget = default_step_budget()) const;
  NCElement pow(const NCElement& a, int e) const;

  // Omega_i = sum_{k <= i} (q_k - p_k) y_k x_k; Omega_0 = 0.
  NCElement omega(int i) const;

 private:
  QuantumParams params_;
  VarSpecPtr spec_;
};

NCElement nc_multiply(const QuantumParams& params, const NCElement& f, const NCElement& g);
NCElement omega_q(const QuantumParams& params, int i);

struct NormalityReport {
  CheckReport report;
  std::vector<Rational> lambda;  // per generator g: Omega_i g = lambda g Omega_i
};
NormalityReport normality_check(const QuantumParams& params, int i);

// Multiplicative 2n x 2n matrix on Y1, X1, ..., Yn, Xn: X_a X_b = s_ab X_b X_a.
Matrix s_matrix(const QuantumParams& params);

// R(s) modulo the killed variables, localized at the inverted ones. Killed
// variables are dropped from the ring; elements are LaurentPolys over spec()
// whose terms are ordered monomials X_1^{u_1} ... X_m^{u_m}.
class QTorus {
 public:
  QTorus(const Matrix& s, const std::vector<std::string>& names, const std::set<std::string>& kill,
         const std::set<std::string>& invert);

  const VarSpecPtr& spec() const { return spec_; }
  bool killed(std::string_view name) const { return kill_.count(std::string(name)) > 0; }

  // Zero for a killed variable.
  LaurentPoly variable(std::string_view name) const;
  // Drops killed variables: any term touching one vanishes.
  LaurentPoly project(const LaurentPoly& full) const;

  // Scalar with X^u X^v = twist(u, v) X^{u+v}.
  Rational twist(const Monomial& u, const Monomial& v) const;
  LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b) const;
  LaurentPoly product(std::initializer_list<LaurentPoly> factors) const;
  // Two-sided inverse of c X^u; every variable in u must be invertible.
  LaurentPoly inverse(const LaurentPoly& monomial) const;

  const Matrix& matrix() const { return s_; }  // restricted to surviving variables

 private:
  VarSpecPtr spec_;
  Matrix s_;
  std::set<std::string> kill_;
};

QTorus qtorus(const QuantumParams& params, const std::set<std::string>& kill, const std::set<std::string>& invert);

}  // namespace pq
