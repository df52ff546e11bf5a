#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pq/error.hpp"
#include "pq/laurent_poly.hpp"

namespace pq {

// Bracket table {g_i, g_j} for i < j over a (Laurent) polynomial ring. The
// bracket of arbitrary elements is the unique biderivation extending it.
class PoissonStructure {
 public:
  using Table = std::map<std::pair<std::size_t, std::size_t>, LaurentPoly>;

  PoissonStructure() = default;
  PoissonStructure(VarSpecPtr spec, Table table);

  const VarSpecPtr& spec() const { return spec_; }
  std::size_t size() const { return spec_->size(); }
  const Table& table() const { return table_; }

  // {g_i, g_j} for any i, j (antisymmetric, zero on the diagonal).
  LaurentPoly entry(std::size_t i, std::size_t j) const;
  LaurentPoly generator(std::size_t i) const { return LaurentPoly::variable(spec_, i); }
  LaurentPoly generator(std::string_view name) const { return LaurentPoly::variable(spec_, name); }
  LaurentPoly constant(const Rational& c) const { return LaurentPoly(spec_, c); }

  // Set only by validated(), after the Jacobi identity checked out.
  bool is_validated() const { return validated_; }
  // Copy marked valid; throws VerificationFailure naming a failing triple.
  PoissonStructure validated() const;

  // Entry-by-entry equality with variables matched by name.
  bool same_table(const PoissonStructure& other) const;

 private:
  VarSpecPtr spec_;
  Table table_;
  bool validated_ = false;
};

LaurentPoly bracket(const PoissonStructure& s, const LaurentPoly& f, const LaurentPoly& g);

// {{f,g},h} + {{g,h},f} + {{h,f},g}
LaurentPoly jacobiator(const PoissonStructure& s, const LaurentPoly& f, const LaurentPoly& g,
                       const LaurentPoly& h);

struct JacobiFailure {
  std::size_t i, j, k;
  LaurentPoly value;
};

// First generator triple with a nonzero jacobiator, if any.
std::optional<JacobiFailure> find_jacobi_failure(const PoissonStructure& s);
bool jacobi_check(const PoissonStructure& s);

// A derivation given by its images on the generators, extended by Leibniz.
class Derivation {
 public:
  Derivation() = default;
  explicit Derivation(VarSpecPtr spec);
  Derivation(VarSpecPtr spec, std::vector<LaurentPoly> images);

  const VarSpecPtr& spec() const { return spec_; }
  const std::vector<LaurentPoly>& images() const { return images_; }
  const LaurentPoly& image(std::size_t i) const { return images_.at(i); }
  void set_image(std::size_t i, LaurentPoly p);

  LaurentPoly operator()(const LaurentPoly& f) const;

 private:
  VarSpecPtr spec_;
  std::vector<LaurentPoly> images_;
};

// Scaling derivation g_i -> w_i g_i.
Derivation diagonal_derivation(const VarSpecPtr& spec, const std::vector<Rational>& weights);
// Hamiltonian {a, -} restricted to the generators.
Derivation hamiltonian(const PoissonStructure& s, const LaurentPoly& a);

struct DerivationResidual {
  std::size_t i, j;
  LaurentPoly value;
};

// D({g_i,g_j}) - {D g_i, g_j} - {g_i, D g_j} for every pair with a nonzero value.
std::vector<DerivationResidual> derivation_residuals(const PoissonStructure& s, const Derivation& d);
bool derivation_check(const PoissonStructure& s, const Derivation& d);

// Residuals of the Poisson-Ore compatibility condition
//   delta({a,b}) - {delta a, b} - {a, delta b} = delta(a) alpha(b) - alpha(a) delta(b)
// on generator pairs.
std::vector<DerivationResidual> ore_residuals(const PoissonStructure& s, const Derivation& alpha,
                                              const Derivation& delta);

class CompatibilityError : public Error {
 public:
  CompatibilityError(const std::string& what, std::string pair, LaurentPoly residual)
      : Error(what), pair_(std::move(pair)), residual_(std::move(residual)) {}
  const char* kind() const noexcept override { return "compatibility_failure"; }
  const std::string& pair() const { return pair_; }
  const LaurentPoly& residual() const { return residual_; }

 private:
  std::string pair_;
  LaurentPoly residual_;
};

// A[x; alpha, delta]_p with {a, x} = alpha(a) x + delta(a).
PoissonStructure ore_extend(const PoissonStructure& s, const Derivation& alpha, const Derivation& delta,
                            const std::string& new_var);

// (A; alpha, beta, c, u): {a,y} = alpha(a) y, {a,x} = beta(a) x, {y,x} = c y x + u.
struct DoubleExtensionSpec {
  PoissonStructure base;
  Derivation alpha;
  Derivation beta;
  Rational c;
  LaurentPoly u;
  std::optional<Rational> d;  // eigenvalue with alpha(u) = d u, beta(u) = -d u
  std::string y_name = "y";
  std::string x_name = "x";
};

// Realized as A[y; alpha]_p[x; beta', delta]_p with beta'(y) = c y, delta(y) = u.
// Throws InvalidArgument naming the violated condition.
PoissonStructure double_extend(const DoubleExtensionSpec& spec);

// z = (c + d) y x + u in the double extension. Requires spec.d.
LaurentPoly normal_element(const DoubleExtensionSpec& spec, const PoissonStructure& extended);

// Same table over a VarSpec with the listed variables made invertible.
PoissonStructure localize(const PoissonStructure& s, const std::vector<std::string>& invert);

// When {g, z} = gamma(g) z for every generator g, the map g -> gamma(g).
std::optional<std::vector<LaurentPoly>> is_poisson_normal(const PoissonStructure& s, const LaurentPoly& z);

}  // namespace pq
