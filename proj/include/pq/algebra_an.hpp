#pragma once

#include <random>
#include <vector>

#include "pq/admissible.hpp"
#include "pq/poisson.hpp"
#include "pq/reduction.hpp"
#include "pq/report.hpp"

namespace pq {

using Matrix = std::vector<std::vector<Rational>>;

// Additive parameters: Gamma skew-symmetric, p_i != q_i.
struct PoissonParams {
  int n = 0;
  Matrix gamma;  // 0-based n x n
  std::vector<Rational> p, q;

  const Rational& g(int i, int j) const { return gamma.at(i - 1).at(j - 1); }
  const Rational& p_(int i) const { return p.at(i - 1); }
  const Rational& q_(int i) const { return q.at(i - 1); }

  // Throws InvalidParams.
  void validate() const;
  // Leading m-variable block (m <= n).
  PoissonParams truncated(int m) const;
  // Small integers, rejection on p_i = q_i.
  static PoissonParams random(int n, std::mt19937_64& rng, int bound = 5);
};

PoissonParams cfg_a();
PoissonParams cfg_phi();

PoissonStructure build_an(const PoissonParams& params);

// sum_{k <= i} (q_k - p_k) y_k x_k over an_varspec(params.n); Omega_0 = 0.
LaurentPoly omega(const PoissonParams& params, int i);

// One double-extension step A_j = (A_{j-1}; alpha_j, beta_j, c_j, u_j) with
// the eigenvalue d_j of u_j.
struct IteratedLevel {
  int j = 0;
  PoissonStructure base;  // A_{j-1}
  Derivation alpha, beta, delta;  // delta on A_{j-1}[y_j]
  Rational c, d;
  LaurentPoly u;

  DoubleExtensionSpec spec(const PoissonStructure& on_base) const;
};

struct IteratedPresentation {
  std::vector<IteratedLevel> levels;  // levels[j-1]
  std::vector<LaurentPoly> omegas;    // Omega_0..Omega_n over an_varspec(n)
};

IteratedPresentation iterated_presentation(const PoissonParams& params);
// Rebuilds A_n by n double extensions and compares with build_an.
CheckReport consistency_check(const PoissonParams& params);
// Poisson normality of z_j = (c_j + d_j) y_j x_j + u_j at every level, with
// {a,z} = (alpha+beta)(a) z, {y,z} = c y z, {x,z} = -c x z.
CheckReport level_normality_check(const PoissonParams& params);

CheckReport verify_lemma_2_3(const PoissonParams& params);

// h in Q^{2n} with h_{2i-1} + h_{2i} independent of i.
struct KElement {
  std::vector<Rational> h;
  bool in_k() const;
};

Derivation k_derivation(const PoissonParams& params, const KElement& h);
// Throws InvalidArgument when h is not in K.
LaurentPoly k_action(const PoissonParams& params, const KElement& h, const LaurentPoly& f);
// Z-basis-like spanning set of K: e_{2i-1} - e_{2i} for each i, and (1,0,1,0,...).
std::vector<KElement> k_basis(int n);

struct EigenData {
  KElement f, g;
  CheckReport report;
};
EigenData theorem_3_6_eigendata(const PoissonParams& params);

// 2n x 2n log-canonical matrix on Y1, X1, ..., Yn, Xn.
Matrix r_matrix(const PoissonParams& params);

// Throws InvalidArgument when T is not admissible for params.n.
ReductionSystem quotient_system(const PoissonParams& params, const AdmissibleSet& t);

}  // namespace pq
