#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pq/admissible.hpp"
#include "pq/algebra_an.hpp"
#include "pq/algebra_kn.hpp"
#include "pq/report.hpp"

namespace pq {

// Random polynomial with coefficients in [-4, 4], total degree <= max_degree
// per term. Exponents stay nonnegative.
LaurentPoly random_polynomial(const VarSpecPtr& spec, std::mt19937_64& rng, int max_degree = 3, int max_terms = 4);

// Generator-triple antisymmetry, Leibniz on products and Jacobi.
CheckReport suite_jacobi(const PoissonParams& params);

// Normal form under the quotient rules does not depend on rule order.
CheckReport suite_confluence(const PoissonParams& params, const std::vector<AdmissibleSet>& ts, int samples,
                             std::uint64_t seed);

// <T> is a Poisson ideal stable under every K-derivation.
CheckReport suite_kstable(const PoissonParams& params, const std::vector<AdmissibleSet>& ts);

CheckReport suite_associativity(const QuantumParams& params, int samples, std::uint64_t seed, int max_degree = 4);

CheckReport suite_psi(const PoissonParams& params, const std::vector<AdmissibleSet>& ts);
CheckReport suite_upsilon(const QuantumParams& params, const std::vector<AdmissibleSet>& ts);

}  // namespace pq
