#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pq/admissible.hpp"
#include "pq/algebra_an.hpp"
#include "pq/algebra_kn.hpp"
#include "pq/group.hpp"
#include "pq/report.hpp"

namespace pq {

// Shape of the image of a generator under either stratum map.
enum class ImageCase {
  Zero,      // generator lies in T
  Plain,     // Y_i or X_i
  TailOnly,  // -c Y_i^{-1} Y_{i-1} X_{i-1}   (Omega_i in T, y_i, x_i not)
  Shifted,   // X_i - c Y_i^{-1} Y_{i-1} X_{i-1}
};

const char* to_string(ImageCase c);

// One entry per generator y1, x1, ..., yn, xn. Shared by both maps.
std::vector<ImageCase> image_cases(const AdmissibleSet& t);

// (q_i - p_i)^{-1} (q_{i-1} - p_{i-1}), for i >= 2.
Rational shift_coefficient(const std::vector<Rational>& p, const std::vector<Rational>& q, int i);

// Target data shared by both maps: kill eta(T), invert Y_i for y_i not in T.
std::set<std::string> kill_set(const AdmissibleSet& t);
std::set<std::string> invert_set(const AdmissibleSet& t);

struct PsiMap {
  AdmissibleSet t;
  PoissonStructure target;
  std::vector<LaurentPoly> images;
  std::vector<ImageCase> cases;

  LaurentPoly apply(const LaurentPoly& f) const;  // f over an_varspec(n)
};

// Throws InvalidArgument for a non-admissible T.
PsiMap psi_prime(const PoissonParams& params, const AdmissibleSet& t);
CheckReport verify_psi(const PoissonParams& params, const AdmissibleSet& t);
// For T subset of T': Psi'_T(g) = Psi'_{T'}(g) modulo <eta(T')> on every
// generator. Generators whose Psi'_T image needs Y_i^{-1} with y_i in T' \ T
// have no image in the common ring and are reported as skipped (ok = true,
// detail starts with "skipped").
CheckReport verify_psi_nested(const PoissonParams& params, const AdmissibleSet& t, const AdmissibleSet& t2);

struct UpsilonMap {
  AdmissibleSet t;
  QTorus target;
  std::vector<LaurentPoly> images;
  std::vector<ImageCase> cases;

  LaurentPoly apply(const NCElement& f) const;
};

UpsilonMap upsilon_prime(const QuantumParams& params, const AdmissibleSet& t);
CheckReport verify_upsilon(const QuantumParams& params, const AdmissibleSet& t);

struct PhiSpec {
  std::map<mpz_class, Rational> weights;
  PoissonParams induced;
  GroupAnalysis group;
  bool injective_on_group = false;  // on the torsion-free part
  bool minus_one_in_group = false;
};

// sum_p e_p(r) w_p; the sign of r is ignored.
Rational phi_value(const std::map<mpz_class, Rational>& weights, const Rational& r);

// Empty weights mean {p -> 1} when a single prime occurs. Throws
// InvalidArgument for missing weights and InvalidParams when phi(p_i) = phi(q_i).
PhiSpec phi_hom(const QuantumParams& params, std::map<mpz_class, Rational> weights = {});

struct StratumRecord {
  StratumLabel label;
  std::vector<std::string> psi_images, upsilon_images;
  std::vector<ImageCase> cases;
  bool psi_ok = false, upsilon_ok = false;
  std::string psi_failure, upsilon_failure;
};

struct MapReport {
  QuantumParams params;
  PhiSpec phi;
  std::vector<StratumRecord> strata;
  std::string grade;  // "homeomorphism" or "quotient"

  bool ok() const;
  std::string to_json() const;
};

// Throws VerificationFailure when -1 lies in the parameter group.
MapReport quotient_map_report(const QuantumParams& params, std::map<mpz_class, Rational> weights = {});

}  // namespace pq
