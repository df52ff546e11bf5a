#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pq/generators.hpp"
#include "pq/monomial.hpp"

namespace pq {

// Subset of {y_i, x_i, Omega_i : 1 <= i <= n}. Construction does not enforce
// admissibility; call is_admissible() or use enumerate().
class AdmissibleSet {
 public:
  AdmissibleSet() = default;
  explicit AdmissibleSet(int n) : y_(n), x_(n), omega_(n) {}
  // Literals such as {"y1", "Omega1"}; throws UnknownVariable on bad names
  // and InvalidArgument on indices above n.
  static AdmissibleSet from_literals(int n, const std::vector<std::string>& literals);
  // Bits 3(i-1), 3(i-1)+1, 3(i-1)+2 are y_i, x_i, Omega_i.
  static AdmissibleSet from_mask(int n, unsigned long mask);

  int n() const { return static_cast<int>(y_.size()); }
  bool y(int i) const { return y_.at(i - 1); }
  bool x(int i) const { return x_.at(i - 1); }
  bool omega(int i) const { return i == 0 ? false : omega_.at(i - 1); }
  bool contains(const GenRef& g) const;
  void insert(const GenRef& g);

  // Ordered y1, x1, Omega1, y2, ...
  std::vector<GenRef> members() const;
  std::size_t size() const { return members().size(); }
  bool empty() const { return members().empty(); }
  bool subset_of(const AdmissibleSet& other) const;

  // (y_i or x_i in T) iff (Omega_i and Omega_{i-1} in T), with Omega_0 read
  // as present for i = 1.
  bool is_admissible() const;

  std::string str() const;

  bool operator==(const AdmissibleSet&) const = default;
  // Canonical order: lexicographic on (omega, y, x) bit vectors.
  std::strong_ordering operator<=>(const AdmissibleSet& o) const;

 private:
  std::vector<bool> y_, x_, omega_;
};

// All admissible sets for n, canonically ordered, built by level recursion.
std::vector<AdmissibleSet> enumerate(int n);
// Same list by filtering all 2^{3n} subsets.
std::vector<AdmissibleSet> enumerate_brute_force(int n);

struct DerivedSets {
  std::vector<Monomial> a_t;        // over an_varspec(n): y_i, x_i, y_i x_i
  std::vector<GenRef> s_t;
  std::vector<GenRef> n_t;          // also the generators of E_T
  std::vector<GenRef> y_t;          // y_i not in T, generating the multiplicative set Y_T
  std::vector<GenRef> u_t;          // Y_i for y_i not in T (target side)
  std::vector<GenRef> eta;          // Y_i / X_i (target side)
};

DerivedSets derived_sets(const AdmissibleSet& t);
int length(const AdmissibleSet& t);
std::vector<GenRef> eta(const AdmissibleSet& t);
int gk_dimension(const AdmissibleSet& t);

struct GrowthReport {
  std::vector<mpz_class> counts;  // standard monomials of degree <= d, d = 0..max_degree
  int expected_degree = 0;
  int observed_degree = -1;       // -1 when no difference order vanishes within range
  bool ok = false;
};

// Counts monomials in y1..xn not divisible by any element of A_T and reads
// their polynomial growth degree from exact finite differences.
GrowthReport growth_check(const AdmissibleSet& t, int max_degree = 12);

bool eta_injectivity(int n);

struct StratumLabel {
  AdmissibleSet t;
  std::vector<GenRef> eta;
  int length = 0;
  int gk_dim = 0;
};

StratumLabel stratum_label(const AdmissibleSet& t);

// Hasse diagram of inclusion among admissible sets.
struct StratumPoset {
  std::vector<StratumLabel> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (smaller, larger)

  std::string to_dot() const;
  std::string to_json() const;
};

StratumPoset stratum_poset(int n);

}  // namespace pq
