#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "pq/laurent_poly.hpp"

namespace pq {

inline constexpr std::size_t kDefaultStepBudget = 1'000'000;

// Process-wide default for rewrite step budgets; the CLI sets it from the
// environment before doing any work.
std::size_t default_step_budget();
void set_default_step_budget(std::size_t steps);

// lead -> replacement, read as the relation lead = replacement.
struct RewriteRule {
  Monomial lead;
  LaurentPoly replacement;
};

// Commutative monomial rewriting system. Every replacement is strictly
// smaller than its lead under MonomialLess and leads are pairwise distinct.
class ReductionSystem {
 public:
  explicit ReductionSystem(VarSpecPtr spec) : spec_(std::move(spec)) {}
  ReductionSystem(VarSpecPtr spec, std::vector<RewriteRule> rules);

  const VarSpecPtr& spec() const { return spec_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  bool empty() const { return rules_.empty(); }

 private:
  VarSpecPtr spec_;
  std::vector<RewriteRule> rules_;
};

// Normal form: repeatedly rewrites the largest reducible term.
LaurentPoly reduce(const LaurentPoly& f, const ReductionSystem& rules,
                   std::size_t budget = default_step_budget());

// Same normal form reached by picking a random reducible term and a random
// applicable rule at every step. Used to probe confluence.
LaurentPoly reduce_randomized(const LaurentPoly& f, const ReductionSystem& rules, std::mt19937_64& rng,
                              std::size_t budget = default_step_budget());

bool is_normal_form(const LaurentPoly& f, const ReductionSystem& rules);

}  // namespace pq
