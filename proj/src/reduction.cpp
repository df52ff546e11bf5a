#include "pq/reduction.hpp"

#include <atomic>
#include <set>

#include "pq/error.hpp"

namespace pq {

namespace {

std::atomic<std::size_t> g_step_budget{kDefaultStepBudget};

void apply_rule(LaurentPoly& f, const Monomial& m, const Rational& c, const RewriteRule& rule) {
  Monomial cofactor = m / rule.lead;
  f.add_term(m, -c);
  for (const auto& [t, tc] : rule.replacement.terms()) f.add_term(t * cofactor, tc * c);
}

[[noreturn]] void out_of_budget(std::size_t budget) {
  throw StepBudgetExceeded("reduction exceeded " + std::to_string(budget) +
                           " rewrite steps; the rule system is not terminating");
}

}  // namespace

std::size_t default_step_budget() { return g_step_budget.load(std::memory_order_relaxed); }

void set_default_step_budget(std::size_t steps) {
  if (steps == 0) throw InvalidArgument("step budget must be positive");
  g_step_budget.store(steps, std::memory_order_relaxed);
}

ReductionSystem::ReductionSystem(VarSpecPtr spec, std::vector<RewriteRule> rules)
    : spec_(std::move(spec)), rules_(std::move(rules)) {
  std::set<Monomial, MonomialLess> leads;
  MonomialLess less;
  for (const auto& r : rules_) {
    if (r.lead.size() != spec_->size()) throw InvalidArgument("rule lead does not match the VarSpec");
    if (r.lead.has_negative()) throw InvalidArgument("rule lead must be an ordinary monomial");
    if (!leads.insert(r.lead).second)
      throw InvalidArgument("duplicate rule lead " + to_string(r.lead, *spec_));
    if (!r.replacement.is_zero() && !less(r.replacement.leading().first, r.lead))
      throw InvalidArgument("rule " + to_string(r.lead, *spec_) + " -> " + r.replacement.str() +
                            " does not decrease the monomial order");
  }
}

LaurentPoly reduce(const LaurentPoly& f, const ReductionSystem& rules, std::size_t budget) {
  LaurentPoly g = f.rebase(rules.spec());
  if (rules.empty()) return g;
  std::size_t steps = 0;
  for (;;) {
    const RewriteRule* rule = nullptr;
    auto it = g.terms().rbegin();
    for (; it != g.terms().rend() && !rule; ++it)
      for (const auto& r : rules.rules())
        if (r.lead.divides(it->first)) {
          rule = &r;
          break;
        }
    if (!rule) return g;
    if (++steps > budget) out_of_budget(budget);
    --it;
    Monomial m = it->first;
    Rational c = it->second;
    apply_rule(g, m, c, *rule);
  }
}

LaurentPoly reduce_randomized(const LaurentPoly& f, const ReductionSystem& rules, std::mt19937_64& rng,
                              std::size_t budget) {
  LaurentPoly g = f.rebase(rules.spec());
  std::size_t steps = 0;
  std::vector<std::pair<Monomial, std::size_t>> candidates;
  for (;;) {
    candidates.clear();
    for (const auto& [m, c] : g.terms())
      for (std::size_t r = 0; r < rules.rules().size(); ++r)
        if (rules.rules()[r].lead.divides(m)) candidates.emplace_back(m, r);
    if (candidates.empty()) return g;
    if (++steps > budget) out_of_budget(budget);
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    const auto& [m, r] = candidates[pick(rng)];
    Rational c = g.coefficient(m);
    apply_rule(g, m, c, rules.rules()[r]);
  }
}

bool is_normal_form(const LaurentPoly& f, const ReductionSystem& rules) {
  for (const auto& [m, c] : f.terms())
    for (const auto& rule : rules.rules())
      if (rule.lead.divides(m)) return false;
  return true;
}

}  // namespace pq
