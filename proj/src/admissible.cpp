#include "pq/admissible.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "pq/error.hpp"

namespace pq {

namespace {

std::strong_ordering compare_bits(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    if (a[i] != b[i]) return a[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  return a.size() <=> b.size();
}

std::vector<std::string> names(const std::vector<GenRef>& gens, bool target) {
  std::vector<std::string> out;
  for (const auto& g : gens) out.push_back(target ? g.target_str() : g.str());
  return out;
}

std::string join_braced(const std::vector<std::string>& items) {
  std::string s = "{";
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
  return s + "}";
}

}  // namespace

AdmissibleSet AdmissibleSet::from_literals(int n, const std::vector<std::string>& literals) {
  AdmissibleSet t(n);
  for (const auto& lit : literals) {
    GenRef g = parse_genref(lit);
    if (g.index > n) throw InvalidArgument("generator " + lit + " out of range for n = " + std::to_string(n));
    t.insert(g);
  }
  return t;
}

AdmissibleSet AdmissibleSet::from_mask(int n, unsigned long mask) {
  AdmissibleSet t(n);
  for (int i = 0; i < n; ++i) {
    t.y_[i] = (mask >> (3 * i)) & 1;
    t.x_[i] = (mask >> (3 * i + 1)) & 1;
    t.omega_[i] = (mask >> (3 * i + 2)) & 1;
  }
  return t;
}

bool AdmissibleSet::contains(const GenRef& g) const {
  if (g.index < 1 || g.index > n()) return false;
  switch (g.kind) {
    case GenKind::Y: return y(g.index);
    case GenKind::X: return x(g.index);
    case GenKind::Omega: return omega(g.index);
  }
  return false;
}

void AdmissibleSet::insert(const GenRef& g) {
  if (g.index < 1 || g.index > n()) throw InvalidArgument("generator " + g.str() + " out of range");
  switch (g.kind) {
    case GenKind::Y: y_[g.index - 1] = true; break;
    case GenKind::X: x_[g.index - 1] = true; break;
    case GenKind::Omega: omega_[g.index - 1] = true; break;
  }
}

std::vector<GenRef> AdmissibleSet::members() const {
  std::vector<GenRef> out;
  for (int i = 1; i <= n(); ++i) {
    if (y(i)) out.push_back({GenKind::Y, i});
    if (x(i)) out.push_back({GenKind::X, i});
    if (omega(i)) out.push_back({GenKind::Omega, i});
  }
  return out;
}

bool AdmissibleSet::subset_of(const AdmissibleSet& o) const {
  if (n() != o.n()) return false;
  for (int i = 1; i <= n(); ++i)
    if ((y(i) && !o.y(i)) || (x(i) && !o.x(i)) || (omega(i) && !o.omega(i))) return false;
  return true;
}

bool AdmissibleSet::is_admissible() const {
  for (int i = 1; i <= n(); ++i) {
    bool lower = i == 1 || omega(i - 1);
    if ((y(i) || x(i)) != (omega(i) && lower)) return false;
  }
  return true;
}

std::string AdmissibleSet::str() const { return join_braced(names(members(), false)); }

std::strong_ordering AdmissibleSet::operator<=>(const AdmissibleSet& o) const {
  if (auto c = compare_bits(omega_, o.omega_); c != 0) return c;
  if (auto c = compare_bits(y_, o.y_); c != 0) return c;
  return compare_bits(x_, o.x_);
}

std::vector<AdmissibleSet> enumerate(int n) {
  if (n < 0) throw InvalidArgument("n must be nonnegative");
  std::vector<AdmissibleSet> level{AdmissibleSet(0)};
  for (int k = 1; k <= n; ++k) {
    std::vector<AdmissibleSet> next;
    for (const auto& prev : level) {
      AdmissibleSet base(k);
      for (const auto& g : prev.members()) base.insert(g);
      const bool lower = k == 1 || prev.omega(k - 1);
      next.push_back(base);
      if (!lower) {
        base.insert({GenKind::Omega, k});
        next.push_back(base);
        continue;
      }
      for (int bits = 1; bits <= 3; ++bits) {
        AdmissibleSet t = base;
        t.insert({GenKind::Omega, k});
        if (bits & 1) t.insert({GenKind::Y, k});
        if (bits & 2) t.insert({GenKind::X, k});
        next.push_back(t);
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  return level;
}

std::vector<AdmissibleSet> enumerate_brute_force(int n) {
  if (n < 0 || n > 8) throw InvalidArgument("brute force enumeration supports 0 <= n <= 8");
  std::vector<AdmissibleSet> out;
  for (unsigned long mask = 0; mask < (1UL << (3 * n)); ++mask) {
    AdmissibleSet t = AdmissibleSet::from_mask(n, mask);
    if (t.is_admissible()) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

DerivedSets derived_sets(const AdmissibleSet& t) {
  const int n = t.n();
  DerivedSets d;
  const std::size_t nv = static_cast<std::size_t>(2 * n);
  for (int i = 1; i <= n; ++i) {
    if (t.y(i)) d.a_t.push_back(Monomial::unit(nv, y_index(i)));
    if (t.x(i)) d.a_t.push_back(Monomial::unit(nv, x_index(i)));
    if (t.omega(i) && !t.y(i) && !t.x(i))
      d.a_t.push_back(Monomial::unit(nv, y_index(i)) * Monomial::unit(nv, x_index(i)));
  }
  for (int i = 1; i <= n; ++i) {
    if (t.y(i)) d.s_t.push_back({GenKind::Y, i});
    if (t.x(i)) d.s_t.push_back({GenKind::X, i});
  }
  for (int i = 1; i <= n; ++i)
    if (t.omega(i) && !t.y(i) && !t.x(i)) d.s_t.push_back({GenKind::Omega, i});

  for (int i = 1; i <= n; ++i) {
    if (i == 1) {
      if (!t.y(1)) d.n_t.push_back({GenKind::Y, 1});
      if (!t.x(1)) d.n_t.push_back({GenKind::X, 1});
      continue;
    }
    if (!t.omega(i - 1) && !t.omega(i)) d.n_t.push_back({GenKind::Omega, i});
    if (t.omega(i - 1) && !t.y(i)) d.n_t.push_back({GenKind::Y, i});
    if (t.omega(i - 1) && !t.x(i)) d.n_t.push_back({GenKind::X, i});
  }

  for (int i = 1; i <= n; ++i)
    if (!t.y(i)) {
      d.y_t.push_back({GenKind::Y, i});
      d.u_t.push_back({GenKind::Y, i});
    }
  d.eta = eta(t);
  return d;
}

std::vector<GenRef> eta(const AdmissibleSet& t) {
  std::vector<GenRef> out;
  for (int i = 1; i <= t.n(); ++i) {
    if (t.y(i)) out.push_back({GenKind::Y, i});
    if (t.x(i) || (t.omega(i) && !t.y(i) && !t.x(i))) out.push_back({GenKind::X, i});
  }
  return out;
}

int length(const AdmissibleSet& t) { return static_cast<int>(derived_sets(t).s_t.size()); }

int gk_dimension(const AdmissibleSet& t) { return 2 * t.n() - length(t); }

GrowthReport growth_check(const AdmissibleSet& t, int max_degree) {
  if (max_degree < 1) throw InvalidArgument("growth check needs max_degree >= 1");
  GrowthReport r;
  r.expected_degree = gk_dimension(t);
  const auto forbidden = derived_sets(t).a_t;
  const std::size_t nv = static_cast<std::size_t>(2 * t.n());
  std::vector<mpz_class> by_degree(static_cast<std::size_t>(max_degree) + 1, 0);
  Monomial m(nv);
  std::function<void(std::size_t, int)> walk = [&](std::size_t var, int used) {
    if (var == nv) {
      for (const auto& a : forbidden)
        if (a.divides(m)) return;
      by_degree[static_cast<std::size_t>(used)] += 1;
      return;
    }
    for (int e = 0; used + e <= max_degree; ++e) {
      m[var] = e;
      walk(var + 1, used + e);
    }
    m[var] = 0;
  };
  walk(0, 0);

  mpz_class running = 0;
  for (const auto& c : by_degree) r.counts.push_back(running += c);

  std::vector<mpz_class> diff = r.counts;
  for (int k = 0; diff.size() > 1; ++k) {
    std::vector<mpz_class> next;
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) next.push_back(diff[i + 1] - diff[i]);
    if (std::all_of(next.begin(), next.end(), [](const mpz_class& v) { return v == 0; })) {
      r.observed_degree = k;
      break;
    }
    diff = std::move(next);
  }
  r.ok = r.observed_degree == r.expected_degree;
  return r;
}

bool eta_injectivity(int n) {
  std::vector<std::vector<GenRef>> images;
  for (const auto& t : enumerate(n)) images.push_back(eta(t));
  std::sort(images.begin(), images.end());
  return std::adjacent_find(images.begin(), images.end()) == images.end();
}

StratumLabel stratum_label(const AdmissibleSet& t) {
  return {t, eta(t), length(t), gk_dimension(t)};
}

StratumPoset stratum_poset(int n) {
  StratumPoset p;
  auto sets = enumerate(n);
  for (const auto& t : sets) p.nodes.push_back(stratum_label(t));
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = 0; b < sets.size(); ++b) {
      if (a == b || !sets[a].subset_of(sets[b])) continue;
      bool covered = true;
      for (std::size_t c = 0; c < sets.size() && covered; ++c)
        if (c != a && c != b && sets[a].subset_of(sets[c]) && sets[c].subset_of(sets[b])) covered = false;
      if (covered) p.edges.emplace_back(a, b);
    }
  return p;
}

std::string StratumPoset::to_dot() const {
  std::ostringstream os;
  os << "digraph strata {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << nodes[i].t.str() << "\\neta=" << join_braced(names(nodes[i].eta, true))
       << "\\ngk=" << nodes[i].gk_dim << "\"];\n";
  for (const auto& [a, b] : edges) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string StratumPoset::to_json() const {
  nlohmann::ordered_json j;
  j["nodes"] = nlohmann::ordered_json::array();
  for (const auto& s : nodes)
    j["nodes"].push_back({{"T", names(s.t.members(), false)},
                          {"eta", names(s.eta, true)},
                          {"length", s.length},
                          {"gk_dim", s.gk_dim}});
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : edges) j["edges"].push_back({a, b});
  return j.dump(2);
}

}  // namespace pq
