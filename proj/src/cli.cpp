#include "pq/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "pq/correspondence.hpp"
#include "pq/error.hpp"
#include "pq/expr.hpp"
#include "pq/reduction.hpp"
#include "pq/suites.hpp"

namespace pq {

using json = nlohmann::ordered_json;

namespace {

Rational rational_of(const json& j, const std::string& where) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw InvalidParams(where + ": expected a rational string or integer, got " + j.dump());
}

std::vector<Rational> vector_of(const json& j, int n, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw InvalidParams(where + ": expected an array of " + std::to_string(n) + " rationals");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_of(j[i], where));
  return out;
}

Matrix gamma_of(const json& j, int n, bool multiplicative) {
  Rational diag = multiplicative ? 1 : 0;
  Matrix g(n, std::vector<Rational>(n, diag));
  if (j.is_null()) {
    if (n > 1) throw InvalidParams("gamma: missing");
    return g;
  }
  if (j.is_string() || j.is_number_integer()) {
    if (n != 2) throw InvalidParams("gamma: a single entry is only accepted for n = 2");
    Rational v = rational_of(j, "gamma");
    g[0][1] = v;
    g[1][0] = multiplicative ? v.inverse() : -v;
    return g;
  }
  if (!j.is_array() || static_cast<int>(j.size()) != n) throw InvalidParams("gamma: expected an n x n matrix");
  for (int i = 0; i < n; ++i) g[i] = vector_of(j[i], n, "gamma row " + std::to_string(i + 1));
  return g;
}

std::string pretty_matrix(const std::vector<std::string>& labels, const Matrix& m) {
  std::size_t w = 1;
  for (const auto& l : labels) w = std::max(w, l.size());
  for (const auto& row : m)
    for (const auto& x : row) w = std::max(w, x.str().size());
  std::ostringstream os;
  auto cell = [&](const std::string& s) { os << std::string(w + 1 - s.size(), ' ') << s; };
  cell("");
  for (const auto& l : labels) cell(l);
  os << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    cell(labels[i]);
    for (const auto& x : m[i]) cell(x.str());
    os << '\n';
  }
  return os.str();
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.str());
    rows.push_back(r);
  }
  return rows;
}

json report_json(const CheckReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json j{{"name", c.name}, {"ok", c.ok}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(j);
  }
  return json{{"suite", r.title}, {"ok", r.ok()}, {"passed", r.checks.size() - r.failures()},
              {"total", r.checks.size()}, {"checks", checks}};
}

json error_json(const std::string& kind, const std::string& message, std::optional<std::size_t> offset = {}) {
  json e{{"kind", kind}, {"message", message}};
  if (offset) e["offset"] = *offset;
  return json{{"error", e}};
}

const PoissonParams& need_poisson(const Config& c) {
  if (!c.poisson) throw InvalidArgument("this command needs Poisson parameters (mode poisson or paired)");
  return *c.poisson;
}

const QuantumParams& need_quantum(const Config& c) {
  if (!c.quantum) throw InvalidArgument("this command needs quantum parameters (mode quantum or paired)");
  return *c.quantum;
}

std::vector<AdmissibleSet> strata_of(const Config& c) {
  if (c.admissible) return {*c.admissible};
  return enumerate(c.n);
}

void emit(std::ostream& out, const json& j, bool pretty) { out << (pretty ? j.dump(2) : j.dump()) << '\n'; }

}  // namespace

Config parse_config(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidParams(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidParams("config must be a JSON object");
  Config c;
  c.mode = j.value("mode", std::string("poisson"));
  if (c.mode != "poisson" && c.mode != "quantum" && c.mode != "paired")
    throw InvalidParams("mode must be poisson, quantum or paired");
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<int>() < 1)
    throw InvalidParams("n must be a positive integer");
  c.n = j["n"].get<int>();
  bool mult = c.mode != "poisson";
  Matrix gamma = gamma_of(j.contains("gamma") ? j["gamma"] : json(), c.n, mult);
  auto p = vector_of(j.value("p", json()), c.n, "p");
  auto q = vector_of(j.value("q", json()), c.n, "q");
  if (j.contains("phi_weights")) {
    if (!j["phi_weights"].is_object()) throw InvalidParams("phi_weights must map primes to rationals");
    for (const auto& [k, v] : j["phi_weights"].items()) {
      mpz_class prime;
      if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos || prime.set_str(k, 10) != 0 ||
          mpz_probab_prime_p(prime.get_mpz_t(), 30) == 0)
        throw InvalidParams("phi_weights key '" + k + "' is not a prime");
      c.weights[prime] = rational_of(v, "phi_weights");
    }
  }
  if (mult) {
    c.quantum = QuantumParams{c.n, gamma, p, q};
    c.quantum->validate();
    if (c.mode == "paired") {
      if (c.weights.empty()) throw InvalidParams("paired mode requires phi_weights");
      c.poisson = phi_hom(*c.quantum, c.weights).induced;
    }
  } else {
    c.poisson = PoissonParams{c.n, gamma, p, q};
    c.poisson->validate();
  }
  if (j.contains("admissible")) {
    std::vector<std::string> lits = j["admissible"].get<std::vector<std::string>>();
    auto t = AdmissibleSet::from_literals(c.n, lits);
    if (!t.is_admissible()) throw InvalidArgument("admissible: " + t.str() + " is not admissible");
    c.admissible = t;
  }
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Poisson / quantum algebra toolkit", "pqtool"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  std::string config_path;
  bool pretty = false;
  int samples = 100;
  std::uint64_t seed = 1;
  app.add_option("-c,--config", config_path, "JSON config file")->required();
  app.add_flag("--pretty", pretty, "human-readable output");
  app.add_option("--samples", samples, "random samples for confluence / associativity")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "RNG seed");

  std::vector<std::string> bracket_args;
  auto* cmd_bracket = app.add_subcommand("bracket", "Poisson bracket of two expressions");
  cmd_bracket->add_option("exprs", bracket_args)->expected(2)->required();

  std::string nf_arg;
  auto* cmd_nf = app.add_subcommand("nf", "normal form of an expression");
  cmd_nf->add_option("expr", nf_arg)->required();

  bool count = false, list = false, poset = false, dot = false;
  auto* cmd_adm = app.add_subcommand("admissible", "admissible sets for the configured n");
  cmd_adm->add_flag("--count", count);
  cmd_adm->add_flag("--list", list);
  cmd_adm->add_flag("--poset", poset);
  cmd_adm->add_flag("--dot", dot, "emit the poset as DOT");

  bool want_r = false, want_s = false;
  auto* cmd_mat = app.add_subcommand("matrices", "log-canonical / quantum-affine structure matrices");
  cmd_mat->add_flag("--r", want_r);
  cmd_mat->add_flag("--s", want_s);

  std::string suite;
  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember({"jacobi", "lemma2.3", "confluence", "kstable", "associativity", "psi", "upsilon", "all"}));

  auto* cmd_map = app.add_subcommand("map-report", "stratum-by-stratum correspondence report");

  std::vector<std::string> argv_store = args;
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    emit(err, error_json("usage", e.what()), false);
    return 2;
  }

  try {
    if (const char* env = std::getenv("PQ_STEP_BUDGET")) {
      char* end = nullptr;
      unsigned long long b = std::strtoull(env, &end, 10);
      if (!*env || *end || b == 0) throw InvalidArgument("PQ_STEP_BUDGET must be a positive integer");
      set_default_step_budget(static_cast<std::size_t>(b));
    }
    Config cfg = load_config(config_path);

    if (*cmd_bracket) {
      const auto& p = need_poisson(cfg);
      auto a = parse_expr(bracket_args[0]), b = parse_expr(bracket_args[1]);
      auto s = build_an(p);
      auto r = bracket(s, eval_poisson(*a, p), eval_poisson(*b, p));
      if (pretty)
        out << r.str() << '\n';
      else
        emit(out, json{{"result", r.str()}}, false);
    } else if (*cmd_nf) {
      auto e = parse_expr(nf_arg);
      std::string r;
      if (cfg.quantum) {
        r = eval_quantum(*e, QuantumAlgebra(*cfg.quantum)).str();
      } else {
        auto f = eval_poisson(*e, *cfg.poisson);
        if (cfg.admissible) f = reduce(f, quotient_system(*cfg.poisson, *cfg.admissible));
        r = f.str();
      }
      if (pretty)
        out << r << '\n';
      else
        emit(out, json{{"result", r}}, false);
    } else if (*cmd_adm) {
      if (poset || dot) {
        auto ps = stratum_poset(cfg.n);
        if (dot)
          out << ps.to_dot();
        else
          emit(out, json::parse(ps.to_json()), pretty);
      } else if (list) {
        json sets = json::array();
        for (const auto& t : enumerate(cfg.n)) {
          auto l = stratum_label(t);
          json eta = json::array();
          for (const auto& g : l.eta) eta.push_back(g.target_str());
          sets.push_back(json{{"T", t.str()}, {"eta", eta}, {"length", l.length}, {"gk_dim", l.gk_dim}});
        }
        if (pretty)
          for (const auto& s : sets) out << s["T"].get<std::string>() << '\n';
        else
          emit(out, json{{"n", cfg.n}, {"sets", sets}}, false);
      } else {
        auto total = enumerate(cfg.n).size();
        if (pretty)
          out << total << '\n';
        else
          emit(out, json{{"n", cfg.n}, {"count", total}}, false);
      }
    } else if (*cmd_mat) {
      if (!want_r && !want_s) want_r = cfg.poisson.has_value(), want_s = cfg.quantum.has_value();
      std::vector<std::string> labels;
      auto spec = an_varspec(cfg.n);
      for (const auto& name : spec->names())
        labels.push_back(std::string(1, static_cast<char>(std::toupper(name[0]))) + name.substr(1));
      json j{{"labels", labels}};
      std::string text;
      if (want_r) {
        auto m = r_matrix(need_poisson(cfg));
        j["r"] = matrix_json(m);
        text += "r\n" + pretty_matrix(labels, m);
      }
      if (want_s) {
        auto m = s_matrix(need_quantum(cfg));
        j["s"] = matrix_json(m);
        text += "s\n" + pretty_matrix(labels, m);
      }
      if (pretty)
        out << text;
      else
        emit(out, j, false);
    } else if (*cmd_verify) {
      auto ts = strata_of(cfg);
      std::vector<CheckReport> reports;
      auto run = [&](const std::string& name) {
        if (name == "jacobi") reports.push_back(suite_jacobi(need_poisson(cfg)));
        if (name == "lemma2.3") {
          auto r = verify_lemma_2_3(need_poisson(cfg));
          r.title = "lemma2.3";
          reports.push_back(r);
        }
        if (name == "confluence") reports.push_back(suite_confluence(need_poisson(cfg), ts, samples, seed));
        if (name == "kstable") reports.push_back(suite_kstable(need_poisson(cfg), ts));
        if (name == "psi") reports.push_back(suite_psi(need_poisson(cfg), ts));
        if (name == "associativity") reports.push_back(suite_associativity(need_quantum(cfg), samples, seed));
        if (name == "upsilon") reports.push_back(suite_upsilon(need_quantum(cfg), ts));
      };
      if (suite == "all") {
        if (cfg.poisson)
          for (auto s : {"jacobi", "lemma2.3", "confluence", "kstable", "psi"}) run(s);
        if (cfg.quantum)
          for (auto s : {"associativity", "upsilon"}) run(s);
      } else {
        run(suite);
      }
      bool ok = true;
      json arr = json::array();
      for (const auto& r : reports) {
        ok = ok && r.ok();
        arr.push_back(report_json(r));
      }
      if (pretty) {
        for (const auto& r : reports) {
          out << (r.ok() ? "PASS  " : "FAIL  ") << r.title << "  " << (r.checks.size() - r.failures()) << "/"
              << r.checks.size() << '\n';
          for (const auto& c : r.checks)
            if (!c.ok) out << "      " << c.name << ": " << c.detail << '\n';
        }
      } else {
        emit(out, json{{"suite", suite}, {"ok", ok}, {"suites", arr}}, false);
      }
      if (!ok) {
        std::string first;
        for (const auto& r : reports)
          if (auto* f = r.first_failure(); f && first.empty()) first = r.title + ": " + f->name;
        emit(err, error_json("verification_failure", first), false);
        return 1;
      }
    } else if (*cmd_map) {
      auto rep = quotient_map_report(need_quantum(cfg), cfg.weights);
      emit(out, json::parse(rep.to_json()), pretty);
      if (!rep.ok()) {
        emit(err, error_json("verification_failure", "map report has failing strata"), false);
        return 1;
      }
    }
  } catch (const SyntaxError& e) {
    emit(err, error_json(e.kind(), e.what(), e.offset()), false);
    return 2;
  } catch (const VerificationFailure& e) {
    emit(err, error_json(e.kind(), e.what()), false);
    return 1;
  } catch (const Error& e) {
    emit(err, error_json(e.kind(), e.what()), false);
    return 2;
  } catch (const std::exception& e) {
    emit(err, error_json("error", e.what()), false);
    return 2;
  }
  return 0;
}

}  // namespace pq
