#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pq/admissible.hpp"
#include "pq/algebra_an.hpp"
#include "pq/algebra_kn.hpp"

namespace pq {

// Parsed config file. Rationals are JSON strings "a/b" or JSON integers.
//   {"mode": "poisson" | "quantum" | "paired", "n": 2,
//    "gamma": [["0", "1"], ["-1", "0"]] or a single string for n = 2,
//    "p": [...], "q": [...], "phi_weights": {"2": "1"}, "admissible": ["y1", "Omega1"]}
struct Config {
  std::string mode;
  int n = 0;
  std::optional<PoissonParams> poisson;  // given, or induced by phi in paired mode
  std::optional<QuantumParams> quantum;
  std::map<mpz_class, Rational> weights;
  std::optional<AdmissibleSet> admissible;
};

Config parse_config(std::string_view json_text);
Config load_config(const std::string& path);

// Full command line including the program name. Results go to `out`,
// error JSON to `err`. Returns the process exit status: 0 success,
// 1 verification failure, 2 any other error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pq
