#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "pq/monomial.hpp"

namespace pq {

// Names a generator of A_n / K_n (y_i, x_i, Omega_i) or, with target = true,
// of the attached torus algebra (Y_i, X_i). Indices are 1-based.
enum class GenKind { Y, X, Omega };

struct GenRef {
  GenKind kind = GenKind::Y;
  int index = 1;

  auto operator<=>(const GenRef&) const = default;
  std::string str() const;         // y1, x1, Omega1
  std::string target_str() const;  // Y1, X1
};

// Accepts y<k>, x<k>, Omega<k> (and Y<k>, X<k> when target is true).
GenRef parse_genref(std::string_view text, bool target = false);

// Variables y1, x1, ..., yn, xn in that order.
VarSpecPtr an_varspec(int n, std::string_view y = "y", std::string_view x = "x");
inline std::size_t y_index(int i) { return static_cast<std::size_t>(2 * (i - 1)); }
inline std::size_t x_index(int i) { return static_cast<std::size_t>(2 * (i - 1) + 1); }

}  // namespace pq
