#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pq/algebra_an.hpp"
#include "pq/algebra_kn.hpp"
#include "pq/error.hpp"

namespace pq {

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset) : Error(what), offset_(offset) {}
  const char* kind() const noexcept override { return "syntax_error"; }
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Binary nodes are left-associative, so "a - b - c" is Diff(Diff(a, b), c).
// Neg only arises from a leading '-' on an expression.
struct Expr {
  enum class Kind { Number, Var, Neg, Sum, Diff, Product, Power, Bracket };
  using Ptr = std::shared_ptr<const Expr>;

  Kind kind = Kind::Number;
  Rational value;      // Number
  std::string name;    // Var: y<k>, x<k>, Y<k>, X<k>, Omega<k>
  long exponent = 0;   // Power
  std::vector<Ptr> kids;

  static Ptr number(Rational r);
  static Ptr var(std::string name);
  static Ptr neg(Ptr a);
  static Ptr binary(Kind k, Ptr a, Ptr b);
  static Ptr power(Ptr base, long e);
};

bool operator==(const Expr& a, const Expr& b);

Expr::Ptr parse_expr(std::string_view text);
// Canonical text; parse_expr(print_expr(e)) is structurally equal to e.
std::string print_expr(const Expr& e);

// Poisson mode: commutative polynomial in A_n with {,} from the params.
LaurentPoly eval_poisson(const Expr& e, const PoissonParams& params);
// Quantum mode: PBW normal form in K_n. Brackets are rejected.
NCElement eval_quantum(const Expr& e, const QuantumAlgebra& alg);

}  // namespace pq
