#include "pq/expr.hpp"

#include <cctype>
#include <charconv>

#include "pq/poisson.hpp"

namespace pq {

Expr::Ptr Expr::number(Rational r) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Number;
  e->value = std::move(r);
  return e;
}

Expr::Ptr Expr::var(std::string name) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Var;
  e->name = std::move(name);
  return e;
}

Expr::Ptr Expr::neg(Ptr a) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Neg;
  e->kids = {std::move(a)};
  return e;
}

Expr::Ptr Expr::binary(Kind k, Ptr a, Ptr b) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->kids = {std::move(a), std::move(b)};
  return e;
}

Expr::Ptr Expr::power(Ptr base, long exponent) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Power;
  e->exponent = exponent;
  e->kids = {std::move(base)};
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.kids.size() != b.kids.size()) return false;
  switch (a.kind) {
    case Expr::Kind::Number:
      if (a.value != b.value) return false;
      break;
    case Expr::Kind::Var:
      if (a.name != b.name) return false;
      break;
    case Expr::Kind::Power:
      if (a.exponent != b.exponent) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a.kids.size(); ++i)
    if (!(*a.kids[i] == *b.kids[i])) return false;
  return true;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Expr::Ptr run() {
    auto e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg + " at offset " + std::to_string(pos_), pos_);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == '{' || std::isalpha(static_cast<unsigned char>(c));
  }

  Expr::Ptr expr() {
    Expr::Ptr e;
    if (peek('-')) {
      ++pos_;
      e = Expr::neg(term());
    } else {
      e = term();
    }
    for (;;) {
      if (peek('+')) {
        ++pos_;
        e = Expr::binary(Expr::Kind::Sum, e, term());
      } else if (peek('-')) {
        ++pos_;
        e = Expr::binary(Expr::Kind::Diff, e, term());
      } else {
        return e;
      }
    }
  }

  Expr::Ptr term() {
    auto e = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        e = Expr::binary(Expr::Kind::Product, e, factor());
      } else if (starts_factor()) {
        e = Expr::binary(Expr::Kind::Product, e, factor());
      } else {
        return e;
      }
    }
  }

  Expr::Ptr factor() {
    auto e = atom();
    while (peek('^')) {
      ++pos_;
      skip();
      bool negative = false;
      if (pos_ < s_.size() && s_[pos_] == '-') {
        negative = true;
        ++pos_;
        skip();
      }
      std::string digits = take_digits();
      if (digits.empty()) fail("expected integer exponent");
      long value = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec != std::errc()) fail("exponent out of range");
      e = Expr::power(e, negative ? -value : value);
    }
    return e;
  }

  std::string take_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Expr::Ptr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = expr();
      expect(')');
      return e;
    }
    if (c == '{') {
      ++pos_;
      auto a = expr();
      expect(',');
      auto b = expr();
      expect('}');
      return Expr::binary(Expr::Kind::Bracket, a, b);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = take_digits(), den = "1";
      // A slash directly followed by digits continues the literal.
      std::size_t save = pos_;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip();
        std::size_t den_at = pos_;
        den = take_digits();
        if (den.empty()) fail("expected denominator");
        if (den.find_first_not_of('0') == std::string::npos) {
          pos_ = den_at;
          fail("zero denominator");
        }
      } else {
        pos_ = save;
      }
      return Expr::number(Rational::parse(num + "/" + den));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string_view head = s_.substr(start, pos_ - start);
      if (head != "y" && head != "x" && head != "Y" && head != "X" && head != "Omega") {
        pos_ = start;
        fail("unknown symbol '" + std::string(head) + "'");
      }
      std::string idx = take_digits();
      if (idx.empty()) fail("expected variable index");
      if (idx.size() > 1 && idx[0] == '0') fail("leading zero in variable index");
      return Expr::var(std::string(head) + idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

bool is_additive(const Expr& e) {
  return e.kind == Expr::Kind::Sum || e.kind == Expr::Kind::Diff || e.kind == Expr::Kind::Neg;
}

void print_into(const Expr& e, std::string& out);

void print_wrapped(const Expr& e, bool wrap, std::string& out) {
  if (wrap) out += '(';
  print_into(e, out);
  if (wrap) out += ')';
}

void print_into(const Expr& e, std::string& out) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Number:
      out += e.value.str();
      break;
    case K::Var:
      out += e.name;
      break;
    case K::Neg:
      out += '-';
      print_wrapped(*e.kids[0], is_additive(*e.kids[0]), out);
      break;
    case K::Sum:
    case K::Diff:
      print_wrapped(*e.kids[0], false, out);
      out += e.kind == K::Sum ? " + " : " - ";
      print_wrapped(*e.kids[1], is_additive(*e.kids[1]), out);
      break;
    case K::Product:
      print_wrapped(*e.kids[0], is_additive(*e.kids[0]), out);
      out += '*';
      print_wrapped(*e.kids[1], is_additive(*e.kids[1]) || e.kids[1]->kind == K::Product, out);
      break;
    case K::Power: {
      const Expr& b = *e.kids[0];
      bool wrap = is_additive(b) || b.kind == K::Product || (b.kind == K::Number && !b.value.is_integer()) ||
                  (b.kind == K::Number && b.value.sign() < 0);
      print_wrapped(b, wrap, out);
      out += '^' + std::to_string(e.exponent);
      break;
    }
    case K::Bracket:
      out += '{';
      print_into(*e.kids[0], out);
      out += ", ";
      print_into(*e.kids[1], out);
      out += '}';
      break;
  }
}

struct VarName {
  std::string head;
  int index;
};

VarName split_var(const std::string& name) {
  std::size_t k = name.find_first_of("0123456789");
  return {name.substr(0, k), std::stoi(name.substr(k))};
}

}  // namespace

Expr::Ptr parse_expr(std::string_view text) { return Parser(text).run(); }

std::string print_expr(const Expr& e) {
  std::string out;
  print_into(e, out);
  return out;
}

LaurentPoly eval_poisson(const Expr& e, const PoissonParams& params) {
  auto s = build_an(params);
  const auto& spec = s.spec();
  auto rec = [&](auto&& self, const Expr& node) -> LaurentPoly {
    using K = Expr::Kind;
    switch (node.kind) {
      case K::Number:
        return LaurentPoly(spec, node.value);
      case K::Var: {
        auto [head, i] = split_var(node.name);
        if (i < (head == "Omega" ? 0 : 1) || i > params.n)
          throw UnknownVariable("variable '" + node.name + "' out of range for n = " + std::to_string(params.n));
        if (head == "Omega") return omega(params, i);
        if (head == "Y" || head == "X")
          throw UnknownVariable("variable '" + node.name + "' belongs to a quotient torus, not A_n");
        return LaurentPoly::variable(spec, node.name);
      }
      case K::Neg:
        return -self(self, *node.kids[0]);
      case K::Sum:
        return self(self, *node.kids[0]) + self(self, *node.kids[1]);
      case K::Diff:
        return self(self, *node.kids[0]) - self(self, *node.kids[1]);
      case K::Product:
        return self(self, *node.kids[0]) * self(self, *node.kids[1]);
      case K::Power: {
        auto b = self(self, *node.kids[0]);
        if (node.exponent < 0 && !b.is_monomial()) throw InvalidArgument("negative power of a non-monomial");
        if (node.exponent < 0) return b.monomial_inverse().pow(-node.exponent);
        return b.pow(node.exponent);
      }
      case K::Bracket:
        return bracket(s, self(self, *node.kids[0]), self(self, *node.kids[1]));
    }
    throw InvalidArgument("bad expression node");
  };
  return rec(rec, e);
}

NCElement eval_quantum(const Expr& e, const QuantumAlgebra& alg) {
  auto rec = [&](auto&& self, const Expr& node) -> NCElement {
    using K = Expr::Kind;
    switch (node.kind) {
      case K::Number:
        return alg.constant(node.value);
      case K::Var: {
        auto [head, i] = split_var(node.name);
        if (i < (head == "Omega" ? 0 : 1) || i > alg.n())
          throw UnknownVariable("variable '" + node.name + "' out of range for n = " + std::to_string(alg.n()));
        if (head == "Omega") return alg.omega(i);
        if (head == "Y" || head == "X")
          throw UnknownVariable("variable '" + node.name + "' belongs to a quantum torus, not K_n");
        return alg.generator(node.name);
      }
      case K::Neg:
        return -self(self, *node.kids[0]);
      case K::Sum:
        return self(self, *node.kids[0]) + self(self, *node.kids[1]);
      case K::Diff:
        return self(self, *node.kids[0]) - self(self, *node.kids[1]);
      case K::Product:
        return alg.multiply(self(self, *node.kids[0]), self(self, *node.kids[1]));
      case K::Power:
        if (node.exponent < 0) throw InvalidArgument("negative powers are not defined in K_n");
        return alg.pow(self(self, *node.kids[0]), static_cast<int>(node.exponent));
      case K::Bracket:
        throw InvalidArgument("Poisson brackets are only valid in poisson mode");
    }
    throw InvalidArgument("bad expression node");
  };
  return rec(rec, e);
}

}  // namespace pq
