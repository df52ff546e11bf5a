#include "pq/rational.hpp"

#include <cctype>
#include <ostream>

#include "pq/error.hpp"

namespace pq {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Trial division, short-circuited once the cofactor tests prime.
void factor_into(mpz_class n, long sign_of_exponent, std::map<mpz_class, long>& out) {
  if (n == 1) return;
  for (unsigned long p = 2;; p = (p == 2 ? 3 : p + 2)) {
    mpz_class pz(p);
    if (pz * pz > n) break;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out[pz] += sign_of_exponent;
      n /= p;
    }
    if (n == 1) return;
  }
  if (n > 1) out[n] += sign_of_exponent;
}

}  // namespace

Rational::Rational(long long value) : value_(0) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(value));
  value_ = mpq_class(z);
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  mpz_class n, d;
  mpz_set_si(n.get_mpz_t(), static_cast<long>(num));
  mpz_set_si(d.get_mpz_t(), static_cast<long>(den));
  value_ = mpq_class(n, d);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = trim(s.substr(0, slash));
    den = trim(s.substr(slash + 1));
  }
  if (!all_digits(num) || !all_digits(den))
    throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw InvalidArgument("rational with zero denominator '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

Rational Rational::from_factorization(const PrimeFactorization& f) {
  mpz_class num = 1, den = 1;
  for (const auto& [p, e] : f.exponents) {
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    (e < 0 ? den : num) *= power;
  }
  if (f.sign < 0) num = -num;
  return Rational(mpq_class(num, den));
}

Rational Rational::inverse() const {
  if (is_zero()) throw InvalidArgument("inverse of zero");
  return Rational(mpq_class(1) / value_);
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

PrimeFactorization Rational::factor() const {
  if (is_zero()) throw InvalidArgument("factorization of zero");
  PrimeFactorization f;
  f.sign = sign();
  factor_into(::abs(value_.get_num()), 1, f.exponents);
  factor_into(value_.get_den(), -1, f.exponents);
  return f;
}

std::string Rational::str() const { return value_.get_str(); }

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace pq
