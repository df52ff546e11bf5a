#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace pq {

// Sign and prime exponents of a nonzero rational: value = sign * prod p^e.
struct PrimeFactorization {
  int sign = 1;
  std::map<mpz_class, long> exponents;

  bool operator==(const PrimeFactorization&) const = default;
};

// Exact rational number. Always kept in lowest terms with a positive
// denominator, so equal values have equal representations.
class Rational {
 public:
  Rational() = default;
  Rational(long long value);  // NOLINT: implicit by design of the numeric tower
  Rational(long long num, long long den);
  explicit Rational(mpq_class value);

  // Accepts "a", "-a", "a/b", "-a/b" with optional surrounding spaces.
  static Rational parse(std::string_view text);
  static Rational from_factorization(const PrimeFactorization& f);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }

  Rational inverse() const;
  Rational pow(long exponent) const;
  Rational abs() const;

  // Throws InvalidArgument on zero.
  PrimeFactorization factor() const;

  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace pq
