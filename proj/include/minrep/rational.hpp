#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace minrep {

using Integer = mpz_class;

// Exact rational number, always stored in lowest terms with a positive
// denominator.
class Rational {
public:
  Rational() = default;
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : value_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  // Parses "a" or "a/b" (optional sign on a). Throws minrep::error(ParseError).
  static Rational parse(std::string_view text);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  // Largest integer not exceeding the value.
  Integer floor() const;
  // value - floor(value), in [0, 1).
  Rational frac() const;
  Rational abs() const;

  std::string str() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  const mpq_class& raw() const { return value_; }

private:
  mpq_class value_;
};

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
// r-adic valuation of a nonzero integer.
int valuation(const Integer& x, long r);
bool is_prime(long n);
// Returns (r, a) with n = r^a for a prime r, or nullopt-like (0, 0).
std::pair<long, int> prime_power(long n);

}  // namespace minrep

template <>
struct std::hash<minrep::Rational> {
  std::size_t operator()(const minrep::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.str());
  }
};
