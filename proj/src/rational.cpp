#include "minrep/rational.hpp"

#include "minrep/error.hpp"

#include <cctype>

namespace minrep {

const char* errc_name(errc code) {
  switch (code) {
    case errc::NotCoprime: return "NotCoprime";
    case errc::OutOfRange: return "OutOfRange";
    case errc::BothEven: return "BothEven";
    case errc::NoOddRepresentative: return "NoOddRepresentative";
    case errc::NonCanonicalLabel: return "NonCanonicalLabel";
    case errc::NotPrimeCase: return "NotPrimeCase";
    case errc::OutOfScopeDimension: return "OutOfScopeDimension";
    case errc::IrreducibilityUnknown: return "IrreducibilityUnknown";
    case errc::SubsetBlowup: return "SubsetBlowup";
    case errc::NotPrime: return "NotPrime";
    case errc::HypothesisNotMet: return "HypothesisNotMet";
    case errc::DimensionTooLarge: return "DimensionTooLarge";
    case errc::InvalidCase: return "InvalidCase";
    case errc::NotLowDimCase: return "NotLowDimCase";
    case errc::OddIndex: return "OddIndex";
    case errc::OddWeight: return "OddWeight";
    case errc::IncompatibleExponents: return "IncompatibleExponents";
    case errc::InhomogeneousOperator: return "InhomogeneousOperator";
    case errc::WeightMismatch: return "WeightMismatch";
    case errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw error(errc::OutOfRange, "zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
      ++i;
    }
    if (i == s.size()) {
      return false;
    }
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
        return false;
      }
    }
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num_text = text.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num_text, true) || !valid_int(den_text, false)) {
    throw error(errc::ParseError, "not a rational: '" + std::string(text) + "'");
  }
  if (num_text[0] == '+') {
    num_text.remove_prefix(1);
  }
  Integer num{std::string(num_text)};
  Integer den{std::string(den_text)};
  if (den == 0) {
    throw error(errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw error(errc::OutOfRange, "division by zero");
  }
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

int valuation(const Integer& x, long r) {
  if (x == 0) {
    throw error(errc::OutOfRange, "valuation of zero");
  }
  Integer y = x;
  int v = 0;
  while (mpz_divisible_ui_p(y.get_mpz_t(), static_cast<unsigned long>(r)) != 0) {
    y /= r;
    ++v;
  }
  return v;
}

bool is_prime(long n) {
  if (n < 2) {
    return false;
  }
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

std::pair<long, int> prime_power(long n) {
  if (n < 2) {
    return {0, 0};
  }
  long r = 2;
  while (r * r <= n && n % r != 0) {
    ++r;
  }
  if (n % r != 0) {
    r = n;
  }
  int a = 0;
  while (n % r == 0) {
    n /= r;
    ++a;
  }
  return n == 1 ? std::pair<long, int>{r, a} : std::pair<long, int>{0, 0};
}

}  // namespace minrep
