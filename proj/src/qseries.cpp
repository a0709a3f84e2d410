#include "minrep/qseries.hpp"

#include "minrep/error.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace minrep {

std::size_t truncation_from_env() {
  const char* env = std::getenv("MINREP_TRUNCATION");
  if (env == nullptr || *env == '\0') {
    return kDefaultTruncation;
  }
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0) {
    throw error(errc::ParseError, std::string("bad MINREP_TRUNCATION '") + env + "'");
  }
  return static_cast<std::size_t>(v);
}

QSeries::QSeries(Rational offset, std::vector<Rational> coeffs)
    : offset_(std::move(offset)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw error(errc::OutOfRange, "q-series needs at least one coefficient");
  }
  normalize();
}

QSeries QSeries::zero(Rational offset, std::size_t order) {
  return {std::move(offset), std::vector<Rational>(order + 1)};
}

QSeries QSeries::constant(const Rational& c, std::size_t order) {
  std::vector<Rational> coeffs(order + 1);
  coeffs[0] = c;
  return {Rational(0), std::move(coeffs)};
}

void QSeries::normalize() {
  const auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                                  [](const Rational& c) { return !c.is_zero(); });
  if (first == coeffs_.end() || first == coeffs_.begin()) {
    return;
  }
  const auto shift = std::distance(coeffs_.begin(), first);
  offset_ += Rational(static_cast<long>(shift));
  coeffs_.erase(coeffs_.begin(), first);
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

Rational QSeries::coefficient(const Rational& exponent) const {
  if (exponent >= precision()) {
    throw error(errc::OutOfRange, "exponent " + exponent.str() + " beyond precision");
  }
  const Rational k = exponent - offset_;
  if (k.sign() < 0 || !k.is_integer()) {
    return Rational(0);
  }
  return coeffs_[k.num().get_ui()];
}

QSeries QSeries::truncated(std::size_t terms) const {
  if (terms == 0) {
    throw error(errc::OutOfRange, "truncation to zero terms");
  }
  std::vector<Rational> c(coeffs_.begin(),
                          coeffs_.begin() + static_cast<long>(std::min(terms, coeffs_.size())));
  return {offset_, std::move(c)};
}

QSeries QSeries::q_derivative() const {
  std::vector<Rational> c(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    c[k] = coeffs_[k] * (offset_ + Rational(static_cast<long>(k)));
  }
  return {offset_, std::move(c)};
}

QSeries QSeries::operator-() const { return scaled(Rational(-1)); }

QSeries QSeries::scaled(const Rational& s) const {
  std::vector<Rational> c(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    c[k] = coeffs_[k] * s;
  }
  return {offset_, std::move(c)};
}

namespace {

// Number of terms of `s` strictly below the absolute exponent `bound`.
std::size_t terms_below(const QSeries& s, const Rational& bound) {
  const Rational room = bound - s.leading_exponent();
  if (room.sign() <= 0) {
    return 0;
  }
  // ceil(room)
  Integer n = room.floor();
  if (!room.is_integer()) {
    n += 1;
  }
  return std::min<std::size_t>(s.coefficients().size(), n.get_ui());
}

}  // namespace

QSeries operator+(const QSeries& a, const QSeries& b) {
  const Rational gap = a.offset_ - b.offset_;
  if (!gap.is_integer()) {
    if (a.is_zero() || b.is_zero()) {
      const QSeries& z = a.is_zero() ? a : b;
      const QSeries& f = a.is_zero() ? b : a;
      const std::size_t keep = terms_below(f, z.precision());
      if (keep == 0) {
        return QSeries::zero(f.offset_, 0);
      }
      return f.truncated(keep);
    }
    throw error(errc::IncompatibleExponents,
                "offsets " + a.offset_.str() + " and " + b.offset_.str() +
                    " differ by a non-integer");
  }
  const Rational lo = std::min(a.offset_, b.offset_);
  const Rational hi = std::min(a.precision(), b.precision());
  const long len = (hi - lo).num().get_si();
  if (len <= 0) {
    throw error(errc::OutOfRange, "sum has no known coefficients");
  }
  std::vector<Rational> c(static_cast<std::size_t>(len));
  for (const QSeries* s : {&a, &b}) {
    const long shift = (s->offset_ - lo).num().get_si();
    for (long k = 0; k + shift < len && k < static_cast<long>(s->coeffs_.size()); ++k) {
      c[static_cast<std::size_t>(k + shift)] += s->coeffs_[static_cast<std::size_t>(k)];
    }
  }
  return {lo, std::move(c)};
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const std::size_t len = std::min(a.coeffs_.size(), b.coeffs_.size());
  std::vector<Rational> c(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (a.coeffs_[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; i + j < len; ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return {a.offset_ + b.offset_, std::move(c)};
}

std::string QSeries::str() const {
  std::string out = "q^(" + offset_.str() + ") * [";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k > 0) {
      out += ", ";
    }
    out += coeffs_[k].str();
  }
  return out + "]";
}

QSeries QSeries::parse(std::string_view text) {
  auto fail = [&]() {
    return error(errc::ParseError, "not a serialized q-series: '" + std::string(text) + "'");
  };
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      compact += ch;
    }
  }
  const std::string_view s = compact;
  if (s.substr(0, 3) != "q^(") {
    throw fail();
  }
  const auto close = s.find(')');
  if (close == std::string_view::npos || s.substr(close, 3) != ")*[" || s.back() != ']') {
    throw fail();
  }
  Rational offset = Rational::parse(s.substr(3, close - 3));
  std::string_view body = s.substr(close + 3, s.size() - close - 4);
  std::vector<Rational> coeffs;
  while (!body.empty()) {
    const auto comma = body.find(',');
    coeffs.push_back(Rational::parse(body.substr(0, comma)));
    if (comma == std::string_view::npos) {
      break;
    }
    body.remove_prefix(comma + 1);
    if (body.empty()) {
      throw fail();
    }
  }
  if (coeffs.empty()) {
    throw fail();
  }
  return {std::move(offset), std::move(coeffs)};
}

ModularForm operator+(const ModularForm& a, const ModularForm& b) {
  if (a.weight != b.weight) {
    throw error(errc::WeightMismatch,
                "adding weights " + a.weight.str() + " and " + b.weight.str());
  }
  return {a.series + b.series, a.weight};
}

Rational bernoulli(int k) {
  if (k < 2) {
    throw error(errc::OutOfRange, "Bernoulli index must be at least 2");
  }
  if (k % 2 != 0) {
    throw error(errc::OddIndex, "Bernoulli index must be even");
  }
  // sum_{j=0}^{n} C(n+1, j) B_j = 0
  std::vector<Rational> B(static_cast<std::size_t>(k) + 1);
  B[0] = Rational(1);
  for (int n = 1; n <= k; ++n) {
    Rational acc;
    Integer binom = 1;  // C(n+1, j)
    for (int j = 0; j < n; ++j) {
      acc += Rational(binom) * B[static_cast<std::size_t>(j)];
      binom = binom * (n + 1 - j) / (j + 1);
    }
    B[static_cast<std::size_t>(n)] = -acc / Rational(n + 1);
  }
  return B[static_cast<std::size_t>(k)];
}

ModularForm eisenstein(int k, std::size_t order) {
  if (k % 2 != 0) {
    throw error(errc::OddWeight, "Eisenstein weight must be even");
  }
  if (k < 2) {
    throw error(errc::OutOfRange, "Eisenstein weight must be at least 2");
  }
  Integer fact = 1;  // (k-1)!
  for (int i = 2; i < k; ++i) {
    fact *= i;
  }
  std::vector<Rational> c(order + 1);
  c[0] = -bernoulli(k) / Rational(fact * k);
  const Rational scale = Rational(Integer(2), fact);
  for (std::size_t n = 1; n <= order; ++n) {
    Integer sigma = 0;
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d == 0) {
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), d, static_cast<unsigned long>(k - 1));
        sigma += power;
      }
    }
    c[n] = scale * Rational(sigma);
  }
  return {QSeries(Rational(0), std::move(c)), Rational(k)};
}

ModularForm eta_power(int w, std::size_t order) {
  if (w < 1) {
    throw error(errc::OutOfRange, "eta power must be positive");
  }
  std::vector<Integer> c(order + 1);
  c[0] = 1;
  // Multiply by (1 - q^n) w times for each n.
  for (std::size_t n = 1; n <= order; ++n) {
    for (int rep = 0; rep < w; ++rep) {
      for (std::size_t i = order; i >= n; --i) {
        c[i] -= c[i - n];
      }
    }
  }
  std::vector<Rational> rc;
  rc.reserve(c.size());
  for (const auto& x : c) {
    rc.emplace_back(x);
  }
  return {QSeries(Rational(w, 24), std::move(rc)), Rational(w, 2)};
}

QSeries modular_derivative(const Rational& k, const QSeries& f) {
  QSeries theta = f.q_derivative();
  if (k.is_zero()) {
    return theta;
  }
  const ModularForm g2 = eisenstein(2, f.truncation_order());
  return theta + (g2.series * f).scaled(k);
}

ModularForm modular_derivative(const ModularForm& f) {
  return {modular_derivative(f.weight, f.series), f.weight + Rational(2)};
}

}  // namespace minrep
