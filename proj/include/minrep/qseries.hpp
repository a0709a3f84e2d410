#pragma once

#include "minrep/rational.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace minrep {

inline constexpr std::size_t kDefaultTruncation = 40;

// Truncation order from MINREP_TRUNCATION, falling back to the default.
std::size_t truncation_from_env();

// Truncated expansion q^offset * (c_0 + c_1 q + ... + c_T q^T) with exact
// coefficients. Leading zeros are absorbed into the offset, so c_0 != 0
// unless the series is zero to its precision. Terms at exponents
// >= offset + T + 1 are unknown.
class QSeries {
public:
  // Requires at least one coefficient.
  QSeries(Rational offset, std::vector<Rational> coeffs);

  static QSeries zero(Rational offset, std::size_t order);
  static QSeries constant(const Rational& c, std::size_t order);

  const Rational& leading_exponent() const { return offset_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  std::size_t truncation_order() const { return coeffs_.size() - 1; }
  // First exponent whose coefficient is unknown.
  Rational precision() const { return offset_ + Rational(static_cast<long>(coeffs_.size())); }
  bool is_zero() const;

  // Coefficient of q^exponent; zero below the leading exponent or off the
  // lattice. Throws OutOfRange at or beyond the precision.
  Rational coefficient(const Rational& exponent) const;

  // First `terms` coefficients (terms >= 1).
  QSeries truncated(std::size_t terms) const;

  // q d/dq
  QSeries q_derivative() const;

  QSeries operator-() const;
  QSeries scaled(const Rational& c) const;

  // Offsets must differ by an integer unless one side is zero; throws
  // IncompatibleExponents otherwise.
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }
  friend QSeries operator*(const QSeries& a, const QSeries& b);

  friend bool operator==(const QSeries&, const QSeries&) = default;

  // "q^(a/b) * [c0, c1, ...]"
  std::string str() const;
  static QSeries parse(std::string_view text);

private:
  void normalize();

  Rational offset_;
  std::vector<Rational> coeffs_;
};

// A q-series together with its weight. The multiplier is the eta-power
// system with v(T) = e(k/12); it never enters arithmetic.
struct ModularForm {
  QSeries series;
  Rational weight;

  // Exponent of v(T) in [0, 1).
  Rational multiplier_t_exponent() const { return (weight / Rational(12)).frac(); }

  friend ModularForm operator*(const ModularForm& a, const ModularForm& b) {
    return {a.series * b.series, a.weight + b.weight};
  }
  // Throws WeightMismatch on different weights.
  friend ModularForm operator+(const ModularForm& a, const ModularForm& b);

  friend bool operator==(const ModularForm&, const ModularForm&) = default;
};

// B_k for even k >= 2. Throws OddIndex (odd k) or OutOfRange (k < 2).
Rational bernoulli(int k);

// G_k = -B_k/k! + 2/(k-1)! sum sigma_{k-1}(n) q^n, coefficients up to q^order.
ModularForm eisenstein(int k, std::size_t order);

// eta^w = q^(w/24) prod (1 - q^n)^w, weight w/2.
ModularForm eta_power(int w, std::size_t order);

// q d/dq f + k G_2 f
QSeries modular_derivative(const Rational& k, const QSeries& f);
ModularForm modular_derivative(const ModularForm& f);

}  // namespace minrep
