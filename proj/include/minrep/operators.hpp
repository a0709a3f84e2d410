#pragma once

#include "minrep/qseries.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace minrep {

// phi_0 + phi_1 D + ... + phi_n D^n with modular-form coefficients, where D
// acts on weight k as the modular derivative in weight k. A missing entry is
// a zero coefficient.
class ModularOperator {
public:
  ModularOperator() = default;
  explicit ModularOperator(std::vector<std::optional<ModularForm>> coefficients);

  // Constant 1 of weight 0.
  static ModularOperator identity(std::size_t order);
  // Multiplication by f.
  static ModularOperator multiply_by(const ModularForm& f);
  // D^n.
  static ModularOperator derivative(int n, std::size_t order);

  const std::vector<std::optional<ModularForm>>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Highest degree with a nonzero coefficient; -1 for the zero operator.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  // weight(phi_i) + 2i, when it is the same for every nonzero term.
  std::optional<Rational> weight_shift() const;
  bool is_homogeneous() const;

  // Terms of equal degree must share a weight; throws InhomogeneousOperator.
  friend ModularOperator operator+(const ModularOperator& a, const ModularOperator& b);
  ModularOperator scaled(const Rational& c) const;

private:
  void trim();

  std::vector<std::optional<ModularForm>> coeffs_;
};

// A o B using D phi = phi D + (D_wt(phi) phi). Throws InhomogeneousOperator.
ModularOperator compose(const ModularOperator& a, const ModularOperator& b);

// Componentwise action on forms of weight k. Throws InhomogeneousOperator.
std::vector<QSeries> apply(const ModularOperator& a, const std::vector<QSeries>& f,
                           const Rational& k);
// Same, reading k off the components; throws WeightMismatch if they differ.
std::vector<ModularForm> apply(const ModularOperator& a, const std::vector<ModularForm>& f);

// Operator expression: a sum of terms, each a product of factors read as a
// composition left to right. Factors are rationals ("3", "-1/2"), G<k> for
// even k >= 4, and D, each optionally raised to a nonnegative integer power
// with '^'. Throws ParseError.
ModularOperator parse_operator(std::string_view text, std::size_t order);

// Builtin series: "eta", "eta^w" (w >= 1) and "G<k>" (even k >= 2).
// Throws ParseError.
ModularForm parse_builtin_series(std::string_view text, std::size_t order);

}  // namespace minrep
