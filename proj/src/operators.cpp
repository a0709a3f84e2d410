#include "minrep/operators.hpp"

#include "minrep/error.hpp"

#include <cctype>
#include <charconv>
#include <string>

namespace minrep {

namespace {

using Slot = std::optional<ModularForm>;

void accumulate(std::vector<Slot>& acc, std::size_t degree, const ModularForm& f) {
  if (acc.size() <= degree) {
    acc.resize(degree + 1);
  }
  if (!acc[degree]) {
    acc[degree] = f;
    return;
  }
  if (acc[degree]->weight != f.weight) {
    throw error(errc::InhomogeneousOperator,
                "degree " + std::to_string(degree) + " collects weights " +
                    acc[degree]->weight.str() + " and " + f.weight.str());
  }
  acc[degree] = *acc[degree] + f;
}

void require_homogeneous(const ModularOperator& a) {
  if (!a.is_homogeneous()) {
    throw error(errc::InhomogeneousOperator, "operator terms have different weight shifts");
  }
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

ModularOperator::ModularOperator(std::vector<std::optional<ModularForm>> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

void ModularOperator::trim() {
  for (auto& c : coeffs_) {
    if (c && c->series.is_zero()) {
      c.reset();
    }
  }
  while (!coeffs_.empty() && !coeffs_.back()) {
    coeffs_.pop_back();
  }
}

ModularOperator ModularOperator::identity(std::size_t order) {
  return multiply_by({QSeries::constant(Rational(1), order), Rational(0)});
}

ModularOperator ModularOperator::multiply_by(const ModularForm& f) {
  return ModularOperator({f});
}

ModularOperator ModularOperator::derivative(int n, std::size_t order) {
  if (n < 0) {
    throw error(errc::OutOfRange, "negative derivative order");
  }
  std::vector<Slot> c(static_cast<std::size_t>(n) + 1);
  c.back() = ModularForm{QSeries::constant(Rational(1), order), Rational(0)};
  return ModularOperator(std::move(c));
}

std::optional<Rational> ModularOperator::weight_shift() const {
  std::optional<Rational> shift;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i]) {
      continue;
    }
    const Rational w = coeffs_[i]->weight + Rational(2 * static_cast<long>(i));
    if (shift && *shift != w) {
      return std::nullopt;
    }
    shift = w;
  }
  return shift;
}

bool ModularOperator::is_homogeneous() const { return is_zero() || weight_shift().has_value(); }

ModularOperator operator+(const ModularOperator& a, const ModularOperator& b) {
  std::vector<Slot> acc = a.coeffs_;
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
    if (b.coeffs_[i]) {
      accumulate(acc, i, *b.coeffs_[i]);
    }
  }
  return ModularOperator(std::move(acc));
}

ModularOperator ModularOperator::scaled(const Rational& c) const {
  std::vector<Slot> out = coeffs_;
  for (auto& f : out) {
    if (f) {
      f->series = f->series.scaled(c);
    }
  }
  return ModularOperator(std::move(out));
}

ModularOperator compose(const ModularOperator& a, const ModularOperator& b) {
  require_homogeneous(a);
  require_homogeneous(b);
  std::vector<Slot> acc;
  for (std::size_t j = 0; j < b.coefficients().size(); ++j) {
    if (!b.coefficients()[j]) {
      continue;
    }
    // derivs[l] = D^l applied to b_j
    std::vector<ModularForm> derivs{*b.coefficients()[j]};
    for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
      if (!a.coefficients()[i]) {
        continue;
      }
      while (derivs.size() <= i) {
        derivs.push_back(modular_derivative(derivs.back()));
      }
      const ModularForm& ai = *a.coefficients()[i];
      for (std::size_t l = 0; l <= i; ++l) {
        ModularForm term = ai * derivs[l];
        term.series = term.series.scaled(Rational(binomial(i, l)));
        accumulate(acc, i - l + j, term);
      }
    }
  }
  return ModularOperator(std::move(acc));
}

std::vector<QSeries> apply(const ModularOperator& a, const std::vector<QSeries>& f,
                           const Rational& k) {
  require_homogeneous(a);
  std::vector<QSeries> out;
  out.reserve(f.size());
  for (const auto& component : f) {
    if (a.is_zero()) {
      out.push_back(QSeries::zero(component.leading_exponent(), component.truncation_order()));
      continue;
    }
    std::optional<QSeries> sum;
    QSeries d = component;
    Rational weight = k;
    for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
      if (i > 0) {
        d = modular_derivative(weight, d);
        weight += Rational(2);
      }
      if (!a.coefficients()[i]) {
        continue;
      }
      QSeries term = a.coefficients()[i]->series * d;
      sum = sum ? *sum + term : term;
    }
    out.push_back(*sum);
  }
  return out;
}

std::vector<ModularForm> apply(const ModularOperator& a, const std::vector<ModularForm>& f) {
  if (f.empty()) {
    return {};
  }
  const Rational k = f.front().weight;
  std::vector<QSeries> series;
  for (const auto& g : f) {
    if (g.weight != k) {
      throw error(errc::WeightMismatch,
                  "components of weight " + k.str() + " and " + g.weight.str());
    }
    series.push_back(g.series);
  }
  const Rational out_weight = k + a.weight_shift().value_or(Rational(0));
  std::vector<ModularForm> out;
  for (auto& s : apply(a, series, k)) {
    out.push_back({std::move(s), out_weight});
  }
  return out;
}

namespace {

class ExprParser {
public:
  ExprParser(std::string_view text, std::size_t order) : order_(order) {
    // Spaces separate tokens but may not split one, so "1 2" is rejected.
    bool gap = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
      const auto ch = static_cast<unsigned char>(text[i]);
      if (std::isspace(ch)) {
        gap = !s_.empty();
        continue;
      }
      if (gap && std::isalnum(ch) && std::isalnum(static_cast<unsigned char>(s_.back()))) {
        throw error(errc::ParseError, "unexpected space before column " + std::to_string(i + 1));
      }
      gap = false;
      s_ += static_cast<char>(ch);
    }
  }

  ModularOperator parse() {
    if (s_.empty()) {
      fail("empty expression");
    }
    ModularOperator total;
    bool first = true;
    while (pos_ < s_.size()) {
      Rational sign(1);
      if (peek() == '+' || peek() == '-') {
        sign = Rational(peek() == '-' ? -1 : 1);
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      total = total + term().scaled(sign);
      first = false;
    }
    if (!total.is_homogeneous()) {
      throw error(errc::InhomogeneousOperator, "expression '" + s_ + "' is inhomogeneous");
    }
    return total;
  }

private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw error(errc::ParseError,
                why + " at column " + std::to_string(pos_ + 1) + " of '" + s_ + "'");
  }

  long number() {
    long v = 0;
    const char* begin = s_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(begin, s_.data() + s_.size(), v);
    if (ec != std::errc() || ptr == begin) {
      fail("expected a number");
    }
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }

  ModularOperator term() {
    ModularOperator out = factor();
    while (peek() == '*') {
      ++pos_;
      out = compose(out, factor());
    }
    return out;
  }

  ModularOperator factor() {
    ModularOperator base = atom();
    if (peek() != '^') {
      return base;
    }
    ++pos_;
    const long n = number();
    ModularOperator out = ModularOperator::identity(order_);
    for (long i = 0; i < n; ++i) {
      out = compose(out, base);
    }
    return out;
  }

  ModularOperator atom() {
    const char ch = peek();
    if (ch == 'D') {
      ++pos_;
      return ModularOperator::derivative(1, order_);
    }
    if (ch == 'G') {
      ++pos_;
      const long k = number();
      if (k < 4 || k % 2 != 0) {
        fail("G" + std::to_string(k) + " is not a holomorphic Eisenstein series");
      }
      return ModularOperator::multiply_by(eisenstein(static_cast<int>(k), order_));
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const long num = number();
      long den = 1;
      if (peek() == '/') {
        ++pos_;
        den = number();
        if (den == 0) {
          fail("zero denominator");
        }
      }
      return ModularOperator::multiply_by(
          {QSeries::constant(Rational(num, den), order_), Rational(0)});
    }
    fail(ch == '\0' ? "unexpected end of expression" : std::string("unexpected '") + ch + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
  std::size_t order_;
};

}  // namespace

ModularOperator parse_operator(std::string_view text, std::size_t order) {
  return ExprParser(text, order).parse();
}

ModularForm parse_builtin_series(std::string_view text, std::size_t order) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      s += ch;
    }
  }
  auto integer_tail = [&](std::size_t from) -> std::optional<long> {
    long v = 0;
    const char* begin = s.data() + from;
    const char* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end || begin == end) {
      return std::nullopt;
    }
    return v;
  };
  if (s == "eta") {
    return eta_power(1, order);
  }
  if (s.rfind("eta^", 0) == 0) {
    if (const auto w = integer_tail(4); w && *w >= 1) {
      return eta_power(static_cast<int>(*w), order);
    }
  }
  if (s.rfind('G', 0) == 0) {
    if (const auto k = integer_tail(1); k && *k >= 2 && *k % 2 == 0) {
      return eisenstein(static_cast<int>(*k), order);
    }
  }
  throw error(errc::ParseError, "unknown series '" + std::string(text) + "'");
}

}  // namespace minrep
