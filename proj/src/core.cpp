#include "minrep/core.hpp"

#include "minrep/error.hpp"

#include <cassert>
#include <numeric>
#include <string>

namespace minrep {

namespace {

void check_range(const MinimalModel& model, std::int64_t m, std::int64_t n) {
  if (m < 1 || m > model.p() - 1 || n < 1 || n > model.q() - 1) {
    throw error(errc::OutOfRange, "label (" + std::to_string(m) + "," + std::to_string(n) +
                                      ") outside 1..p-1 x 1..q-1");
  }
}

}  // namespace

MinimalModel validate_model(std::int64_t p, std::int64_t q) {
  if (p < 2 || q < 2) {
    throw error(errc::OutOfRange, "p and q must both be at least 2");
  }
  if (std::gcd(p, q) != 1) {
    throw error(errc::NotCoprime, "gcd(" + std::to_string(p) + "," + std::to_string(q) + ") != 1");
  }
  // Unreachable after the coprimality test.
  if (p % 2 == 0 && q % 2 == 0) {
    throw error(errc::BothEven, "p and q both even");
  }
  if (p % 2 == 0) {
    std::swap(p, q);
  }
  return {p, q};
}

Rational central_charge(const MinimalModel& model) {
  const Integer p = model.p();
  const Integer q = model.q();
  const Integer d = p - q;
  return Rational(1) - Rational(6 * d * d, p * q);
}

Rational conformal_weight(const MinimalModel& model, std::int64_t m, std::int64_t n) {
  check_range(model, m, n);
  const Integer p = model.p();
  const Integer q = model.q();
  const Integer a = Integer(n) * p - Integer(m) * q;
  const Integer d = p - q;
  return Rational(a * a - d * d, 4 * p * q);
}

ModuleLabel canonical_label(const MinimalModel& model, std::int64_t m, std::int64_t n) {
  check_range(model, m, n);
  if (m % 2 != 0) {
    return {m, n};
  }
  const ModuleLabel flipped{model.p() - m, model.q() - n};
  // p is odd, so exactly one of m, p-m is odd.
  if (flipped.m % 2 == 0) {
    throw error(errc::NoOddRepresentative, "neither representative has odd m");
  }
  return flipped;
}

std::vector<ModuleLabel> list_modules(const MinimalModel& model) {
  std::vector<ModuleLabel> out;
  out.reserve(static_cast<std::size_t>((model.p() - 1) * (model.q() - 1) / 2));
  for (std::int64_t m = 1; m < model.p(); m += 2) {
    for (std::int64_t n = 1; n < model.q(); ++n) {
      out.push_back({m, n});
    }
  }
  return out;
}

bool is_acting_label(const MinimalModel& model, const ModuleLabel& label) {
  return label.m >= 1 && label.m < model.p() && label.n >= 1 && label.n < model.q() &&
         label.m % 2 != 0 && label.n % 2 != 0;
}

std::vector<ModuleLabel> acting_labels(const MinimalModel& model) {
  std::vector<ModuleLabel> out;
  for (std::int64_t m = 1; m < model.p(); m += 2) {
    for (std::int64_t n = 1; n < model.q(); n += 2) {
      out.push_back({m, n});
    }
  }
  return out;
}

}  // namespace minrep
