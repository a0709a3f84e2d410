#pragma once

#include "minrep/congruence.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace minrep {

// a + b * sqrt(d), d >= 0. Compared against rationals exactly.
struct QuadraticIrrational {
  Rational a;
  Rational b;
  long d = 0;
};

// Sign of x - y, decided by integer arithmetic.
int compare(const Rational& x, const QuadraticIrrational& y);

struct RatioInterval {
  QuadraticIrrational lo;
  bool lo_closed;
  QuadraticIrrational hi;
  bool hi_closed;

  bool contains(const Rational& x) const;
};

enum class RatioCase { D1, D2I, D2II, D3I };

// Accepts "d1", "d2i", "d2ii", "d3i"; throws InvalidCase otherwise.
RatioCase parse_ratio_case(std::string_view tag);

// Windows of q/p for which every leading exponent lies in [0, 1).
std::vector<RatioInterval> ratio_bounds(RatioCase c);

bool ratio_in_bounds(RatioCase c, const Rational& ratio);

enum class LambdaWindow { Negative, UnitInterval, AtLeastOne };

LambdaWindow lambda_window(const Rational& lambda);
const char* lambda_window_name(LambdaWindow w);

enum class SpaceStatus { Equal, ProperContainment, GeneratorNotHolomorphic, LambdaFactsOnly };

const char* space_status_name(SpaceStatus s);
SpaceStatus parse_space_status(const std::string& text);

struct SpaceComparison {
  SpaceStatus status = SpaceStatus::LambdaFactsOnly;
  std::vector<LambdaWindow> lambda_window;
  std::optional<bool> ratio_check;

  friend bool operator==(const SpaceComparison&, const SpaceComparison&) = default;
};

// Compares the 1-point-function module with the holomorphic forms. Only
// dimensions <= 3 with a certified irreducible representation get a verdict
// beyond LambdaFactsOnly.
SpaceComparison space_comparison(const RepProfile& profile,
                                 std::optional<Irreducibility> irreducibility);

// Interval membership of q/p agrees with "all lambda_j in [0,1)". Throws
// NotLowDimCase for s > 3.
bool ratio_lambda_consistency(const MinimalModel& model, const ModuleLabel& label);

}  // namespace minrep
