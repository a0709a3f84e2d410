#include "minrep/spaces.hpp"

#include "minrep/error.hpp"

#include <string>

namespace minrep {

int compare(const Rational& x, const QuadraticIrrational& y) {
  const Rational diff = x - y.a;
  const int sb = y.d == 0 ? 0 : y.b.sign();
  const int sd = diff.sign();
  if (sb == 0) {
    return sd;
  }
  if (sd != sb) {
    return sd != 0 ? sd : -sb;
  }
  // Same sign: compare squares.
  const Rational lhs = diff * diff;
  const Rational rhs = y.b * y.b * Rational(y.d);
  const int c = lhs == rhs ? 0 : (lhs > rhs ? 1 : -1);
  return sd > 0 ? c : -c;
}

bool RatioInterval::contains(const Rational& x) const {
  const int lo_cmp = compare(x, lo);
  const int hi_cmp = compare(x, hi);
  const bool above = lo_closed ? lo_cmp >= 0 : lo_cmp > 0;
  const bool below = hi_closed ? hi_cmp <= 0 : hi_cmp < 0;
  return above && below;
}

RatioCase parse_ratio_case(std::string_view tag) {
  if (tag == "d1") return RatioCase::D1;
  if (tag == "d2i") return RatioCase::D2I;
  if (tag == "d2ii") return RatioCase::D2II;
  if (tag == "d3i") return RatioCase::D3I;
  throw error(errc::InvalidCase, "unknown ratio case '" + std::string(tag) + "'");
}

namespace {

QuadraticIrrational rat(long num, long den) { return {Rational(num, den), Rational(0), 0}; }

// (a + b sqrt(d)) / 3
QuadraticIrrational third(long a, long b, long d) {
  return {Rational(a, 3), Rational(b, 3), d};
}

}  // namespace

std::vector<RatioInterval> ratio_bounds(RatioCase c) {
  switch (c) {
    case RatioCase::D1:
      return {{rat(2, 3), true, rat(50, 3), false}};
    case RatioCase::D2I:
      return {{third(22, -5, 19), true, third(4, -1, 7), false},
              {third(4, 1, 7), true, third(22, 5, 19), false}};
    case RatioCase::D2II:
      return {{rat(2, 3), true, rat(50, 27), false}};
    case RatioCase::D3I:
      return {{rat(2, 3), true, third(7, -1, 13), false},
              {third(7, 1, 13), true, third(19, 5, 13), false}};
  }
  throw error(errc::InvalidCase, "unknown ratio case");
}

bool ratio_in_bounds(RatioCase c, const Rational& ratio) {
  for (const auto& iv : ratio_bounds(c)) {
    if (iv.contains(ratio)) {
      return true;
    }
  }
  return false;
}

LambdaWindow lambda_window(const Rational& lambda) {
  if (lambda.sign() < 0) {
    return LambdaWindow::Negative;
  }
  return lambda < Rational(1) ? LambdaWindow::UnitInterval : LambdaWindow::AtLeastOne;
}

const char* lambda_window_name(LambdaWindow w) {
  switch (w) {
    case LambdaWindow::Negative: return "negative";
    case LambdaWindow::UnitInterval: return "unit";
    case LambdaWindow::AtLeastOne: return "at_least_one";
  }
  return "?";
}

const char* space_status_name(SpaceStatus s) {
  switch (s) {
    case SpaceStatus::Equal: return "Equal";
    case SpaceStatus::ProperContainment: return "ProperContainment";
    case SpaceStatus::GeneratorNotHolomorphic: return "GeneratorNotHolomorphic";
    case SpaceStatus::LambdaFactsOnly: return "LambdaFactsOnly";
  }
  return "?";
}

SpaceStatus parse_space_status(const std::string& text) {
  for (auto s : {SpaceStatus::Equal, SpaceStatus::ProperContainment,
                 SpaceStatus::GeneratorNotHolomorphic, SpaceStatus::LambdaFactsOnly}) {
    if (text == space_status_name(s)) {
      return s;
    }
  }
  throw error(errc::ParseError, "unknown space status '" + text + "'");
}

namespace {

// Membership of q/p in the equality window of a low-dimensional shape; the
// (p-6, q-1) shape has an empty window.
bool window_membership(const MinimalModel& model, LowDimShape shape) {
  const Rational x(static_cast<long>(model.q()), static_cast<long>(model.p()));
  switch (shape) {
    case LowDimShape::Dim1: return ratio_in_bounds(RatioCase::D1, x);
    case LowDimShape::Dim2CaseI: return ratio_in_bounds(RatioCase::D2I, x);
    case LowDimShape::Dim2CaseII: return ratio_in_bounds(RatioCase::D2II, x);
    case LowDimShape::Dim3CaseI: return ratio_in_bounds(RatioCase::D3I, x);
    case LowDimShape::Dim3CaseII: return false;
  }
  return false;
}

}  // namespace

SpaceComparison space_comparison(const RepProfile& profile,
                                 std::optional<Irreducibility> irreducibility) {
  SpaceComparison out;
  bool any_negative = false;
  bool all_unit = true;
  for (const auto& l : profile.lambda) {
    const LambdaWindow w = lambda_window(l);
    out.lambda_window.push_back(w);
    any_negative = any_negative || w == LambdaWindow::Negative;
    all_unit = all_unit && w == LambdaWindow::UnitInterval;
  }
  if (profile.s > 3) {
    out.status = SpaceStatus::LambdaFactsOnly;
    return out;
  }
  out.ratio_check = window_membership(profile.model, low_dim_shape(profile.model, profile.label));
  if (irreducibility != Irreducibility::Irreducible) {
    out.status = SpaceStatus::LambdaFactsOnly;
  } else if (all_unit) {
    out.status = SpaceStatus::Equal;
  } else if (any_negative) {
    out.status = SpaceStatus::GeneratorNotHolomorphic;
  } else {
    out.status = SpaceStatus::ProperContainment;
  }
  return out;
}

bool ratio_lambda_consistency(const MinimalModel& model, const ModuleLabel& label) {
  const std::int64_t s = rep_dimension(model, label);
  if (s > 3) {
    throw error(errc::NotLowDimCase, "dimension " + std::to_string(s) + " > 3");
  }
  const RepProfile profile = rep_profile(model, label);
  bool all_unit = true;
  for (const auto& l : profile.lambda) {
    all_unit = all_unit && lambda_window(l) == LambdaWindow::UnitInterval;
  }
  return window_membership(model, low_dim_shape(model, label)) == all_unit;
}

}  // namespace minrep
