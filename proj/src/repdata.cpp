#include "minrep/repdata.hpp"

#include "minrep/error.hpp"

#include <limits>
#include <numeric>
#include <string>

namespace minrep {

RepProfile rep_profile(const MinimalModel& model, const ModuleLabel& label) {
  RepProfile out{model, label, rep_dimension(model, label), self_coupled_partners(model, label),
                 {}, {}, {}, conformal_weight(model, label.m, label.n), central_charge(model)};
  const Rational shift = out.c / Rational(24);
  const Rational twist = out.h / Rational(12);
  out.h_partner.reserve(out.partners.partners.size());
  out.lambda.reserve(out.partners.partners.size());
  out.r.reserve(out.partners.partners.size());
  for (const auto& pj : out.partners.partners) {
    Rational hj = conformal_weight(model, pj.m, pj.n);
    Rational lam = hj - shift;
    out.r.push_back(lam - twist);
    out.lambda.push_back(std::move(lam));
    out.h_partner.push_back(std::move(hj));
  }
  return out;
}

const char* prime_case_name(PrimeCase c) {
  switch (c) {
    case PrimeCase::Coincident: return "coincident";
    case PrimeCase::CaseI: return "case_i";
    case PrimeCase::CaseII: return "case_ii";
  }
  return "?";
}

namespace {

bool is_one_or_prime(std::int64_t s) { return s == 1 || is_prime(static_cast<long>(s)); }

}  // namespace

ClosedForms prime_case_closed_forms(const MinimalModel& model, const ModuleLabel& label) {
  const std::int64_t s = rep_dimension(model, label);
  if (!is_one_or_prime(s)) {
    throw error(errc::NotPrimeCase, "dimension " + std::to_string(s) + " is composite");
  }
  const std::int64_t p = model.p();
  const std::int64_t q = model.q();
  const bool case_i = label.m == p - 2 && label.n == q - s;
  const bool case_ii = label.m == p - 2 * s && label.n == q - 1;
  if (!case_i && !case_ii) {
    throw error(errc::NotPrimeCase, "label does not have a prime-dimension shape");
  }
  ClosedForms out{s == 1 ? PrimeCase::Coincident : (case_i ? PrimeCase::CaseI : PrimeCase::CaseII),
                  s, {}, {}};
  const Integer P = p;
  const Integer Q = q;
  const Integer S = s;
  for (std::int64_t jj = 1; jj <= s; ++jj) {
    const Integer j = jj;
    if (case_i) {
      const Integer a = 1 + S - 2 * j;
      const Integer b = 2 * j - (S + 1);
      out.lambda.emplace_back(3 * a * a * P * P + 2 * (2 + 3 * S - 6 * j) * P * Q + 3 * Q * Q,
                              48 * P * Q);
      out.r.emplace_back((3 * b * b + 1 - S * S) * P + 2 * (1 + 5 * S - 6 * j) * Q, 48 * Q);
    } else {
      const Integer a = 1 - 2 * j;
      out.lambda.emplace_back(3 * a * a * Q - 2 * P, 48 * P);
      out.r.emplace_back((3 * a * a + 1 - 4 * S * S) * Q + 4 * (S - 1) * P, 48 * P);
    }
  }
  return out;
}

bool monic_identity_check(const RepProfile& profile) {
  if (!is_one_or_prime(profile.s)) {
    throw error(errc::NotPrimeCase, "dimension " + std::to_string(profile.s) + " is composite");
  }
  Rational sum;
  for (const auto& l : profile.lambda) {
    sum += l;
  }
  const Rational s(static_cast<long>(profile.s));
  return profile.h == Rational(12) * sum / s + Rational(1) - s;
}

const char* irreducibility_name(Irreducibility i) {
  return i == Irreducibility::Irreducible ? "Irreducible" : "Inconclusive";
}

Irreducibility irreducibility_certificate(const RepProfile& profile, std::int64_t cap) {
  const std::int64_t s = profile.s;
  if (s > cap || s > 62) {
    throw error(errc::SubsetBlowup, "dimension " + std::to_string(s) + " exceeds subset cap " +
                                        std::to_string(cap));
  }
  if (s <= 1) {
    return Irreducibility::Irreducible;
  }
  // 12 r_j = a_j / D with a common denominator D; a subset hits a twelfth root
  // of unity iff its residues sum to 0 mod D.
  Integer D = 1;
  for (const auto& r : profile.r) {
    D = lcm(D, (Rational(12) * r).den());
  }
  if (D == 1) {
    return Irreducibility::Inconclusive;
  }
  std::vector<Integer> residues;
  residues.reserve(static_cast<std::size_t>(s));
  for (const auto& r : profile.r) {
    const Rational x = Rational(12) * r * Rational(D);
    Integer a = x.num() % D;
    if (a < 0) {
      a += D;
    }
    residues.push_back(a);
  }
  const std::uint64_t full = (std::uint64_t{1} << s) - 1;
  // Gray-code walk over all masks; each step toggles one element.
  if (D.fits_slong_p() && D < Integer(std::numeric_limits<long>::max() / 4)) {
    const long d = D.get_si();
    std::vector<long> a;
    for (const auto& x : residues) {
      a.push_back(x.get_si());
    }
    long sum = 0;
    std::uint64_t mask = 0;
    for (std::uint64_t i = 1; i <= full; ++i) {
      const int bit = __builtin_ctzll(i);
      mask ^= std::uint64_t{1} << bit;
      sum += (mask >> bit & 1) != 0 ? a[bit] : d - a[bit];
      sum %= d;
      if (sum == 0 && mask != full) {
        return Irreducibility::Inconclusive;
      }
    }
    return Irreducibility::Irreducible;
  }
  Integer sum = 0;
  std::uint64_t mask = 0;
  for (std::uint64_t i = 1; i <= full; ++i) {
    const int bit = __builtin_ctzll(i);
    mask ^= std::uint64_t{1} << bit;
    sum += (mask >> bit & 1) != 0 ? residues[bit] : Integer(D - residues[bit]);
    sum %= D;
    if (sum == 0 && mask != full) {
      return Irreducibility::Inconclusive;
    }
  }
  return Irreducibility::Irreducible;
}

AlphaProfile alpha_profile(const RepProfile& profile) {
  if (profile.s > 3) {
    throw error(errc::OutOfScopeDimension,
                "minimal weight formula is stated for dimension < 4, got " +
                    std::to_string(profile.s));
  }
  if (irreducibility_certificate(profile) != Irreducibility::Irreducible) {
    throw error(errc::IrreducibilityUnknown, "irreducibility not certified");
  }
  AlphaProfile out;
  Rational sum;
  for (const auto& l : profile.lambda) {
    out.alpha.push_back(l.frac());
    sum += out.alpha.back();
  }
  const Rational s(static_cast<long>(profile.s));
  out.k0 = Rational(12) * sum / s + Rational(1) - s;
  return out;
}

}  // namespace minrep
