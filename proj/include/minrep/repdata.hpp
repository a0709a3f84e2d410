#pragma once

#include "minrep/fusion.hpp"

#include <optional>
#include <vector>

namespace minrep {

// Exponent data of rho_{m,n}. All vectors follow the partner order.
struct RepProfile {
  MinimalModel model;
  ModuleLabel label;
  std::int64_t s = 0;
  PartnerSet partners;
  std::vector<Rational> h_partner;  // h_{m_j,n_j}
  std::vector<Rational> lambda;     // leading exponents h_{m_j,n_j} - c/24
  std::vector<Rational> r;          // rho(T) exponents lambda_j - h_{m,n}/12
  Rational h;                       // h_{m,n}
  Rational c;
};

RepProfile rep_profile(const MinimalModel& model, const ModuleLabel& label);

enum class PrimeCase { Coincident, CaseI, CaseII };

const char* prime_case_name(PrimeCase c);

struct ClosedForms {
  PrimeCase tag;
  std::int64_t s;
  std::vector<Rational> lambda;
  std::vector<Rational> r;
};

// Closed forms for s = 1 or s prime: case (i) (m,n) = (p-2, q-s), case (ii)
// (m,n) = (p-2s, q-1). Throws NotPrimeCase otherwise.
ClosedForms prime_case_closed_forms(const MinimalModel& model, const ModuleLabel& label);

// h_{m,n} == 12 (sum lambda_j) / s + 1 - s. Throws NotPrimeCase unless s is 1
// or prime.
bool monic_identity_check(const RepProfile& profile);

enum class Irreducibility { Irreducible, Inconclusive };

const char* irreducibility_name(Irreducibility i);

inline constexpr std::int64_t kDefaultSubsetCap = 20;

// Irreducible when no nonempty proper subset of {r_j} has 12 * sum in Z.
// Throws SubsetBlowup when s exceeds the cap.
Irreducibility irreducibility_certificate(const RepProfile& profile,
                                          std::int64_t cap = kDefaultSubsetCap);

struct AlphaProfile {
  std::vector<Rational> alpha;  // frac(lambda_j)
  Rational k0;                  // 12 sum(alpha) / s + 1 - s
};

// Minimal-weight data; defined for s <= 3 irreducible representations only.
// Throws OutOfScopeDimension or IrreducibilityUnknown.
AlphaProfile alpha_profile(const RepProfile& profile);

}  // namespace minrep
