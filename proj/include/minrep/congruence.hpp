#pragma once

#include "minrep/repdata.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace minrep {

// Order of rho(T), with its prime factorization.
struct Level {
  Integer N;
  std::vector<std::pair<long, int>> factorization;

  friend bool operator==(const Level&, const Level&) = default;
};

// lcm of the reduced denominators of the r_j.
Level level(const RepProfile& profile);
// Same value through x_j = 48pq r_j integer arithmetic; no profile needed.
Level level(const MinimalModel& model, const ModuleLabel& label);

// Smallest dimension of a nontrivial irreducible representation of
// SL2(Z/r^t Z). Throws NotPrime, OutOfRange (t < 1).
Integer nw_min_dim(long r, int t);

// Product of nw_min_dim over the prime powers exactly dividing N; 1 for N = 1.
Integer min_congruence_dim(const Level& level);

struct NWCertificate {
  Level level;
  Integer min_dim;
  std::int64_t s;
};

// Present iff s < min_congruence_dim(level).
std::optional<NWCertificate> nw_noncongruence_certificate(const RepProfile& profile);
std::optional<NWCertificate> nw_noncongruence_certificate(const MinimalModel& model,
                                                          const ModuleLabel& label);

enum class ValuationSide { P, Q };

struct ValuationReport {
  long prime;
  ValuationSide side;
  int nu_level;  // nu_r(N)
  int nu_model;  // nu_r(p) or nu_r(q)
  bool prime_above_three;
  bool index_bound;  // m <= p-4 (side P) or n <= q-3 (side Q)
  bool holds;        // nu_level == nu_model
};

// Throws HypothesisNotMet when r <= 3, r does not divide pq, or the index
// bound fails; NotPrime when r is not prime.
ValuationReport valuation_check(const MinimalModel& model, const ModuleLabel& label, long r);

struct PredicateResult {
  bool holds = false;
  std::string tag;                 // case tag, empty when not applicable
  std::vector<std::string> trace;  // one entry per checked condition
};

PredicateResult thm_pq_predicate(const MinimalModel& model, const ModuleLabel& label);
PredicateResult cor_q2_predicate(const MinimalModel& model, const ModuleLabel& label);
bool cor_pq2_predicate(const MinimalModel& model, const ModuleLabel& label);

enum class CongruenceStatus { Congruence, Noncongruence, Unknown };

enum class Criterion {
  VacuumKnown,
  Dim2CaseI,
  Dim2CaseII_p5,
  Dim3FiniteImageUnknown,
  NWDimensionBound,
  ThmPQ,
  CorQ2,
  CorPQ2,
  Dim2CaseII_InfImage,
  Dim3CaseII_InfImage,
  Dim3LevelDivisor,
  OneDimensional,
  None,
};

const char* status_name(CongruenceStatus s);
const char* criterion_name(Criterion c);
CongruenceStatus parse_status(const std::string& text);
Criterion parse_criterion(const std::string& text);

struct CongruenceVerdict {
  CongruenceStatus status = CongruenceStatus::Unknown;
  Criterion criterion = Criterion::None;
  std::map<std::string, std::string> details;

  friend bool operator==(const CongruenceVerdict&, const CongruenceVerdict&) = default;
};

// Shapes of dimension <= 3 labels.
enum class LowDimShape { Dim1, Dim2CaseI, Dim2CaseII, Dim3CaseI, Dim3CaseII };

const char* low_dim_shape_name(LowDimShape s);

// Throws DimensionTooLarge for s > 3.
LowDimShape low_dim_shape(const MinimalModel& model, const ModuleLabel& label);

// Classification of dimensions 1-3. Throws DimensionTooLarge for s > 3.
CongruenceVerdict classify_low_dim(const MinimalModel& model, const ModuleLabel& label);

// Aggregated verdict: low-dimensional classification and the vacuum, then
// the dimension bound, then the prime-power criteria.
CongruenceVerdict congruence_verdict(const MinimalModel& model, const ModuleLabel& label);

}  // namespace minrep
