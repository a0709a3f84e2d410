#pragma once

#include "minrep/rational.hpp"

#include <cstdint>
#include <vector>

namespace minrep {

// Virasoro minimal model V(p,q) in the odd-p convention: p >= 3 odd,
// q >= 2, gcd(p,q) = 1. Construct through validate_model().
class MinimalModel {
public:
  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }

  friend bool operator==(const MinimalModel&, const MinimalModel&) = default;

private:
  MinimalModel(std::int64_t p, std::int64_t q) : p_(p), q_(q) {}
  friend MinimalModel validate_model(std::int64_t p, std::int64_t q);

  std::int64_t p_;
  std::int64_t q_;
};

// Kac label of an irreducible module. Labels produced by canonical_label()
// always carry an odd m.
struct ModuleLabel {
  std::int64_t m;
  std::int64_t n;

  friend auto operator<=>(const ModuleLabel&, const ModuleLabel&) = default;
};

// Swaps an even first member to second place. Throws OutOfRange, NotCoprime.
MinimalModel validate_model(std::int64_t p, std::int64_t q);

// c = 1 - 6(p-q)^2/(pq)
Rational central_charge(const MinimalModel& model);

// h_{m,n} = ((np - mq)^2 - (p-q)^2) / (4pq); requires 1 <= m < p, 1 <= n < q.
Rational conformal_weight(const MinimalModel& model, std::int64_t m, std::int64_t n);

// Representative of L_{m,n} = L_{p-m,q-n} with odd m.
ModuleLabel canonical_label(const MinimalModel& model, std::int64_t m, std::int64_t n);

// All (p-1)(q-1)/2 irreducible modules, ordered by (m, n).
std::vector<ModuleLabel> list_modules(const MinimalModel& model);

// True when both m and n are odd, i.e. the label can act through
// self-coupled admissible triples.
bool is_acting_label(const MinimalModel& model, const ModuleLabel& label);

// Labels with m and n odd, ordered by (m, n).
std::vector<ModuleLabel> acting_labels(const MinimalModel& model);

}  // namespace minrep
