#pragma once

#include "minrep/core.hpp"

#include <array>
#include <vector>

namespace minrep {

// Kac index pair as it appears inside a triple. Unlike ModuleLabel these are
// not canonicalized.
struct IndexPair {
  std::int64_t m;
  std::int64_t n;

  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

// {(m,n), (m_j,n_j), (m_k,n_k)}
using Triple = std::array<IndexPair, 3>;

// Partners (m_j, n_j) of an acting label for which {(m,n),(m_j,n_j),(m_j,n_j)}
// is admissible, taken from the half range (p+1)/2 <= m_j <= p-(m+1)/2,
// (n+1)/2 <= n_j <= q-(n+1)/2 and ordered lexicographically.
struct PartnerSet {
  ModuleLabel label;
  std::vector<IndexPair> partners;
};

// Rules (A1)-(A4) on t or on its (A5) image {(m,n),(p-m_j,q-n_j),(p-m_k,q-n_k)}.
bool is_admissible(const MinimalModel& model, const Triple& t);

// Throws NonCanonicalLabel unless m and n are both odd and in range.
PartnerSet self_coupled_partners(const MinimalModel& model, const ModuleLabel& label);

// (p-m)(q-n)/2
std::int64_t rep_dimension(const MinimalModel& model, const ModuleLabel& label);

// 1 iff admissible; OutOfRange if any pair leaves the (A1) box.
int fusion_coefficient(const MinimalModel& model, const IndexPair& i, const IndexPair& j,
                       const IndexPair& k);

}  // namespace minrep
