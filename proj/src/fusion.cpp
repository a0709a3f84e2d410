#include "minrep/fusion.hpp"

#include "minrep/error.hpp"

#include <string>

namespace minrep {

namespace {

bool in_box(const MinimalModel& model, const IndexPair& x) {
  return x.m > 0 && x.m < model.p() && x.n > 0 && x.n < model.q();
}

// (A1)-(A4) for a single representative.
bool rules_hold(const MinimalModel& model, const Triple& t) {
  for (const auto& x : t) {
    if (!in_box(model, x)) {
      return false;
    }
  }
  const auto [a, b, c] = t;
  const bool triangle_m = a.m < b.m + c.m && b.m < a.m + c.m && c.m < a.m + b.m;
  const bool triangle_n = a.n < b.n + c.n && b.n < a.n + c.n && c.n < a.n + b.n;
  if (!triangle_m || !triangle_n) {
    return false;
  }
  const std::int64_t sm = a.m + b.m + c.m;
  const std::int64_t sn = a.n + b.n + c.n;
  if (sm >= 2 * model.p() || sn >= 2 * model.q()) {
    return false;
  }
  return sm % 2 != 0 && sn % 2 != 0;
}

void require_acting(const MinimalModel& model, const ModuleLabel& label) {
  if (!is_acting_label(model, label)) {
    throw error(errc::NonCanonicalLabel, "label (" + std::to_string(label.m) + "," +
                                             std::to_string(label.n) +
                                             ") must have m, n odd and in range");
  }
}

}  // namespace

bool is_admissible(const MinimalModel& model, const Triple& t) {
  if (rules_hold(model, t)) {
    return true;
  }
  const Triple image{t[0], IndexPair{model.p() - t[1].m, model.q() - t[1].n},
                     IndexPair{model.p() - t[2].m, model.q() - t[2].n}};
  return rules_hold(model, image);
}

PartnerSet self_coupled_partners(const MinimalModel& model, const ModuleLabel& label) {
  require_acting(model, label);
  const std::int64_t p = model.p();
  const std::int64_t q = model.q();
  PartnerSet out{label, {}};
  out.partners.reserve(static_cast<std::size_t>(rep_dimension(model, label)));
  for (std::int64_t mj = (p + 1) / 2; mj <= p - (label.m + 1) / 2; ++mj) {
    for (std::int64_t nj = (label.n + 1) / 2; nj <= q - (label.n + 1) / 2; ++nj) {
      out.partners.push_back({mj, nj});
    }
  }
  return out;
}

std::int64_t rep_dimension(const MinimalModel& model, const ModuleLabel& label) {
  require_acting(model, label);
  return (model.p() - label.m) * (model.q() - label.n) / 2;
}

int fusion_coefficient(const MinimalModel& model, const IndexPair& i, const IndexPair& j,
                       const IndexPair& k) {
  for (const auto& x : {i, j, k}) {
    if (!in_box(model, x)) {
      throw error(errc::OutOfRange, "index pair outside (A1) bounds");
    }
  }
  return is_admissible(model, Triple{i, j, k}) ? 1 : 0;
}

}  // namespace minrep
