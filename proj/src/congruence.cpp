#include "minrep/congruence.hpp"

#include "minrep/error.hpp"

#include <algorithm>
#include <sstream>

namespace minrep {

namespace {

using i128 = __int128;

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Integer to_integer(i128 x) {
  // Values here are bounded by 48pq, which fits in 64 bits on the fast path.
  return Integer(static_cast<long>(x));
}

// Trial division seeded with primes known to be candidates.
std::vector<std::pair<long, int>> factorize(Integer N, const std::vector<long>& hints) {
  std::vector<std::pair<long, int>> out;
  auto take = [&](long r) {
    int t = 0;
    while (mpz_divisible_ui_p(N.get_mpz_t(), static_cast<unsigned long>(r)) != 0) {
      N /= r;
      ++t;
    }
    if (t > 0) {
      out.emplace_back(r, t);
    }
  };
  std::vector<long> primes;
  for (long h : hints) {
    for (long d = 2; d * d <= h; ++d) {
      if (h % d == 0) {
        primes.push_back(d);
        while (h % d == 0) {
          h /= d;
        }
      }
    }
    if (h > 1) {
      primes.push_back(h);
    }
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (long r : primes) {
    take(r);
  }
  for (long d = 2; N > 1; ++d) {
    if (Integer(d) * d > N) {
      out.emplace_back(N.get_si(), 1);
      break;
    }
    take(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool fits_fast_path(const MinimalModel& model) {
  return model.p() < (std::int64_t{1} << 26) && model.q() < (std::int64_t{1} << 26);
}

std::string factorization_string(const Level& level) {
  if (level.factorization.empty()) {
    return "1";
  }
  std::string out;
  for (const auto& [r, t] : level.factorization) {
    if (!out.empty()) {
      out += "*";
    }
    out += std::to_string(r);
    if (t > 1) {
      out += "^" + std::to_string(t);
    }
  }
  return out;
}

// alpha = ceil(r^(a-2)): 1 when a = 1, r^(a-2) otherwise.
std::int64_t ceil_power(long r, int a) {
  std::int64_t x = 1;
  for (int i = 2; i < a; ++i) {
    x *= r;
  }
  return x;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

Level level(const RepProfile& profile) {
  Integer N = 1;
  for (const auto& r : profile.r) {
    N = lcm(N, r.den());
  }
  return Level{N, factorize(N, {2, 3, static_cast<long>(profile.model.p()),
                                static_cast<long>(profile.model.q())})};
}

Level level(const MinimalModel& model, const ModuleLabel& label) {
  if (!fits_fast_path(model)) {
    return level(rep_profile(model, label));
  }
  const auto partners = self_coupled_partners(model, label);
  const i128 p = model.p();
  const i128 q = model.q();
  const i128 D = 48 * p * q;
  const i128 a = label.n * p - label.m * q;
  const i128 base = -a * a + (p - q) * (p - q) - 2 * p * q;
  // N = D / gcd(D, x_1, ..., x_s) with r_j = x_j / D.
  i128 g = D;
  for (const auto& pj : partners.partners) {
    const i128 b = pj.n * p - pj.m * q;
    g = gcd128(g, 12 * b * b + base);
    if (g == 1) {
      break;
    }
  }
  const Integer N = to_integer(D / g);
  return Level{N, factorize(N, {2, 3, static_cast<long>(model.p()), static_cast<long>(model.q())})};
}

Integer nw_min_dim(long r, int t) {
  if (!is_prime(r)) {
    throw error(errc::NotPrime, std::to_string(r) + " is not prime");
  }
  if (t < 1) {
    throw error(errc::OutOfRange, "exponent must be positive");
  }
  if (r == 2) {
    if (t <= 2) {
      return 1;
    }
    if (t == 3) {
      return 2;
    }
    Integer x = 3;
    mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(t - 4));
    return x;
  }
  if (t == 1) {
    return Integer((r - 1) / 2);
  }
  Integer rt;
  mpz_ui_pow_ui(rt.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(t - 2));
  return (Integer(r) * r - 1) * rt / 2;
}

Integer min_congruence_dim(const Level& level) {
  Integer d = 1;
  for (const auto& [r, t] : level.factorization) {
    d *= nw_min_dim(r, t);
  }
  return d;
}

namespace {

std::optional<NWCertificate> certificate_from(Level lvl, std::int64_t s) {
  Integer md = min_congruence_dim(lvl);
  if (Integer(s) < md) {
    return NWCertificate{std::move(lvl), std::move(md), s};
  }
  return std::nullopt;
}

}  // namespace

std::optional<NWCertificate> nw_noncongruence_certificate(const RepProfile& profile) {
  return certificate_from(level(profile), profile.s);
}

std::optional<NWCertificate> nw_noncongruence_certificate(const MinimalModel& model,
                                                          const ModuleLabel& label) {
  return certificate_from(level(model, label), rep_dimension(model, label));
}

ValuationReport valuation_check(const MinimalModel& model, const ModuleLabel& label, long r) {
  if (!is_prime(r)) {
    throw error(errc::NotPrime, std::to_string(r) + " is not prime");
  }
  if (r <= 3) {
    throw error(errc::HypothesisNotMet, "prime must exceed 3");
  }
  ValuationReport rep{r, ValuationSide::P, 0, 0, true, false, false};
  if (model.p() % r == 0) {
    rep.side = ValuationSide::P;
    rep.index_bound = label.m <= model.p() - 4;
    if (!rep.index_bound) {
      throw error(errc::HypothesisNotMet, "need m <= p-4");
    }
    rep.nu_model = valuation(Integer(model.p()), r);
  } else if (model.q() % r == 0) {
    rep.side = ValuationSide::Q;
    rep.index_bound = label.n <= model.q() - 3;
    if (!rep.index_bound) {
      throw error(errc::HypothesisNotMet, "need n <= q-3");
    }
    rep.nu_model = valuation(Integer(model.q()), r);
  } else {
    throw error(errc::HypothesisNotMet, std::to_string(r) + " divides neither p nor q");
  }
  rep.nu_level = valuation(level(model, label).N, r);
  rep.holds = rep.nu_level == rep.nu_model;
  return rep;
}

PredicateResult thm_pq_predicate(const MinimalModel& model, const ModuleLabel& label) {
  PredicateResult res;
  const auto [r, a] = prime_power(static_cast<long>(model.p()));
  const auto [s, b] = prime_power(static_cast<long>(model.q()));
  const bool shape = r > 3 && s > 3 && r != s;
  res.trace.push_back("p = r^a, q = s^b with distinct primes r, s > 3: " + yes_no(shape));
  if (!shape || !is_acting_label(model, label)) {
    if (shape) {
      res.trace.emplace_back("label has odd m and n: no");
    }
    return res;
  }
  const std::int64_t alpha = ceil_power(r, a);
  const std::int64_t beta = ceil_power(s, b);
  const std::int64_t m = label.m;
  const std::int64_t n = label.n;
  const bool m_ok = alpha <= m && m <= model.p() - 4;
  const bool n_ok = beta <= n && n <= model.q() - 4;
  const bool strict = alpha < m || beta < n;
  res.trace.push_back("alpha = " + std::to_string(alpha) + ", beta = " + std::to_string(beta));
  res.trace.push_back("alpha <= m <= p-4: " + yes_no(m_ok));
  res.trace.push_back("beta <= n <= q-4: " + yes_no(n_ok));
  res.trace.push_back("alpha < m or beta < n: " + yes_no(strict));
  res.holds = m_ok && n_ok && strict;
  return res;
}

PredicateResult cor_q2_predicate(const MinimalModel& model, const ModuleLabel& label) {
  PredicateResult res;
  if (!is_acting_label(model, label)) {
    res.trace.emplace_back("label has odd m and n: no");
    return res;
  }
  const std::int64_t p = model.p();
  const std::int64_t q = model.q();
  if (label.m == p - 2) {
    const auto [s, b] = prime_power(static_cast<long>(q));
    const bool shape = s > 3;
    res.trace.push_back("case i: m = p-2; q = s^b with prime s > 3: " + yes_no(shape));
    if (shape) {
      const std::int64_t beta = ceil_power(s, b);
      const bool bound = beta < label.n && label.n <= q - 4;
      res.trace.push_back("case i: beta = " + std::to_string(beta) +
                          " < n <= q-4: " + yes_no(bound));
      if (bound) {
        res.holds = true;
        res.tag = "i";
        return res;
      }
    }
  }
  if (label.n == q - 2 && q % 2 != 0 && q >= 3) {
    const auto [r, a] = prime_power(static_cast<long>(p));
    const bool shape = r > 3;
    res.trace.push_back("case ii: n = q-2, q odd; p = r^a with prime r > 3: " + yes_no(shape));
    if (shape) {
      const std::int64_t alpha = ceil_power(r, a);
      const bool bound = alpha < label.m && label.m <= p - 4;
      res.trace.push_back("case ii: alpha = " + std::to_string(alpha) +
                          " < m <= p-4: " + yes_no(bound));
      if (bound) {
        res.holds = true;
        res.tag = "ii";
        return res;
      }
    }
  }
  if (res.trace.empty()) {
    res.trace.emplace_back("neither m = p-2 nor n = q-2 (q odd)");
  }
  return res;
}

bool cor_pq2_predicate(const MinimalModel& model, const ModuleLabel& label) {
  const std::int64_t p = model.p();
  const std::int64_t q = model.q();
  if (!(p > 3 && q > 3 && p != q && is_prime(static_cast<long>(p)) &&
        is_prime(static_cast<long>(q)))) {
    return false;
  }
  if (!is_acting_label(model, label)) {
    return false;
  }
  const ModuleLabel exceptional[] = {{1, 1}, {1, q - 2}, {p - 2, 1}, {p - 2, q - 2}};
  for (const auto& e : exceptional) {
    if (label == e) {
      return false;
    }
  }
  return true;
}

const char* status_name(CongruenceStatus s) {
  switch (s) {
    case CongruenceStatus::Congruence: return "Congruence";
    case CongruenceStatus::Noncongruence: return "Noncongruence";
    case CongruenceStatus::Unknown: return "Unknown";
  }
  return "?";
}

const char* criterion_name(Criterion c) {
  switch (c) {
    case Criterion::VacuumKnown: return "VacuumKnown";
    case Criterion::Dim2CaseI: return "Dim2CaseI";
    case Criterion::Dim2CaseII_p5: return "Dim2CaseII_p5";
    case Criterion::Dim3FiniteImageUnknown: return "Dim3FiniteImageUnknown";
    case Criterion::NWDimensionBound: return "NWDimensionBound";
    case Criterion::ThmPQ: return "ThmPQ";
    case Criterion::CorQ2: return "CorQ2";
    case Criterion::CorPQ2: return "CorPQ2";
    case Criterion::Dim2CaseII_InfImage: return "Dim2CaseII_InfImage";
    case Criterion::Dim3CaseII_InfImage: return "Dim3CaseII_InfImage";
    case Criterion::Dim3LevelDivisor: return "Dim3LevelDivisor";
    case Criterion::OneDimensional: return "OneDimensional";
    case Criterion::None: return "None";
  }
  return "?";
}

CongruenceStatus parse_status(const std::string& text) {
  for (auto s : {CongruenceStatus::Congruence, CongruenceStatus::Noncongruence,
                 CongruenceStatus::Unknown}) {
    if (text == status_name(s)) {
      return s;
    }
  }
  throw error(errc::ParseError, "unknown status '" + text + "'");
}

Criterion parse_criterion(const std::string& text) {
  for (int i = 0; i <= static_cast<int>(Criterion::None); ++i) {
    const auto c = static_cast<Criterion>(i);
    if (text == criterion_name(c)) {
      return c;
    }
  }
  throw error(errc::ParseError, "unknown criterion '" + text + "'");
}

const char* low_dim_shape_name(LowDimShape s) {
  switch (s) {
    case LowDimShape::Dim1: return "d1";
    case LowDimShape::Dim2CaseI: return "d2i";
    case LowDimShape::Dim2CaseII: return "d2ii";
    case LowDimShape::Dim3CaseI: return "d3i";
    case LowDimShape::Dim3CaseII: return "d3ii";
  }
  return "?";
}

LowDimShape low_dim_shape(const MinimalModel& model, const ModuleLabel& label) {
  const std::int64_t s = rep_dimension(model, label);
  const std::int64_t p = model.p();
  if (s > 3) {
    throw error(errc::DimensionTooLarge, "dimension " + std::to_string(s) + " > 3");
  }
  if (s == 1) {
    return LowDimShape::Dim1;
  }
  if (s == 2) {
    return label.m == p - 2 ? LowDimShape::Dim2CaseI : LowDimShape::Dim2CaseII;
  }
  return label.m == p - 2 ? LowDimShape::Dim3CaseI : LowDimShape::Dim3CaseII;
}

CongruenceVerdict classify_low_dim(const MinimalModel& model, const ModuleLabel& label) {
  const LowDimShape shape = low_dim_shape(model, label);
  const Level lvl = level(model, label);
  CongruenceVerdict v;
  v.details["shape"] = low_dim_shape_name(shape);
  v.details["level"] = lvl.N.get_str();
  const std::int64_t p = model.p();
  const std::int64_t q = model.q();
  switch (shape) {
    case LowDimShape::Dim1:
      v.status = CongruenceStatus::Congruence;
      v.criterion = Criterion::OneDimensional;
      break;
    case LowDimShape::Dim2CaseI:
      v.status = CongruenceStatus::Congruence;
      v.criterion = Criterion::Dim2CaseI;
      if (p < 5 || q < 5) {
        v.details["note"] = "p or q below 5: exponents (5/24, -1/24) as in the p,q >= 5 family, "
                            "classification extended to this unstated case";
      }
      break;
    case LowDimShape::Dim2CaseII:
      if (p == 5) {
        v.status = CongruenceStatus::Congruence;
        v.criterion = Criterion::Dim2CaseII_p5;
      } else {
        v.status = CongruenceStatus::Noncongruence;
        v.criterion = Criterion::Dim2CaseII_InfImage;
      }
      break;
    case LowDimShape::Dim3CaseI: {
      // The level is 12q, or 4q when 3 | p - q. In the latter case 3 does not
      // divide q, so "12q divides 2^8 3^4 5^2 7^2" reduces to this same test.
      // 2^6 * 3^3 * 5^2 * 7^2
      constexpr std::int64_t kBound = 64 * 27 * 25 * 49;
      if (kBound % q != 0) {
        v.status = CongruenceStatus::Noncongruence;
        v.criterion = Criterion::Dim3LevelDivisor;
      } else {
        v.status = CongruenceStatus::Unknown;
        v.criterion = Criterion::Dim3FiniteImageUnknown;
      }
      break;
    }
    case LowDimShape::Dim3CaseII:
      v.status = CongruenceStatus::Noncongruence;
      v.criterion = Criterion::Dim3CaseII_InfImage;
      break;
  }
  return v;
}

CongruenceVerdict congruence_verdict(const MinimalModel& model, const ModuleLabel& label) {
  const std::int64_t s = rep_dimension(model, label);
  std::optional<CongruenceVerdict> low;
  if (s <= 3) {
    low = classify_low_dim(model, label);
  }
  const Level lvl = level(model, label);
  const Integer md = min_congruence_dim(lvl);
  const bool cert = Integer(s) < md;
  const PredicateResult pq = thm_pq_predicate(model, label);
  const PredicateResult q2 = cor_q2_predicate(model, label);
  const bool pq2 = cor_pq2_predicate(model, label);
  const bool vacuum = label == ModuleLabel{1, 1};

  std::vector<Criterion> fired;
  if (cert) fired.push_back(Criterion::NWDimensionBound);
  if (pq.holds) fired.push_back(Criterion::ThmPQ);
  if (q2.holds) fired.push_back(Criterion::CorQ2);
  if (pq2) fired.push_back(Criterion::CorPQ2);

  CongruenceVerdict v;
  if (low && low->status == CongruenceStatus::Congruence) {
    v = *low;
  } else if (vacuum) {
    v.status = CongruenceStatus::Congruence;
    v.criterion = Criterion::VacuumKnown;
    if (low && low->status == CongruenceStatus::Noncongruence) {
      v.details["conflict"] = std::string(criterion_name(low->criterion)) +
                              " classifies this label as noncongruence; the vacuum "
                              "representation is congruence";
    }
  } else if (low && low->status == CongruenceStatus::Noncongruence) {
    v = *low;
  } else if (cert) {
    v.status = CongruenceStatus::Noncongruence;
    v.criterion = Criterion::NWDimensionBound;
  } else if (!fired.empty()) {
    // A prime-power criterion fired without the dimension bound backing it.
    v.status = CongruenceStatus::Noncongruence;
    v.criterion = fired.front();
    v.details["consistency_violation"] = "prime-power criterion without dimension bound";
  } else if (low) {
    v = *low;
  }

  v.details["level"] = lvl.N.get_str();
  v.details["level_factorization"] = factorization_string(lvl);
  v.details["min_congruence_dim"] = md.get_str();
  v.details["dimension"] = std::to_string(s);
  if (!fired.empty()) {
    std::string list;
    for (auto c : fired) {
      list += (list.empty() ? "" : ",") + std::string(criterion_name(c));
    }
    v.details["certificates"] = list;
  }
  if (q2.holds) {
    v.details["cor_q2_case"] = q2.tag;
  }
  if (v.status == CongruenceStatus::Congruence && cert) {
    v.details["consistency_violation"] = "congruence classification with dimension-bound certificate";
  }
  return v;
}

}  // namespace minrep
