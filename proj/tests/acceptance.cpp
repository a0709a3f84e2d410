// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Where a quantity can be recomputed cheaply from first principles, the
// recomputation here is written independently of the library.

#include "minrep/analysis.hpp"
#include "minrep/congruence.hpp"
#include "minrep/error.hpp"
#include "minrep/fusion.hpp"
#include "minrep/qseries.hpp"
#include "minrep/repdata.hpp"
#include "minrep/scan.hpp"
#include "minrep/spaces.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

using namespace minrep;

namespace {

struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  void check(bool ok, const std::function<std::string()>& what) {
    ++checked;
    if (!ok && failed++ == 0) {
      first_failure = what();
    }
  }
};

int failures = 0;
auto lap = std::chrono::steady_clock::now();

void report(int id, const char* title, const Tally& t, const std::string& extra = "") {
  const bool ok = t.failed == 0 && t.checked > 0;
  const auto now = std::chrono::steady_clock::now();
  const double secs = std::chrono::duration<double>(now - lap).count();
  lap = now;
  failures += ok ? 0 : 1;
  std::printf("[%s] %2d %s: %zu checked, %zu failed%s%s (%.1f s)\n", ok ? "PASS" : "FAIL", id,
              title, t.checked, t.failed, extra.empty() ? "" : "; ", extra.c_str(), secs);
  if (!t.first_failure.empty()) {
    std::printf("       first failure: %s\n", t.first_failure.c_str());
  }
  std::fflush(stdout);
}

std::string cell(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t n) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(m) + "," +
         std::to_string(n) + ")";
}

void coprime_grid(std::int64_t pmax, std::int64_t qmax,
                  const std::function<void(const MinimalModel&)>& fn) {
  for (std::int64_t p = 3; p <= pmax; p += 2) {
    for (std::int64_t q = 2; q <= qmax; ++q) {
      if (std::gcd(p, q) == 1) {
        fn(validate_model(p, q));
      }
    }
  }
}

// h and c straight from their definitions.
Rational weight(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t n) {
  const std::int64_t a = n * p - m * q;
  return Rational(a * a - (p - q) * (p - q), 4 * p * q);
}

Rational charge(std::int64_t p, std::int64_t q) {
  return Rational(1) - Rational(6 * (p - q) * (p - q), p * q);
}

bool literal_rules(std::int64_t p, std::int64_t q, const std::array<std::pair<std::int64_t, std::int64_t>, 3>& t) {
  for (const auto& [m, n] : t) {
    if (m <= 0 || m >= p || n <= 0 || n >= q) return false;
  }
  const auto& [a, b, c] = t;
  const bool tri = a.first < b.first + c.first && b.first < a.first + c.first &&
                   c.first < a.first + b.first && a.second < b.second + c.second &&
                   b.second < a.second + c.second && c.second < a.second + b.second;
  const bool bound = a.first + b.first + c.first < 2 * p && a.second + b.second + c.second < 2 * q;
  const bool odd = (a.first + b.first + c.first) % 2 == 1 && (a.second + b.second + c.second) % 2 == 1;
  return tri && bound && odd;
}

// Exponents r_j of T for the label, from a literal enumeration of partners.
std::vector<Rational> oracle_r(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t n) {
  std::set<std::pair<std::int64_t, std::int64_t>> classes;
  for (std::int64_t mj = 1; mj < p; ++mj) {
    for (std::int64_t nj = 1; nj < q; ++nj) {
      if (literal_rules(p, q, {std::pair{m, n}, std::pair{mj, nj}, std::pair{mj, nj}})) {
        classes.insert(std::min(std::pair{mj, nj}, std::pair{p - mj, q - nj}));
      }
    }
  }
  std::vector<Rational> r;
  const Rational shift = charge(p, q) / Rational(24) + weight(p, q, m, n) / Rational(12);
  for (const auto& [mj, nj] : classes) {
    r.push_back(weight(p, q, mj, nj) - shift);
  }
  std::sort(r.begin(), r.end());
  return r;
}

Integer oracle_level(const std::vector<Rational>& r) {
  Integer n = 1;
  for (const auto& x : r) {
    n = lcm(n, x.den());
  }
  return n;
}

// nu_f of the level, with r_j = x_j / (48pq) summed over the partner box
// (p+1)/2 <= m_j <= p-(m+1)/2, (n+1)/2 <= n_j <= q-(n+1)/2, all in machine integers.
int oracle_level_valuation(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t n, long f) {
  auto nu = [f](std::int64_t x) {
    if (x == 0) return 1000;
    int e = 0;
    for (; x % f == 0; x /= f) ++e;
    return e;
  };
  const int top = nu(48 * p * q);
  const std::int64_t a = n * p - m * q;
  const std::int64_t base = (p - q) * (p - q) - 2 * p * q - a * a;
  int low = top;
  for (std::int64_t mj = (p + 1) / 2; mj <= p - (m + 1) / 2 && low > 0; ++mj) {
    for (std::int64_t nj = (n + 1) / 2; nj <= q - (n + 1) / 2 && low > 0; ++nj) {
      const std::int64_t b = nj * p - mj * q;
      low = std::min(low, nu(12 * b * b + base));
    }
  }
  return top - low;
}

std::vector<Rational> sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// --- q-series oracle: plain coefficient vectors, no library series code ---

using Coeffs = std::vector<Rational>;

Rational oracle_bernoulli(int k) {
  // Akiyama-Tanigawa, which yields B_1 = +1/2; only even k are used here.
  std::vector<Rational> a(k + 1);
  for (int m = 0; m <= k; ++m) {
    a[m] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j) {
      a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
    }
  }
  return a[0];
}

Coeffs oracle_eisenstein(int k, std::size_t order) {
  Integer fact = 1;
  for (int i = 2; i < k; ++i) fact *= i;
  Coeffs g(order + 1);
  g[0] = -oracle_bernoulli(k) / Rational(fact * k);
  for (std::size_t n = 1; n <= order; ++n) {
    Integer sigma = 0;
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d == 0) {
        Integer pw = 1;
        for (int e = 0; e < k - 1; ++e) pw *= static_cast<long>(d);
        sigma += pw;
      }
    }
    g[n] = Rational(Integer(2) * sigma) / Rational(fact);
  }
  return g;
}

Coeffs oracle_mul(const Coeffs& a, const Coeffs& b) {
  Coeffs c(std::min(a.size(), b.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) c[i] += a[j] * b[i - j];
  }
  return c;
}

// Modular derivative of a weight k form with integral leading exponent `offset`.
Coeffs oracle_derivative(const Coeffs& f, const Rational& offset, const Rational& k,
                         std::size_t order) {
  const Coeffs g2k = oracle_mul(oracle_eisenstein(2, order), f);
  Coeffs out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[i] = (offset + Rational(static_cast<long>(i))) * f[i] + k * g2k[i];
  }
  return out;
}

// The unique c with a = c b, if one exists.
std::optional<Rational> ratio(const Coeffs& a, const Coeffs& b) {
  std::optional<Rational> c;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (b[i].is_zero()) {
      if (!a[i].is_zero()) return std::nullopt;
      continue;
    }
    const Rational here = a[i] / b[i];
    if (c && *c != here) return std::nullopt;
    c = here;
  }
  return c;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();

  {  // 1
    Tally t;
    std::size_t zero_cases = 0;
    coprime_grid(30, 30, [&](const MinimalModel& model) {
      const std::int64_t p = model.p(), q = model.q();
      for (const auto& label : list_modules(model)) {
        const auto oracle = oracle_r(p, q, label.m, label.n).size();
        if (is_acting_label(model, label)) {
          const auto found = self_coupled_partners(model, label).partners.size();
          const auto formula = static_cast<std::size_t>((p - label.m) * (q - label.n) / 2);
          t.check(found == formula && oracle == formula,
                  [&] { return "partner count at " + cell(p, q, label.m, label.n); });
        } else {
          ++zero_cases;
          t.check(oracle == 0, [&] { return "even label with partners " + cell(p, q, label.m, label.n); });
        }
      }
    });
    report(1, "partner count equals (p-m)(q-n)/2 and the literal enumeration, p,q <= 30", t,
           std::to_string(zero_cases) + " canonical labels with an even index have no partners");
  }

  {  // 2 and 3
    Tally monic, closed;
    coprime_grid(50, 50, [&](const MinimalModel& model) {
      for (const auto& label : acting_labels(model)) {
        const std::int64_t s = rep_dimension(model, label);
        if (s != 1 && !is_prime(static_cast<long>(s))) continue;
        const RepProfile prof = rep_profile(model, label);
        monic.check(monic_identity_check(prof),
                    [&] { return cell(model.p(), model.q(), label.m, label.n); });
        const ClosedForms cf = prime_case_closed_forms(model, label);
        closed.check(sorted(cf.lambda) == sorted(prof.lambda) && sorted(cf.r) == sorted(prof.r) &&
                         sorted(cf.r) == oracle_r(model.p(), model.q(), label.m, label.n),
                     [&] { return cell(model.p(), model.q(), label.m, label.n); });
      }
    });
    report(2, "monic identity for s = 1 or prime, p,q <= 50", monic);
    report(3, "prime-dimension closed forms equal the general exponents, p,q <= 50", closed);
  }

  {  // 4
    Tally t;
    const std::vector<Rational> want = sorted({Rational(5, 24), Rational(-1, 24)});
    for (std::int64_t p = 5; p <= 49; p += 2) {
      for (std::int64_t q = 5; q <= 49; q += 2) {
        if (std::gcd(p, q) != 1) continue;
        const MinimalModel model = validate_model(p, q);
        const ModuleLabel label{p - 2, q - 2};
        t.check(sorted(rep_profile(model, label).r) == want && oracle_r(p, q, p - 2, q - 2) == want,
                [&] { return cell(p, q, p - 2, q - 2); });
      }
    }
    report(4, "(p-2,q-2) has exponents {5/24, -1/24}, odd 5 <= p,q <= 49", t);
  }

  {  // 5
    Tally t;
    std::size_t diff_ok = 0, level_4q = 0, level_4q_explained = 0;
    for (std::int64_t p = 3; p <= 40; p += 2) {
      for (std::int64_t q = 4; q <= 40; q += 2) {
        if (std::gcd(p, q) != 1) continue;
        const MinimalModel model = validate_model(p, q);
        const RepProfile prof = rep_profile(model, {p - 2, q - 3});
        const Integer N = level(prof).N;
        const bool diff = prof.s == 3 && prof.r[0] - prof.r[2] == Rational(1, 2);
        diff_ok += diff;
        if (N == 4 * q) {
          ++level_4q;
          level_4q_explained += (p - q) % 3 == 0;
        }
        t.check(diff && N == 12 * q && oracle_level(oracle_r(p, q, p - 2, q - 3)) == N, [&] {
          return cell(p, q, p - 2, q - 3) + " has level " + N.get_str();
        });
      }
    }
    report(5, "(p-2,q-3) has r1 - r3 = 1/2 and level 12q, p,q <= 40", t,
           "r1 - r3 = 1/2 in " + std::to_string(diff_ok) + " cases; level is 4q in " +
               std::to_string(level_4q) + " cases, " + std::to_string(level_4q_explained) +
               " of them with 3 | p - q");
    if (level_4q > 0) {
      std::printf("       note: r = (p+5q)/12q, (q-p)/6q, (p-q)/12q, so 3 | p - q cancels the 3 in 12q\n");
    }
  }

  {  // 6
    Tally t;
    const MinimalModel ly = validate_model(5, 2);
    const RepProfile lyp = rep_profile(ly, {1, 1});
    t.check(sorted(lyp.r) == sorted({Rational(-1, 60), Rational(11, 60)}), [] { return "Lee-Yang r"; });
    t.check(level(lyp).N == 60, [] { return "Lee-Yang level"; });
    t.check(congruence_verdict(ly, {1, 1}).status == CongruenceStatus::Congruence,
            [] { return "Lee-Yang verdict"; });
    const MinimalModel ising = validate_model(3, 4);
    const RepProfile ip = rep_profile(ising, {1, 1});
    t.check(sorted(ip.lambda) == sorted({Rational(-1, 48), Rational(1, 24), Rational(23, 48)}),
            [] { return "Ising lambda"; });
    const RepProfile ip3 = rep_profile(ising, {1, 3});
    t.check(ip3.r == std::vector<Rational>{Rational(0)} && level(ip3).N == 1,
            [] { return "Ising (1,3) T eigenvalue"; });
    t.check(analyze(ising, {1, 3}).spaces.status == SpaceStatus::Equal,
            [] { return "Ising (1,3) spaces"; });
    report(6, "Lee-Yang and Ising benchmarks", t);
  }

  {  // 7
    Tally t;
    coprime_grid(60, 60, [&](const MinimalModel& model) {
      for (const auto& label : acting_labels(model)) {
        for (const std::int64_t side : {model.p(), model.q()}) {
          for (long f = 5; f <= side; ++f) {
            if (side % f != 0 || !is_prime(f)) continue;
            ValuationReport v{};
            try {
              v = valuation_check(model, label, f);
            } catch (const error& e) {
              if (e.code() != errc::HypothesisNotMet) throw;
              continue;
            }
            const int want = valuation(Integer(side), f);
            const int got = oracle_level_valuation(model.p(), model.q(), label.m, label.n, f);
            t.check(v.holds && got == want && v.nu_level == got, [&] {
              return "prime " + std::to_string(f) + " at " + cell(model.p(), model.q(), label.m, label.n);
            });
          }
        }
      }
    });
    report(7, "nu_r(N) = nu_r(p) or nu_r(q) for primes r > 3 under the hypotheses, p,q <= 60", t);
  }

  {  // 8
    Tally t;
    const long primes[] = {5, 7, 11, 13, 17, 19, 23};
    for (long p : primes) {
      for (long q : primes) {
        if (p == q) continue;
        const MinimalModel model = validate_model(p, q);
        for (const auto& label : acting_labels(model)) {
          const std::set<std::pair<std::int64_t, std::int64_t>> exceptional = {
              {1, 1}, {1, q - 2}, {p - 2, 1}, {p - 2, q - 2}};
          if (exceptional.count({label.m, label.n})) continue;
          const CongruenceVerdict v = congruence_verdict(model, label);
          const auto certs = v.details.find("certificates");
          const bool nw = v.criterion == Criterion::NWDimensionBound ||
                          (certs != v.details.end() && certs->second.find("NWDimensionBound") != std::string::npos);
          t.check(v.status == CongruenceStatus::Noncongruence && nw,
                  [&] { return cell(p, q, label.m, label.n); });
        }
      }
    }
    report(8, "distinct primes 3 < p,q <= 23 away from the four exceptions are noncongruence", t);
  }

  {  // 9
    Tally t;
    std::size_t thm = 0, q2 = 0, pq2 = 0;
    for (const auto& c : scan_cells(60, 60)) {
      const bool cert = nw_noncongruence_certificate(c.model, c.label).has_value();
      const bool a = thm_pq_predicate(c.model, c.label).holds;
      const bool b = cor_q2_predicate(c.model, c.label).holds;
      const bool d = cor_pq2_predicate(c.model, c.label);
      thm += a;
      q2 += b;
      pq2 += d;
      const CongruenceVerdict v = congruence_verdict(c.model, c.label);
      const bool congruent = v.status == CongruenceStatus::Congruence;
      t.check((!a || cert) && (!b || cert) && (!d || cert) && !(congruent && (cert || a || b || d)) &&
                  v.details.count("consistency_violation") == 0,
              [&] { return cell(c.model.p(), c.model.q(), c.label.m, c.label.n); });
    }
    report(9, "prime-power criteria imply the dimension bound and never meet a congruence verdict, p,q <= 60",
           t, "fired: thm_pq " + std::to_string(thm) + ", cor_q2 " + std::to_string(q2) +
                  ", cor_pq2 " + std::to_string(pq2));
  }

  {  // 10
    Tally t;
    coprime_grid(60, 60, [&](const MinimalModel& model) {
      for (const auto& label : acting_labels(model)) {
        if (rep_dimension(model, label) > 3) continue;
        t.check(ratio_lambda_consistency(model, label),
                [&] { return cell(model.p(), model.q(), label.m, label.n); });
      }
    });
    report(10, "q/p window membership agrees with all lambda in [0,1), s <= 3, p,q <= 60", t);
  }

  {  // 11
    constexpr std::size_t T = 40;
    Tally t;
    for (int w = 1; w <= 24; ++w) {
      const ModularForm eta = eta_power(w, T);
      const QSeries d = modular_derivative(eta).series;
      t.check(d.is_zero() && d.truncation_order() == T,
              [&] { return "D eta^" + std::to_string(w); });
    }
    const Coeffs o4 = oracle_eisenstein(4, T), o6 = oracle_eisenstein(6, T);
    const auto c4 = ratio(oracle_derivative(o4, Rational(0), Rational(4), T), o6);
    const auto c6 = ratio(oracle_derivative(o6, Rational(0), Rational(6), T), oracle_mul(o4, o4));
    t.check(c4 == std::optional<Rational>(Rational(14)), [] { return "oracle constant for D G4"; });
    t.check(c6 == std::optional<Rational>(Rational(60, 7)), [] { return "oracle constant for D G6"; });
    const ModularForm g2 = eisenstein(2, T), g4 = eisenstein(4, T), g6 = eisenstein(6, T);
    t.check(g4.series.coefficients() == o4 && g6.series.coefficients() == o6,
            [] { return "Eisenstein coefficients differ from the divisor-sum oracle"; });
    if (c4 && c6) {
      t.check(modular_derivative(g4).series == g6.series.scaled(*c4), [] { return "D G4"; });
      t.check(modular_derivative(g6).series == (g4 * g4).series.scaled(*c6), [] { return "D G6"; });
    }
    t.check(g2.series.coefficients()[0] == Rational(-1, 12), [] { return "G2 constant"; });
    t.check(g4.series.coefficients()[0] == Rational(1, 720), [] { return "G4 constant"; });
    t.check(g6.series.coefficients()[0] == Rational(-1, 30240), [] { return "G6 constant"; });
    const bool literal42 = modular_derivative(g4).series == g6.series.scaled(Rational(42));
    const bool literal2021 = modular_derivative(g6).series == (g4 * g4).series.scaled(Rational(20, 21));
    report(11, "q-series identities to order 40 with oracle-derived constants", t,
           "oracle gives D G4 = " + (c4 ? c4->str() : std::string("none")) + " G6 and D G6 = " +
               (c6 ? c6->str() : std::string("none")) + " G4^2");
    std::printf("       note: with constants 42 and 20/21 the identities %s\n",
                literal42 || literal2021 ? "hold" : "do not hold for this normalization");
  }

  {  // 12
    Tally t;
    ScanOptions opts;
    opts.p_max = 20;
    opts.q_max = 20;
    for (auto fmt : {ScanFormat::Csv, ScanFormat::Jsonl}) {
      opts.format = fmt;
      opts.jobs = 1;
      const std::string one = scan_to_string(opts);
      opts.jobs = 8;
      const std::string eight = scan_to_string(opts);
      t.check(one == eight && !one.empty(),
              [&] { return fmt == ScanFormat::Csv ? "csv output differs" : "jsonl output differs"; });
    }
    report(12, "scan output is byte-identical for --jobs 1 and --jobs 8, p,q <= 20", t);
  }

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("total %.1f s, %d criteria failed\n", secs, failures);
  return failures == 0 ? 0 : 1;
}
