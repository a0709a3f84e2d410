#include "minrep/error.hpp"
#include "minrep/repdata.hpp"

#include "doctest.h"

#include <algorithm>
#include <numeric>

using namespace minrep;

namespace {

RepProfile profile(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t n) {
  return rep_profile(validate_model(p, q), {m, n});
}

std::vector<Rational> sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Irreducible iff no nonempty proper subset has 12 * sum integral.
bool oracle_irreducible(const std::vector<Rational>& r) {
  const std::size_t s = r.size();
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << s); ++mask) {
    Rational sum;
    for (std::size_t j = 0; j < s; ++j) {
      if (mask >> j & 1) {
        sum += r[j];
      }
    }
    if ((sum * Rational(12)).is_integer()) {
      return false;
    }
  }
  return true;
}

template <class Fn>
void for_each_cell(std::int64_t grid, Fn fn) {
  for (std::int64_t p = 3; p <= grid; p += 2) {
    for (std::int64_t q = 2; q <= grid; ++q) {
      if (std::gcd(p, q) != 1) {
        continue;
      }
      const MinimalModel model = validate_model(p, q);
      for (const auto& label : acting_labels(model)) {
        fn(model, label);
      }
    }
  }
}

}  // namespace

TEST_CASE("profile examples") {
  const RepProfile ising = profile(3, 4, 1, 1);
  const std::vector<Rational> expect{Rational(23, 48), Rational(1, 24), Rational(-1, 48)};
  CHECK(ising.lambda == expect);
  CHECK(ising.r == expect);
  CHECK(profile(5, 2, 1, 1).r == std::vector<Rational>{Rational(-1, 60), Rational(11, 60)});
  CHECK(profile(5, 7, 3, 5).r == std::vector<Rational>{Rational(5, 24), Rational(-1, 24)});
  CHECK(profile(7, 2, 3, 1).r == std::vector<Rational>{Rational(1, 84), Rational(13, 84)});
  CHECK(profile(7, 2, 1, 1).r ==
        std::vector<Rational>{Rational(-1, 42), Rational(5, 42), Rational(17, 42)});
  CHECK(profile(3, 8, 1, 5).r ==
        std::vector<Rational>{Rational(43, 96), Rational(5, 48), Rational(-5, 96)});
  CHECK(profile(3, 44, 1, 41).r[0] == Rational(223, 528));
  CHECK(profile(5, 2, 3, 1).lambda == std::vector<Rational>{Rational(-1, 60)});
  CHECK(profile(3, 4, 1, 3).lambda == std::vector<Rational>{Rational(1, 24)});
}

TEST_CASE("profile invariants on the grid") {
  for_each_cell(24, [](const MinimalModel& model, const ModuleLabel& label) {
    const RepProfile prof = rep_profile(model, label);
    const std::int64_t p = model.p(), q = model.q();
    REQUIRE(prof.s == (p - label.m) * (q - label.n) / 2);
    REQUIRE(prof.lambda.size() == static_cast<std::size_t>(prof.s));
    REQUIRE(prof.r.size() == static_cast<std::size_t>(prof.s));
    REQUIRE(prof.h_partner.size() == static_cast<std::size_t>(prof.s));
    const Rational a = label.n * p - label.m * q;
    for (std::size_t j = 0; j < prof.r.size(); ++j) {
      REQUIRE(prof.r[j] - prof.lambda[j] == -prof.h / Rational(12));
      const auto& pj = prof.partners.partners[j];
      const Rational b = pj.n * p - pj.m * q;
      const Rational x = Rational(12) * b * b - a * a + Rational((p - q) * (p - q) - 2 * p * q);
      REQUIRE(prof.r[j] == x / Rational(48 * p * q));
    }
  });
}

TEST_CASE("closed forms for prime dimension") {
  const ClosedForms lee_yang = prime_case_closed_forms(validate_model(5, 2), {3, 1});
  CHECK(lee_yang.lambda == std::vector<Rational>{Rational(-1, 60)});
  const ClosedForms ising13 = prime_case_closed_forms(validate_model(3, 4), {1, 3});
  CHECK(ising13.lambda == std::vector<Rational>{Rational(1, 24)});
  const ClosedForms d3 = prime_case_closed_forms(validate_model(3, 8), {1, 5});
  CHECK(d3.tag == PrimeCase::CaseI);
  CHECK(d3.r[0] - d3.r[2] == Rational(1, 2));
  CHECK_THROWS_AS(prime_case_closed_forms(validate_model(5, 7), {1, 3}), error);

  std::size_t checked = 0;
  for_each_cell(50, [&](const MinimalModel& model, const ModuleLabel& label) {
    const std::int64_t s = rep_dimension(model, label);
    if (s != 1 && !is_prime(static_cast<long>(s))) {
      return;
    }
    const RepProfile prof = rep_profile(model, label);
    const ClosedForms cf = prime_case_closed_forms(model, label);
    REQUIRE(sorted(cf.lambda) == sorted(prof.lambda));
    REQUIRE(sorted(cf.r) == sorted(prof.r));
    REQUIRE(monic_identity_check(prof));
    ++checked;
  });
  CHECK(checked > 1000);
}

TEST_CASE("monic identity examples") {
  CHECK(monic_identity_check(profile(5, 2, 3, 1)));
  CHECK(monic_identity_check(profile(5, 7, 3, 5)));
  CHECK(monic_identity_check(profile(3, 4, 1, 3)));
  CHECK(profile(5, 7, 3, 5).h == Rational(3, 35));
}

TEST_CASE("two-dimensional case (i) is rigid") {
  for (std::int64_t p = 3; p <= 41; p += 2) {
    for (std::int64_t q = 3; q <= 41; q += 2) {
      if (std::gcd(p, q) != 1) {
        continue;
      }
      CAPTURE(p);
      CAPTURE(q);
      CHECK(sorted(profile(p, q, p - 2, q - 2).r) == sorted({Rational(5, 24), Rational(-1, 24)}));
    }
  }
}

TEST_CASE("minimal weight data") {
  const AlphaProfile ising = alpha_profile(profile(3, 4, 1, 3));
  CHECK(ising.alpha == std::vector<Rational>{Rational(1, 24)});
  CHECK(ising.k0 == Rational(1, 2));
  const AlphaProfile ly = alpha_profile(profile(5, 2, 3, 1));
  CHECK(ly.alpha == std::vector<Rational>{Rational(59, 60)});
  CHECK(ly.k0 == Rational(59, 5));
  CHECK_THROWS_AS(alpha_profile(profile(5, 7, 1, 3)), error);

  for_each_cell(30, [](const MinimalModel& model, const ModuleLabel& label) {
    if (rep_dimension(model, label) > 3) {
      return;
    }
    const RepProfile prof = rep_profile(model, label);
    if (irreducibility_certificate(prof) != Irreducibility::Irreducible) {
      return;
    }
    const AlphaProfile a = alpha_profile(prof);
    bool all_unit = true;
    for (std::size_t j = 0; j < a.alpha.size(); ++j) {
      REQUIRE(a.alpha[j] >= Rational(0));
      REQUIRE(a.alpha[j] < Rational(1));
      REQUIRE((a.alpha[j] - prof.lambda[j]).is_integer());
      all_unit = all_unit && prof.lambda[j] >= Rational(0) && prof.lambda[j] < Rational(1);
    }
    if (all_unit) {
      REQUIRE(a.k0 == prof.h);
    }
  });
}

TEST_CASE("irreducibility certificate") {
  CHECK(irreducibility_certificate(profile(3, 4, 1, 1)) == Irreducibility::Irreducible);
  CHECK(irreducibility_certificate(profile(3, 4, 1, 3)) == Irreducibility::Irreducible);
  // r = (5/24, -1/24): the pair sums to 1/6, but singletons are not twelfths.
  CHECK(irreducibility_certificate(profile(5, 7, 3, 5)) == Irreducibility::Irreducible);
  CHECK_THROWS_AS(irreducibility_certificate(profile(5, 7, 1, 3), 4), error);

  for_each_cell(16, [](const MinimalModel& model, const ModuleLabel& label) {
    const RepProfile prof = rep_profile(model, label);
    if (prof.s > 14) {
      return;
    }
    const bool expected = oracle_irreducible(prof.r);
    REQUIRE((irreducibility_certificate(prof) == Irreducibility::Irreducible) == expected);
  });
}
