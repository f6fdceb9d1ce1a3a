#include <cmath>

#include "bidisk/errors.hpp"
#include "bidisk/invariants.hpp"
#include "bidisk/numbers.hpp"
#include "doctest.h"

using namespace bidisk;

TEST_CASE("generic pairings") {
  HomogeneousSymbol p2 = symbol_for(Submodule::zw2);
  CHECK(pairing_generic(p2, 0, 0) == Rational(1));
  CHECK(pairing_generic(p2, 0, 2) == Rational(1, 6));
  CHECK(pairing_generic(p2, 1, 2).abs() == Rational(2, 15));
}

TEST_CASE("case-table pairings for zw2") {
  CHECK(pairing_cases_zw2(2, 7) == Rational(0));
  CHECK(pairing_cases_zw2(0, 1) == Rational(-2, 3));
  CHECK(pairing_cases_zw2(1, 2).abs() == Rational(2, 15));
  // agreement with the generic route, with sign for n >= k-1
  HomogeneousSymbol p2 = symbol_for(Submodule::zw2);
  for (unsigned n = 0; n <= 10; ++n) {
    for (unsigned k = 0; k <= 12; ++k) {
      Rational generic = pairing_generic(p2, n, k);
      Rational cases = pairing_cases_zw2(n, k);
      REQUIRE(generic.abs() == cases.abs());
      if (k <= n + 1) REQUIRE(generic == cases);
    }
  }
}

TEST_CASE("pairing magnitudes never exceed one") {
  for (const char* text : {"1,-2,1", "-1,1", "1,1,1", "2/3,0,-5/7,1"}) {
    HomogeneousSymbol p = HomogeneousSymbol::parse(text);
    for (unsigned n = 0; n <= 8; ++n)
      for (unsigned k = 0; k <= 10; ++k)
        REQUIRE(pairing_generic(p, n, k).abs() <= Rational(1));
  }
}

TEST_CASE("closed sigma terms") {
  CHECK(sigma_term_closed(Submodule::zw2, 1, 0) == Rational(2, 3));
  CHECK(sigma_term_closed(Submodule::zw2, 2, 0) == Rational(-1, 6));
  CHECK(sigma_term_closed(Submodule::zw, 1, 2) == Rational(1, 4));
  CHECK_THROWS_AS(sigma_term_closed(Submodule::zw2, 0, 5), domain_error);
  CHECK_THROWS_AS(sigma_term_closed(Submodule::zw2, 5, 2), domain_error);
  CHECK_THROWS_AS(sigma_term_closed(Submodule::zw, 5, 3), domain_error);
}

TEST_CASE("partial sums") {
  CHECK(sigma_partial(Submodule::zw2, 0, 0) == Rational(1));
  CHECK(sigma_partial(Submodule::zw, 1, 1) == Rational(13, 36));
  CHECK(sigma_partial(Submodule::zw2, 0, 2) == Rational(61, 36));
  // monotone nondecreasing in N
  Rational prev(0);
  for (unsigned long n = 0; n <= 30; ++n) {
    Rational cur = sigma_partial(Submodule::zw2, 3, n);
    REQUIRE(cur >= prev);
    prev = cur;
  }
}

TEST_CASE("partial sums via the generic route match the closed terms") {
  for (Submodule s : {Submodule::zw, Submodule::zw2}) {
    HomogeneousSymbol p = symbol_for(s);
    for (unsigned k = 0; k <= 4; ++k)
      REQUIRE(sigma_partial(s, k, 12) == sigma_partial(p, k, 12));
  }
}

TEST_CASE("monomial symbols have trivial invariants") {
  HomogeneousSymbol z = HomogeneousSymbol::parse("0,1");
  CHECK(sigma_partial(z, 0, 10) == Rational(1));
  CHECK(sigma_partial(z, 1, 10) == Rational(0));
  CHECK(sigma_partial(z, 2, 10) == Rational(0));
}

TEST_CASE("tail bounds") {
  CHECK(sigma_tail_bound(Submodule::zw, 1, 10) == Rational(1, 11));
  CHECK(sigma_tail_bound(Submodule::zw, 1, 999) == Rational(1, 1000));
  CHECK(sigma_tail_bound(Submodule::zw2, 0, 10) == Rational(4, 12));
  CHECK_THROWS_AS(sigma_tail_bound(Submodule::zw2, 10, 4), domain_error);
}

TEST_CASE("tail bounds enclose the closed form at every stated truncation") {
  // 0 <= Sigma_k - partial(N) <= tail(N) for k <= 20 and N in {10, 100, 1000},
  // wherever N reaches the first nonzero term; comparisons are exact.
  for (Submodule s : {Submodule::zw, Submodule::zw2}) {
    for (unsigned k = 0; k <= 20; ++k) {
      unsigned long first = k == 0 ? 0 : (s == Submodule::zw2 ? (k > 2 ? k - 2 : 0) : k - 1);
      for (unsigned long n : {10ul, 100ul, 1000ul}) {
        if (n < first) continue;
        Rational partial = sigma_partial(s, k, n);
        PiQuadratic gap = sigma_closed(s, k) - PiQuadratic(Rational(0), partial);
        REQUIRE(qpi2_sign(gap) != Sign::negative);
        PiQuadratic slack = PiQuadratic(Rational(0), sigma_tail_bound(s, k, n)) - gap;
        REQUIRE(qpi2_sign(slack) != Sign::negative);
      }
    }
  }
}

TEST_CASE("partial fraction coefficients") {
  PartialFractionSpec two = pf_coefficients_zw2(2);
  CHECK(two.amps[0] == Rational(0));  // (8-12+4)/2
  CHECK(two.shifts == std::vector<unsigned long>{0, 1, 2, 3});
  CHECK(pf_coefficients_zw2(3).amps[0] == Rational(3));  // (27-27+6)/2
  CHECK_THROWS_AS(pf_coefficients_zw2(1), domain_error);
  CHECK_THROWS_AS(pf_coefficients_zw2(0), domain_error);

  for (unsigned k = 2; k <= 30; ++k) {
    PartialFractionSpec spec = pf_coefficients_zw2(k);
    // sum of amplitudes equals lim m f(m) = 1
    Rational total(0);
    for (const auto& a : spec.amps) total += a;
    REQUIRE(total == Rational(1));
    // the decomposition reproduces the rational function itself
    for (long m = 1; m <= 8; ++m) {
      Int im(m), ik(k);
      Rational f(im * ((im + ik - 2) * (im + ik + 1) - 3 * ik * ik + 3 * ik),
                 (im + ik - 2) * (im + ik - 1) * (im + ik) * (im + ik + 1));
      Rational sum(0);
      for (std::size_t j = 0; j < spec.amps.size(); ++j)
        sum += spec.amps[j] / Rational(im + Int(spec.shifts[j]));
      REQUIRE(f == sum);
    }
  }
}

TEST_CASE("squared partial-fraction sums") {
  PartialFractionSpec zeta2{{Rational(1)}, {0}};
  CHECK(squared_pf_sum(zeta2) == PiQuadratic(Rational(1, 6), Rational(0)));
  PartialFractionSpec shifted{{Rational(1)}, {1}};
  CHECK(squared_pf_sum(shifted) == PiQuadratic(Rational(1, 6), Rational(-1)));
  PartialFractionSpec telescoping{{Rational(1), Rational(-1)}, {0, 1}};
  PiQuadratic third = squared_pf_sum(telescoping);
  CHECK(third == PiQuadratic(Rational(1, 3), Rational(-3)));
  // numeric oracle: sum_{m=1}^{200000} 1/(m^2 (m+1)^2) to ~1e-10
  double acc = 0.0;
  for (double m = 1; m <= 200000; ++m) acc += 1.0 / (m * m * (m + 1) * (m + 1));
  CHECK(to_double(third) == doctest::Approx(acc).epsilon(1e-9));

  PartialFractionSpec dup{{Rational(1), Rational(2)}, {3, 3}};
  CHECK_THROWS_AS(squared_pf_sum(dup), duplicate_shift_error);
  PartialFractionSpec mismatched{{Rational(1)}, {0, 1}};
  CHECK_THROWS_AS(squared_pf_sum(mismatched), dimension_error);
}

TEST_CASE("closed invariants") {
  CHECK(sigma_closed(Submodule::zw2, 0) == PiQuadratic(Rational(2, 3), Rational(-4)));
  CHECK(sigma_closed(Submodule::zw2, 1) == PiQuadratic(Rational(2, 3), Rational(-5)));
  CHECK(sigma_closed(Submodule::zw2, 2) == PiQuadratic(Rational(178, 3), Rational(-585)));
  CHECK(sigma_closed(Submodule::zw2, 3) == PiQuadratic(Rational(2906, 3), Rational(-9560)));
  CHECK(sigma_closed(Submodule::zw2, 4) ==
        PiQuadratic(Rational(20138, 3), Rational(-596260, 9)));
  CHECK(sigma_closed(Submodule::zw, 0) == PiQuadratic(Rational(1, 6), Rational(0)));
  CHECK(sigma_closed(Submodule::zw, 1) == PiQuadratic(Rational(1, 6), Rational(-1)));
  CHECK(sigma_closed(Submodule::zw, 2) == PiQuadratic(Rational(5, 6), Rational(-8)));
  CHECK(sigma_closed(Submodule::zw, 3) == PiQuadratic(Rational(13, 6), Rational(-85, 4)));
}

TEST_CASE("series equals closed form") {
  for (unsigned k = 3; k <= 12; ++k) {
    PiQuadratic series = squared_pf_sum(pf_coefficients_zw2(k)) * Rational(4);
    REQUIRE(series == sigma_closed(Submodule::zw2, k));
  }
}

TEST_CASE("Hilbert-Schmidt identities") {
  HsIdentities zw2 = hs_identities(Submodule::zw2);
  CHECK(zw2.hs_norm_sq == PiQuadratic(Rational(4, 3), Rational(-9)));
  HsIdentities zw = hs_identities(Submodule::zw);
  CHECK(zw.sigma0 - zw.sigma1 == PiQuadratic(Rational(0), Rational(1)));
  CHECK(zw.hs_norm_sq == PiQuadratic(Rational(1, 3), Rational(-1)));
}

TEST_CASE("core operator eigenvalues") {
  auto rows = core_eigenvalues(Submodule::zw2, 5);
  REQUIRE(rows.size() == 7);
  CHECK(!rows[0].n.has_value());
  CHECK(rows[0].lambda_sq == Rational(0));
  CHECK(rows[1].lambda_sq == Rational(1));
  CHECK(rows[2].n == 1);
  CHECK(rows[2].lambda_sq == Rational(4, 9));
  CHECK(rows[2].lambda == doctest::Approx(2.0 / 3.0));
  CHECK(rows[6].lambda_sq == Rational(4, 49));

  auto zw_rows = core_eigenvalues(Submodule::zw, 3);
  CHECK(zw_rows[4].lambda_sq == Rational(1, 16));

  auto sym_rows = core_eigenvalues(symbol_for(Submodule::zw2), 5);
  for (std::size_t i = 0; i < rows.size(); ++i)
    CHECK(sym_rows[i].lambda_sq == rows[i].lambda_sq);
  CHECK_THROWS_AS(core_eigenvalues(Submodule::zw, 0), domain_error);
}

TEST_CASE("invariant reports") {
  InvariantReport r = invariant_report(Submodule::zw2, 2, 100);
  REQUIRE(r.closed.has_value());
  CHECK(*r.closed == sigma_closed(Submodule::zw2, 2));
  CHECK(r.tail_bound.has_value());
  CHECK(std::fabs(r.float_value - (178.0 / 3.0 * 9.869604401089358 - 585)) < 1e-9);
  CHECK(r.asymptote.has_value());
  CHECK(r.residual_times_k3.has_value());
  // closed float minus partial stays within the tail bound
  CHECK(r.float_value - r.partial.to_double() <= r.tail_bound->to_double() + 1e-15);
  CHECK(r.float_value - r.partial.to_double() >= -1e-15);

  InvariantReport k0 = invariant_report(Submodule::zw, 0, 50);
  CHECK(!k0.asymptote.has_value());

  InvariantReport raw = invariant_report(HomogeneousSymbol::parse("1,1,1"), 1, 20);
  CHECK(!raw.closed.has_value());
  CHECK(!raw.tail_bound.has_value());
  CHECK(!raw.asymptote.has_value());

  InvariantReport mono = invariant_report(HomogeneousSymbol::parse("0,1"), 1, 20);
  REQUIRE(mono.tail_bound.has_value());
  CHECK(*mono.tail_bound == Rational(0));
  CHECK(mono.partial == Rational(0));
}
