#include "bidisk/verify.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "bidisk/asymptotics.hpp"
#include "bidisk/bivariate.hpp"
#include "bidisk/errors.hpp"
#include "bidisk/invariants.hpp"
#include "bidisk/numbers.hpp"
#include "bidisk/pi_quadratic.hpp"
#include "bidisk/toeplitz.hpp"

namespace bidisk::verify {

namespace {

constexpr Submodule kSubmodules[] = {Submodule::zw, Submodule::zw2};

const char* tag(Submodule s) { return s == Submodule::zw ? "zw" : "zw2"; }

// Collects the first counterexample; later failures are only counted.
class Check {
 public:
  bool ok() const { return failures_ == 0; }

  template <typename... Parts>
  void expect(bool condition, Parts&&... parts) {
    if (condition) return;
    if (failures_++ == 0) {
      std::ostringstream os;
      (os << ... << parts);
      detail_ = os.str();
    }
  }

  std::string detail(const std::string& on_pass) const {
    if (ok()) return on_pass;
    if (failures_ > 1) return detail_ + " (+" + std::to_string(failures_ - 1) + " more)";
    return detail_;
  }

 private:
  unsigned long failures_ = 0;
  std::string detail_;
};

template <typename Fn>
PropertyResult timed(const char* suite, const char* property, Fn&& fn) {
  PropertyResult result;
  result.suite = suite;
  result.property = property;
  auto start = std::chrono::steady_clock::now();
  Check check;
  std::string summary = fn(check);
  result.passed = check.ok();
  result.detail = check.detail(summary);
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

PropertyResult det_closed_forms(const VerifyOptions& opt) {
  return timed("linalg", "determinant-closed-forms", [&](Check& check) {
    for (Submodule s : kSubmodules) {
      HomogeneousSymbol p = symbol_for(s);
      DetSequence seq = det_sequence(p, static_cast<unsigned>(opt.det_n_max));
      for (unsigned long n = 0; n <= opt.det_n_max; ++n) {
        Rational expected = closed_Dn(s, n);
        check.expect(seq.values[n] == expected, tag(s), " D_", n, " sequence=", seq.values[n],
                     " closed=", expected);
        if (n >= 1) {
          Rational direct = det_exact(gram_matrix(p, static_cast<unsigned>(n - 1)).dense());
          check.expect(direct == expected, tag(s), " det_exact at n=", n, ": ", direct,
                       " != ", expected);
        }
      }
    }
    return "D_n matches (n+1)(n+2)^2(n+3)/12 and n+1 up to n=" + std::to_string(opt.det_n_max);
  });
}

PropertyResult cofactor_rows_vs_minors(const VerifyOptions& opt) {
  return timed("linalg", "cofactor-rows-vs-minors", [&](Check& check) {
    for (Submodule s : kSubmodules) {
      HomogeneousSymbol p = symbol_for(s);
      for (unsigned n = 0; n <= opt.cofactor_n_max; ++n) {
        RationalMatrix a = gram_matrix(p, n).dense();
        CofactorRow last = last_row_cofactors(p, n);
        CofactorRow first = first_row_cofactors(p, n);
        for (unsigned j = 0; j <= n; ++j) {
          Rational exact_last = cofactor_exact(a, n, j);
          Rational exact_first = cofactor_exact(a, 0, j);
          check.expect(last.values[j] == exact_last, tag(s), " A_{", n, ",", j, "}^", n, ": row=",
                       last.values[j], " minor=", exact_last);
          check.expect(first.values[j] == exact_first, tag(s), " A_{0,", j, "}^", n, ": row=",
                       first.values[j], " minor=", exact_first);
          check.expect(last.values[j] == closed_cofactor_last_row(s, n, j), tag(s),
                       " closed last-row formula mismatch at n=", n, " k=", j);
          check.expect(first.values[j] == last.values[n - j], tag(s),
                       " persymmetry broken at n=", n, " j=", j);
        }
        check.expect(first.values[n] == closed_cofactor_first_row_corner(s, n), tag(s),
                     " corner formula mismatch at n=", n);
      }
    }
    return "rows equal exact minors, closed formulas and persymmetry up to n=" +
           std::to_string(opt.cofactor_n_max);
  });
}

PropertyResult cofactor_recurrence(const VerifyOptions& opt) {
  return timed("linalg", "cofactor-difference-recurrence", [&](Check& check) {
    // F_n = -A^n_{n,n-1} for [(z-w)^2] obeys F_n = -4(D_{n-1} - D_{n-2}) + F_{n-2}
    // and equals -n(n+1)(n+2)(n+3)/6.
    HomogeneousSymbol p = symbol_for(Submodule::zw2);
    std::vector<Rational> f(opt.recurrence_n_max + 1, Rational(0));
    for (unsigned n = 1; n <= opt.recurrence_n_max; ++n)
      f[n] = -last_row_cofactors(p, n).values[n - 1];
    check.expect(f[1] == Rational(-4), "F_1 = ", f[1], " != -4");
    if (opt.recurrence_n_max >= 2) check.expect(f[2] == Rational(-20), "F_2 = ", f[2], " != -20");
    if (opt.recurrence_n_max >= 3) check.expect(f[3] == Rational(-60), "F_3 = ", f[3], " != -60");
    for (unsigned n = 3; n <= opt.recurrence_n_max; ++n) {
      Rational rhs = Rational(-4) * (closed_Dn(Submodule::zw2, n - 1) -
                                     closed_Dn(Submodule::zw2, n - 2)) +
                     f[n - 2];
      check.expect(f[n] == rhs, "F recurrence fails at n=", n);
      Int in(n);
      Rational closed = Rational(-(in * (in + 1) * (in + 2) * (in + 3)), Int(6));
      check.expect(f[n] == closed, "F_n closed value fails at n=", n);
    }
    return "F_n recurrence and closed value hold up to n=" + std::to_string(opt.recurrence_n_max);
  });
}

PropertyResult invariant_values_exact(const VerifyOptions&) {
  return timed("invariants", "invariant-values-exact", [&](Check& check) {
    const PiQuadratic zw2_expected[] = {
        {Rational(2, 3), Rational(-4)},
        {Rational(2, 3), Rational(-5)},
        {Rational(178, 3), Rational(-585)},
        {Rational(2906, 3), Rational(-9560)},
    };
    const PiQuadratic zw_expected[] = {
        {Rational(1, 6), Rational(0)},
        {Rational(1, 6), Rational(-1)},
        {Rational(5, 6), Rational(-8)},
        {Rational(13, 6), Rational(-85, 4)},
    };
    for (unsigned k = 0; k <= 3; ++k) {
      PiQuadratic got = sigma_closed(Submodule::zw2, k);
      check.expect(got == zw2_expected[k], "zw2 Sigma_", k, " = ", got, " != ", zw2_expected[k]);
      got = sigma_closed(Submodule::zw, k);
      check.expect(got == zw_expected[k], "zw Sigma_", k, " = ", got, " != ", zw_expected[k]);
    }
    return std::string("Sigma_0..Sigma_3 exact for both submodules");
  });
}

PropertyResult series_matches_closed_form(const VerifyOptions& opt) {
  return timed("invariants", "series-matches-closed-form", [&](Check& check) {
    for (unsigned k = 3; k <= opt.series_k_max; ++k) {
      PartialFractionSpec spec = pf_coefficients_zw2(k);
      if (opt.inject_fault == "pf-coeff") spec.amps[0] += Rational(1);
      PiQuadratic series = squared_pf_sum(spec) * Rational(4);
      PiQuadratic closed = sigma_closed(Submodule::zw2, k);
      check.expect(series == closed, "k=", k, ": 4*squared_pf_sum=", series, " != ", closed);
    }
    return "4*squared_pf_sum(pf(k)) = Sigma_k exactly for k=3.." +
           std::to_string(opt.series_k_max);
  });
}

PropertyResult partial_sums_within_tail(const VerifyOptions& opt) {
  return timed("invariants", "partial-sums-within-tail", [&](Check& check) {
    const Rational hundredth(1, 100);
    for (Submodule s : kSubmodules) {
      for (unsigned k = 0; k <= opt.enclosure_k_max; ++k) {
        Rational partial = sigma_partial(s, k, opt.partial_truncation);
        Rational tail = sigma_tail_bound(s, k, opt.partial_truncation);
        PiQuadratic gap = sigma_closed(s, k) - PiQuadratic(Rational(0), partial);
        check.expect(qpi2_sign(gap) != Sign::negative, tag(s), " k=", k,
                     ": partial sum exceeds closed form");
        PiQuadratic slack = PiQuadratic(Rational(0), tail) - gap;
        check.expect(qpi2_sign(slack) != Sign::negative, tag(s), " k=", k,
                     ": closed - partial exceeds tail bound ", tail);
        check.expect(tail <= hundredth, tag(s), " k=", k, ": tail bound ", tail, " > 1/100 at N=",
                     opt.partial_truncation);
      }
    }
    return "0 <= Sigma_k - partial(N=" + std::to_string(opt.partial_truncation) +
           ") <= tail <= 1e-2 for k<=" + std::to_string(opt.enclosure_k_max);
  });
}

PropertyResult pairing_grid_equality(const VerifyOptions& opt) {
  return timed("invariants", "pairing-grid-equality", [&](Check& check) {
    HomogeneousSymbol p2 = symbol_for(Submodule::zw2);
    HomogeneousSymbol p1 = symbol_for(Submodule::zw);
    for (unsigned n = 0; n <= opt.grid_max; ++n) {
      for (unsigned k = 0; k <= opt.grid_max; ++k) {
        Rational generic = pairing_generic(p2, n, k);
        Rational cases = pairing_cases_zw2(n, k);
        check.expect(generic.abs() == cases.abs(), "zw2 |pairing| mismatch at n=", n, " k=", k,
                     ": generic=", generic, " cases=", cases);
        if (k + 1 <= n + 2)  // n >= k-1: signs must agree as well
          check.expect(generic == cases, "zw2 pairing sign mismatch at n=", n, " k=", k);
        if (k >= 1 && n + 2 >= k) {
          Rational term = sigma_term_closed(Submodule::zw2, k, n);
          check.expect(term.abs() == generic.abs(), "zw2 |term| mismatch at n=", n, " k=", k);
        }
        if (k >= n + 3)
          check.expect(generic.is_zero(), "zw2 pairing not zero at n=", n, " k=", k);

        Rational generic1 = pairing_generic(p1, n, k);
        if (k == 0) {
          Rational expected = closed_cofactor_last_row(Submodule::zw, n, 0) /
                              closed_Dn(Submodule::zw, n);
          check.expect(generic1 == expected, "zw pairing at k=0 mismatch at n=", n);
        } else if (n + 1 >= k) {
          Rational term = sigma_term_closed(Submodule::zw, k, n);
          check.expect(term.abs() == generic1.abs(), "zw |term| mismatch at n=", n, " k=", k);
        }
        if (k >= n + 2)
          check.expect(generic1.is_zero(), "zw pairing not zero at n=", n, " k=", k);
      }
    }
    // Term/pairing agreement on the wider range: squared values match for
    // k <= 20 out to n = 40.
    for (unsigned k = 1; k <= std::min(20u, opt.grid_max); ++k) {
      for (unsigned long n = (k > 2 ? k - 2 : 0); n <= opt.grid_max + 15; ++n) {
        Rational t2 = sigma_term_closed(Submodule::zw2, k, n);
        Rational g2 = pairing_generic(p2, static_cast<unsigned>(n), k);
        check.expect(t2 * t2 == g2 * g2, "zw2 term^2 mismatch at n=", n, " k=", k);
        if (n + 1 >= k) {
          Rational t1 = sigma_term_closed(Submodule::zw, k, n);
          Rational g1 = pairing_generic(p1, static_cast<unsigned>(n), k);
          check.expect(t1 * t1 == g1 * g1, "zw term^2 mismatch at n=", n, " k=", k);
        }
      }
    }
    return "pairings agree in absolute value on the full grid up to " +
           std::to_string(opt.grid_max);
  });
}

PropertyResult defect_space_properties(const VerifyOptions& opt) {
  return timed("invariants", "defect-space-properties", [&](Check& check) {
    for (Submodule s : kSubmodules) {
      HomogeneousSymbol p = symbol_for(s);
      BivariatePoly base = BivariatePoly::from_symbol(p);
      for (unsigned n = 0; n <= opt.defect_n_max; ++n) {
        auto [phi, psi] = defect_basis_unnormalized(p, n, first_row_cofactors(p, n).values,
                                                    last_row_cofactors(p, n).values);
        Rational norm_target = closed_Dn(s, n) * closed_Dn(s, n + 1);
        check.expect(h2_inner(phi, phi) == norm_target, tag(s), " |Phi_", n, "|^2 != D_n D_{n+1}");
        check.expect(h2_inner(psi, psi) == norm_target, tag(s), " |Psi_", n, "|^2 != D_n D_{n+1}");
        if (n == 0) continue;
        for (unsigned a = 0; a + 1 <= n; ++a) {
          unsigned b = n - 1 - a;
          // z p z^a w^b spans zM at this degree; w p z^a w^b spans wM.
          BivariatePoly zm = base.scaled_shift(Rational(1), static_cast<long>(a) + 1, b);
          BivariatePoly wm = base.scaled_shift(Rational(1), a, static_cast<long>(b) + 1);
          check.expect(h2_inner(phi, zm).is_zero(), tag(s), " Phi_", n,
                       " not orthogonal to zM at a=", a);
          check.expect(h2_inner(psi, wm).is_zero(), tag(s), " Psi_", n,
                       " not orthogonal to wM at a=", a);
        }
      }
    }
    return "defect bases have norm^2 = D_n D_{n+1} and the stated orthogonality up to n=" +
           std::to_string(opt.defect_n_max);
  });
}

PropertyResult core_operator_identities(const VerifyOptions& opt) {
  return timed("invariants", "core-operator-identities", [&](Check& check) {
    for (Submodule s : kSubmodules) {
      auto closed_rows = core_eigenvalues(s, opt.eigen_n_max);
      auto symbol_rows = core_eigenvalues(symbol_for(s), opt.eigen_n_max);
      check.expect(closed_rows.size() == symbol_rows.size(), tag(s), " row count mismatch");
      check.expect(closed_rows[0].lambda_sq == Rational(0) &&
                       closed_rows[1].lambda_sq == Rational(1),
                   tag(s), " fixed eigenvalues 0, 1 missing");
      for (unsigned n = 1; n <= opt.eigen_n_max; ++n) {
        const auto& row = closed_rows[n + 1];
        Int in(n);
        Rational expected = s == Submodule::zw2
                                ? Rational(Int(4), (in + 2) * (in + 2))
                                : Rational(Int(1), (in + 1) * (in + 1));
        check.expect(row.lambda_sq == expected, tag(s), " lambda^2 at n=", n, ": ", row.lambda_sq,
                     " != ", expected);
        check.expect(symbol_rows[n + 1].lambda_sq == expected, tag(s),
                     " symbol-route lambda^2 differs at n=", n);
        check.expect(row.lambda_sq >= Rational(0) && row.lambda_sq <= Rational(1),
                     tag(s), " lambda^2 out of [0,1] at n=", n);
      }
      HsIdentities hs = hs_identities(s);
      PiQuadratic expected_hs = s == Submodule::zw2
                                    ? PiQuadratic(Rational(4, 3), Rational(-9))
                                    : PiQuadratic(Rational(1, 3), Rational(-1));
      check.expect(hs.hs_norm_sq == expected_hs, tag(s), " HS norm^2 = ", hs.hs_norm_sq,
                   " != ", expected_hs);
      check.expect(hs.sigma0 - hs.sigma1 == PiQuadratic(Rational(0), Rational(1)), tag(s),
                   " Sigma_0 - Sigma_1 != 1");
    }
    return "eigenvalues 4/(n+2)^2 and 1/(n+1)^2 exact to n=" + std::to_string(opt.eigen_n_max) +
           "; HS identities hold";
  });
}

PropertyResult fisher_hartwig_consistency(const VerifyOptions& opt) {
  return timed("fh", "fisher-hartwig-vs-truncations", [&](Check& check) {
    for (unsigned alpha = 0; alpha <= opt.fh_alpha_max; ++alpha) {
      for (long beta = -static_cast<long>(alpha); beta <= static_cast<long>(alpha); ++beta) {
        FHParams params{alpha, beta};
        for (unsigned n = 1; n <= opt.fh_n_max; ++n) {
          Rational direct = det_exact(fh_toeplitz_truncation(params, n));
          Rational closed = fh_determinant(params, n);
          check.expect(direct == closed, "alpha=", alpha, " beta=", beta, " n=", n, ": det=",
                       direct, " formula=", closed);
        }
      }
    }
    FHParams vanishing{1, 2};
    for (unsigned n = 1; n <= opt.fh_vanish_n_max; ++n) {
      check.expect(fh_determinant(vanishing, n).is_zero(), "vanishing formula nonzero at n=", n);
      check.expect(det_exact(fh_toeplitz_truncation(vanishing, n)).is_zero(),
                   "vanishing truncation nonzero at n=", n);
    }
    return "Barnes-G formula equals exact truncations (alpha<=" +
           std::to_string(opt.fh_alpha_max) + ", n<=" + std::to_string(opt.fh_n_max) +
           "); (1,2) vanishes";
  });
}

PropertyResult fisher_hartwig_exponents(const VerifyOptions&) {
  return timed("fh", "fisher-hartwig-exponents", [&](Check& check) {
    double est40 = fh_exponent_estimate({2, 0}, 50, 100);
    double est31 = fh_exponent_estimate({2, 1}, 50, 100);
    double est00 = fh_exponent_estimate({0, 0}, 50, 100);
    check.expect(std::fabs(est40 - 4.0) <= 0.1, "(2,0) estimate ", est40, " not within 4 +/- 0.1");
    check.expect(std::fabs(est31 - 3.0) <= 0.1, "(2,1) estimate ", est31, " not within 3 +/- 0.1");
    check.expect(est00 == 0.0, "(0,0) estimate ", est00, " != 0");
    std::ostringstream os;
    os << "slopes over [50,100]: " << est40 << ", " << est31 << ", " << est00;
    return os.str();
  });
}

PropertyResult monotonicity(const VerifyOptions& opt) {
  return timed("asymptotics", "monotonicity-certificate", [&](Check& check) {
    for (Submodule s : kSubmodules) {
      try {
        MonotonicityCertificate cert = monotonicity_certificate(s, opt.cert_k_max);
        check.expect(cert.exact_signs.size() == opt.cert_k_max + 1, tag(s),
                     " certificate sign count mismatch");
      } catch (const certificate_error& e) {
        check.expect(false, tag(s), " certificate failed at k=", e.first_k);
      }
    }
    for (unsigned long k = 3; k <= opt.analytic_k_max; ++k) {
      if (!analytic_lower_bound_check(k)) {
        check.expect(false, "analytic lower bound fails at k=", k);
        break;
      }
    }
    return "Delta_k > 0 certified to k=" + std::to_string(opt.cert_k_max) +
           "; integer bound holds to k=" + std::to_string(opt.analytic_k_max);
  });
}

PropertyResult residual_bounds(const VerifyOptions& opt) {
  return timed("asymptotics", "asymptote-residual-bounds", [&](Check& check) {
    for (const auto& row : asymptote_residual(Submodule::zw2, opt.residual_k_lo, opt.residual_k_hi))
      check.expect(std::fabs(row.residual_times_k3) <= 10.0, "zw2 residual*k^3 at k=", row.k,
                   " is ", row.residual_times_k3);
    unsigned long lo = std::max<unsigned long>(100, opt.residual_k_lo);
    unsigned long hi = std::max<unsigned long>(lo + 1, opt.residual_k_hi);
    for (const auto& row : asymptote_residual(Submodule::zw, lo, hi))
      check.expect(row.residual_times_k3 >= 0.05 && row.residual_times_k3 <= 0.15,
                   "zw residual*k^3 at k=", row.k, " is ", row.residual_times_k3);
    return "zw2 residual*k^3 bounded by 10 on [" + std::to_string(opt.residual_k_lo) + "," +
           std::to_string(opt.residual_k_hi) + "]; zw within [0.05,0.15] on [" +
           std::to_string(lo) + "," + std::to_string(hi) + "]";
  });
}

PropertyResult sk_enclosure_soundness(const VerifyOptions& opt) {
  return timed("asymptotics", "sk-enclosure-soundness", [&](Check& check) {
    // S_k in [pi2.lo/6 - H^(2)_{k-1}, pi2.hi/6 - H^(2)_{k-1}] with a 1e-40
    // enclosure of pi^2; containment of that interval certifies containment
    // of S_k itself.
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, 40);
    RationalInterval pi2 = pi2_enclosure(Rational(Int(1), den));
    Rational h2(0);
    for (unsigned long k = 1; k <= opt.sk_soundness_k_max; ++k) {
      if (k > 1) h2 += Rational(Int(1), Int(k - 1) * Int(k - 1));
      SkEnclosure enc = sk_enclosure(k);
      Rational s_lo = pi2.lo() / Rational(6) - h2;
      Rational s_hi = pi2.hi() / Rational(6) - h2;
      check.expect(enc.interval.lo() <= s_lo && s_hi <= enc.interval.hi(),
                   "S_k enclosure misses the exact value at k=", k);
      Int ik(k);
      Rational width_cap(Int(1), 42 * ik * ik * ik * ik * ik * ik * ik);
      check.expect(enc.interval.width() <= width_cap, "width cap fails at k=", k);
    }
    return "Euler-Maclaurin brackets contain pi^2/6 - H^(2)_{k-1} for k<=" +
           std::to_string(opt.sk_soundness_k_max);
  });
}

PropertyResult delta_two_route(const VerifyOptions& opt) {
  return timed("asymptotics", "delta-two-route-agreement", [&](Check& check) {
    for (unsigned long k = 1; k <= opt.two_route_k_max; ++k) {
      PiQuadratic via_sigma = sigma_closed(Submodule::zw2, static_cast<unsigned>(k)) -
                              sigma_closed(Submodule::zw2, static_cast<unsigned>(k) + 1);
      PiQuadratic via_rt = delta_k_via_rt(k);
      check.expect(via_sigma == via_rt, "two Delta_k routes disagree at k=", k);
      // Bracketing: T(k) > 0, so R - T*U <= Delta_k <= R - T*L. Recover
      // T = -6 * pi2_coeff and R = const_coeff - T*H^(2)_{k-1} from the
      // expanded form (-T/6, R + T*H^(2)_{k-1}).
      SkEnclosure sk = sk_enclosure(k);
      Rational t = Rational(-6) * via_rt.pi2_coeff;
      Rational r = via_rt.const_coeff - t * harmonic2(k - 1);
      PiQuadratic low_gap = via_sigma - PiQuadratic(Rational(0), r - t * sk.interval.hi());
      PiQuadratic high_gap = PiQuadratic(Rational(0), r - t * sk.interval.lo()) - via_sigma;
      check.expect(qpi2_sign(low_gap) != Sign::negative, "Delta_k below R - T*U at k=", k);
      check.expect(qpi2_sign(high_gap) != Sign::negative, "Delta_k above R - T*L at k=", k);
    }
    return "Delta_k = R(k) - T(k) S_k exactly and brackets hold for k<=" +
           std::to_string(opt.two_route_k_max);
  });
}

std::vector<std::string> suite_names() { return {"linalg", "fh", "invariants", "asymptotics", "all"}; }

std::vector<PropertyResult> run_suite(std::string_view suite, const VerifyOptions& opt) {
  std::vector<PropertyResult> results;
  auto want = [&](std::string_view name) { return suite == "all" || suite == name; };
  if (suite != "all" && suite != "linalg" && suite != "fh" && suite != "invariants" &&
      suite != "asymptotics")
    throw domain_error("unknown verify suite: " + std::string(suite));
  if (want("linalg")) {
    results.push_back(det_closed_forms(opt));
    results.push_back(cofactor_rows_vs_minors(opt));
    results.push_back(cofactor_recurrence(opt));
  }
  if (want("fh")) {
    results.push_back(fisher_hartwig_consistency(opt));
    results.push_back(fisher_hartwig_exponents(opt));
  }
  if (want("invariants")) {
    results.push_back(invariant_values_exact(opt));
    results.push_back(series_matches_closed_form(opt));
    results.push_back(partial_sums_within_tail(opt));
    results.push_back(pairing_grid_equality(opt));
    results.push_back(defect_space_properties(opt));
    results.push_back(core_operator_identities(opt));
  }
  if (want("asymptotics")) {
    results.push_back(monotonicity(opt));
    results.push_back(residual_bounds(opt));
    results.push_back(sk_enclosure_soundness(opt));
    results.push_back(delta_two_route(opt));
  }
  return results;
}

bool all_passed(const std::vector<PropertyResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return !results.empty();
}

}  // namespace bidisk::verify
