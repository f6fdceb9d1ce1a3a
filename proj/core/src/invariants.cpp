#include "bidisk/invariants.hpp"

#include <algorithm>
#include <cmath>

#include "bidisk/errors.hpp"
#include "bidisk/numbers.hpp"

namespace bidisk {

namespace {

Rational closed_last_row_or_zero(Submodule s, unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return Rational(0);
  return closed_cofactor_last_row(s, n, static_cast<unsigned long>(k));
}

}  // namespace

namespace {

Rational pairing_from_rows(const AutocorrelationSeq& acf, const CofactorRow& first,
                           const CofactorRow& last, unsigned n, unsigned k,
                           const Rational& d_n, const Rational& d_np1) {
  if (d_n.is_zero() || d_np1.is_zero())
    throw singular_gram_error("pairing_generic: singular Gram matrix");
  const long band = static_cast<long>(acf.a.size()) - 1;
  Rational acc(0);
  for (long i = 0; i <= static_cast<long>(n); ++i) {
    if (first.values[static_cast<std::size_t>(i)].is_zero()) continue;
    // a_{j+k-i} vanishes unless |j+k-i| <= band.
    long j_lo = std::max<long>(0, i - static_cast<long>(k) - band);
    long j_hi = std::min<long>(static_cast<long>(n), i - static_cast<long>(k) + band);
    for (long j = j_lo; j <= j_hi; ++j) {
      Rational a = acf.at(j + static_cast<long>(k) - i);
      if (a.is_zero()) continue;
      acc += first.values[static_cast<std::size_t>(i)] * a * last.values[static_cast<std::size_t>(j)];
    }
  }
  return acc / (d_n * d_np1);
}

}  // namespace

Rational pairing_generic(const HomogeneousSymbol& p, unsigned n, unsigned k) {
  AutocorrelationSeq acf = AutocorrelationSeq::of(p);
  DetSequence dets = det_sequence(p, n + 1);
  CofactorRow last = last_row_cofactors(p, n, dets.values[n], dets.values[n + 1]);
  CofactorRow first = first_row_cofactors(p, last);
  return pairing_from_rows(acf, first, last, n, k, dets.values[n], dets.values[n + 1]);
}

Rational pairing_cases_zw2(unsigned n, unsigned k) {
  const Submodule s = Submodule::zw2;
  const Rational d_n = closed_Dn(s, n);
  if (k == 0) return closed_cofactor_last_row(s, n, 0) / d_n;
  if (k >= n + 3) return Rational(0);
  const Rational d_np1 = closed_Dn(s, n + 1);
  if (k == n + 2) {
    Rational corner = closed_cofactor_first_row_corner(s, n);
    return corner * closed_cofactor_last_row(s, n, 0) / (d_n * d_np1);
  }
  // n >= k-1: cofactor indices above n contribute nothing.
  Rational acc = -closed_cofactor_first_row_corner(s, n + 1) *
                 closed_last_row_or_zero(s, n, static_cast<long>(n) + 1 - static_cast<long>(k));
  acc += closed_cofactor_first_row_corner(s, n) *
         closed_last_row_or_zero(s, n, static_cast<long>(n) + 2 - static_cast<long>(k));
  return acc / (d_n * d_np1);
}

Rational sigma_term_closed(Submodule s, unsigned k, unsigned long n) {
  if (k < 1) throw domain_error("sigma_term_closed needs k >= 1");
  Int in(n), ik(k);
  if (s == Submodule::zw2) {
    if (static_cast<long>(n) < static_cast<long>(k) - 2)
      throw domain_error("sigma_term_closed(zw2) needs n >= k-2");
    Int num = Int(2) * (in + 3 - ik) * (in * in + 5 * in + 4 + 3 * ik - 3 * ik * ik);
    Int den = (in + 1) * (in + 2) * (in + 3) * (in + 4);
    return Rational(num, den);
  }
  if (static_cast<long>(n) < static_cast<long>(k) - 1)
    throw domain_error("sigma_term_closed(zw) needs n >= k-1");
  return Rational(in + 2 - ik, (in + 1) * (in + 2));
}

namespace {

// k = 0 term |A_{0,n}/D_n|; reduces to 2/(n+2) for zw2 and 1/(n+1) for zw.
Rational sigma0_term(Submodule s, unsigned long n) {
  return closed_cofactor_first_row_corner(s, n) / closed_Dn(s, n);
}

unsigned long sigma_first_n(Submodule s, unsigned k) {
  if (k == 0) return 0;
  long start = (s == Submodule::zw2) ? static_cast<long>(k) - 2 : static_cast<long>(k) - 1;
  return static_cast<unsigned long>(std::max<long>(0, start));
}

}  // namespace

Rational sigma_partial(Submodule s, unsigned k, unsigned long N) {
  Rational acc(0);
  if (k == 0) {
    for (unsigned long n = 0; n <= N; ++n) {
      Rational t = sigma0_term(s, n);
      acc += t * t;
    }
    return acc;
  }
  for (unsigned long n = sigma_first_n(s, k); n <= N; ++n) {
    Rational t = sigma_term_closed(s, k, n);
    acc += t * t;
  }
  return acc;
}

Rational sigma_partial(const HomogeneousSymbol& p, unsigned k, unsigned long N) {
  // One elimination pass supplies every D_n; per-n cofactor rows then cost
  // O(n * degree) on the polynomial fast path.
  AutocorrelationSeq acf = AutocorrelationSeq::of(p);
  DetSequence dets = det_sequence(p, static_cast<unsigned>(N) + 1);
  Rational acc(0);
  for (unsigned long n = 0; n <= N; ++n) {
    CofactorRow last = last_row_cofactors(p, static_cast<unsigned>(n), dets.values[n],
                                          dets.values[n + 1]);
    CofactorRow first = first_row_cofactors(p, last);
    Rational t = pairing_from_rows(acf, first, last, static_cast<unsigned>(n), k,
                                   dets.values[n], dets.values[n + 1]);
    acc += t * t;
  }
  return acc;
}

Rational sigma_tail_bound(Submodule s, unsigned k, unsigned long N) {
  if (N < sigma_first_n(s, k))
    throw domain_error("sigma_tail_bound: N below the first nonzero term");
  Int iN(N);
  if (s == Submodule::zw) {
    // |term| <= 1/(n+1), so the tail is < 1/(N+1).
    return Rational(Int(1), iN + 1);
  }
  if (k == 0) {
    // terms (2/(n+2))^2; tail < 4/(N+2).
    return Rational(Int(4), iN + 2);
  }
  // |term| <= (2 + 6k^2/((N+2)(N+5)))/(n+2) for n > N, and
  // sum_{n>N} 1/(n+2)^2 < 1/(N+2).
  Int ik(k);
  Rational c = Rational(2) + Rational(Int(6) * ik * ik, (iN + 2) * (iN + 5));
  return c * c / Rational(iN + 2);
}

PartialFractionSpec pf_coefficients_zw2(unsigned k) {
  if (k < 2) throw domain_error("pf_coefficients_zw2 needs k >= 2");
  Int ik(k);
  PartialFractionSpec spec;
  spec.amps = {
      Rational(ik * ik * ik - 3 * ik * ik + 2 * ik, Int(2)),
      Rational(-3 * ik * ik * ik + 6 * ik * ik - 5 * ik + 2, Int(2)),
      Rational(3 * ik * ik * ik - 3 * ik * ik + 2 * ik, Int(2)),
      Rational(-(ik * ik * ik) + ik, Int(2)),
  };
  spec.shifts = {k - 2, k - 1, k, k + 1};
  return spec;
}

PiQuadratic squared_pf_sum(const PartialFractionSpec& spec) {
  const std::size_t m = spec.amps.size();
  if (spec.shifts.size() != m) throw dimension_error("squared_pf_sum: amps/shifts length mismatch");
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t l = j + 1; l < m; ++l)
      if (spec.shifts[j] == spec.shifts[l])
        throw duplicate_shift_error("squared_pf_sum: shifts must be pairwise distinct");

  unsigned long max_shift = 0;
  for (auto sft : spec.shifts) max_shift = std::max(max_shift, sft);
  HarmonicCache cache(max_shift);

  Rational pi2_coeff(0), const_coeff(0);
  for (std::size_t j = 0; j < m; ++j) {
    Rational a2 = spec.amps[j] * spec.amps[j];
    pi2_coeff += a2 / Rational(6);
    const_coeff -= a2 * cache.h2(spec.shifts[j]);
  }
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t l = j + 1; l < m; ++l) {
      long diff = static_cast<long>(spec.shifts[l]) - static_cast<long>(spec.shifts[j]);
      Rational cross = (cache.h1(spec.shifts[l]) - cache.h1(spec.shifts[j])) / Rational(diff);
      const_coeff += Rational(2) * spec.amps[j] * spec.amps[l] * cross;
    }
  }
  return PiQuadratic(pi2_coeff, const_coeff);
}

Rational sigma_poly_P(Submodule s, unsigned long k) {
  Int x(k);
  if (s == Submodule::zw) return Rational(2 * x * x - 2 * x + 1);
  return Rational(Int(2) * (10 * x * x * x * x * x * x - 30 * x * x * x * x * x +
                            49 * x * x * x * x - 48 * x * x * x + 29 * x * x - 10 * x + 2));
}

Rational sigma_poly_Q(Submodule s, unsigned long k) {
  Int x(k);
  if (s == Submodule::zw) return Rational(2 * x - 1);
  return Rational(60 * x * x * x * x * x - 150 * x * x * x * x + 214 * x * x * x -
                      171 * x * x + 77 * x - 15,
                  Int(3));
}

PiQuadratic sigma_closed(Submodule s, unsigned k) {
  if (k == 0) {
    if (s == Submodule::zw2) return PiQuadratic(Rational(2, 3), Rational(-4));
    return PiQuadratic(Rational(1, 6), Rational(0));
  }
  // S_k = pi^2/6 - H^(2)_{k-1} as a PiQuadratic, times P(k), minus Q(k).
  Rational p = sigma_poly_P(s, k);
  Rational q = sigma_poly_Q(s, k);
  return PiQuadratic(p / Rational(6), -p * harmonic2(k - 1) - q);
}

HsIdentities hs_identities(Submodule s) {
  HsIdentities out{sigma_closed(s, 0), sigma_closed(s, 1), PiQuadratic()};
  if (out.sigma0 - out.sigma1 != PiQuadratic(Rational(0), Rational(1)))
    throw identity_violation_error("hs_identities: Sigma_0 - Sigma_1 != 1");
  out.hs_norm_sq = out.sigma0 + out.sigma1;
  return out;
}

namespace {

CoreEigenvalue eigen_row(unsigned n, const Rational& d_nm1, const Rational& d_n,
                         const Rational& d_np1, const Rational& corner) {
  if (d_nm1.is_zero() || d_n.is_zero() || d_np1.is_zero())
    throw singular_gram_error("core_eigenvalues: singular Gram matrix");
  Rational gap = d_n * d_n - corner * corner;
  Rational lambda_sq = Rational(1) - gap * gap / (d_nm1 * d_n * d_n * d_np1);
  return {n, lambda_sq, std::sqrt(std::max(0.0, lambda_sq.to_double()))};
}

std::vector<CoreEigenvalue> fixed_prefix() {
  return {{std::nullopt, Rational(0), 0.0}, {std::nullopt, Rational(1), 1.0}};
}

}  // namespace

std::vector<CoreEigenvalue> core_eigenvalues(Submodule s, unsigned n_max) {
  if (n_max < 1) throw domain_error("core_eigenvalues needs n_max >= 1");
  auto rows = fixed_prefix();
  for (unsigned n = 1; n <= n_max; ++n)
    rows.push_back(eigen_row(n, closed_Dn(s, n - 1), closed_Dn(s, n), closed_Dn(s, n + 1),
                             closed_cofactor_first_row_corner(s, n)));
  return rows;
}

std::vector<CoreEigenvalue> core_eigenvalues(const HomogeneousSymbol& p, unsigned n_max) {
  if (n_max < 1) throw domain_error("core_eigenvalues needs n_max >= 1");
  DetSequence dets = det_sequence(p, n_max + 1);
  auto rows = fixed_prefix();
  for (unsigned n = 1; n <= n_max; ++n) {
    // Corner cofactor A_{0,n} = A_{n,0} by persymmetry.
    Rational corner =
        last_row_cofactors(p, n, dets.values[n], dets.values[n + 1]).values[0];
    rows.push_back(eigen_row(n, dets.values[n - 1], dets.values[n], dets.values[n + 1], corner));
  }
  return rows;
}

Rational sigma_asymptote(Submodule s, unsigned long k) {
  if (k < 1) throw domain_error("sigma_asymptote needs k >= 1");
  Int ik(k);
  if (s == Submodule::zw2)
    return Rational(Int(92), Int(105) * ik) + Rational(Int(46), Int(105) * ik * ik);
  return Rational(Int(1), Int(3) * ik) + Rational(Int(1), Int(6) * ik * ik);
}

namespace {

void fill_asymptote(InvariantReport& report, Submodule s, unsigned k) {
  if (k < 1) return;
  Rational asym = sigma_asymptote(s, k);
  report.asymptote = asym.to_double();
  if (report.closed) {
    Int k3 = Int(k) * Int(k) * Int(k);
    PiQuadratic residual = *report.closed - PiQuadratic(Rational(0), asym);
    report.residual_times_k3 = to_double(residual * Rational(k3));
  }
}

}  // namespace

InvariantReport invariant_report(Submodule s, unsigned k, unsigned long truncation) {
  InvariantReport report;
  report.k = k;
  report.closed = sigma_closed(s, k);
  // The truncation is raised to the first nonzero term so the partial/tail
  // pair always brackets the closed form.
  unsigned long n_eff = std::max(truncation, sigma_first_n(s, k));
  report.partial = sigma_partial(s, k, n_eff);
  report.tail_bound = sigma_tail_bound(s, k, n_eff);
  report.float_value = to_double(*report.closed);
  fill_asymptote(report, s, k);
  return report;
}

InvariantReport invariant_report(const HomogeneousSymbol& p, unsigned k, unsigned long truncation) {
  InvariantReport report;
  report.k = k;
  report.partial = sigma_partial(p, k, truncation);
  report.float_value = report.partial.to_double();
  if (p.is_monomial()) report.tail_bound = Rational(0);
  return report;
}

}  // namespace bidisk
