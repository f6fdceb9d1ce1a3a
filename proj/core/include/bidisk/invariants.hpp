#pragma once

#include <optional>
#include <vector>

#include "bidisk/pi_quadratic.hpp"
#include "bidisk/symbol.hpp"
#include "bidisk/toeplitz.hpp"

namespace bidisk {

/// Pairing <w^k phi_n, z^k psi_n> for the submodule generated by p,
/// evaluated through exact cofactor rows:
///   (1/(D_n D_{n+1})) sum_{i,j} A_{0,i} a_{j+k-i} A_{n,j}.
Rational pairing_generic(const HomogeneousSymbol& p, unsigned n, unsigned k);

/// The same pairing for [(z-w)^2] assembled from the closed-form determinant
/// and cofactor expressions, by the case split on n vs k:
///   0 for n <= k-3;  A_{0,n} A_{n,0}/(D_n D_{n+1}) at n = k-2;
///   (-A^{n+1}_{0,n+1} A^n_{n,n+1-k} + A^n_{0,n} A^n_{n,n+2-k})/(D_n D_{n+1})
///   for n >= k-1 (k >= 1);  A_{n,0}/D_n at k = 0.
Rational pairing_cases_zw2(unsigned n, unsigned k);

/// Signed closed-form term whose square is the n-th summand of Sigma_k:
///   zw2 (k >= 1, n >= k-2): 2(n+3-k)(n^2+5n+4+3k-3k^2)/((n+1)(n+2)(n+3)(n+4))
///   zw  (k >= 1, n >= k-1): (n+2-k)/((n+1)(n+2)).
Rational sigma_term_closed(Submodule s, unsigned k, unsigned long n);

/// Partial sum sum_{n=0}^N |<w^k phi_n, z^k psi_n>|^2, via the closed term
/// formulas for the named submodules.
Rational sigma_partial(Submodule s, unsigned k, unsigned long N);

/// Partial sum for an arbitrary symbol through pairing_generic.
Rational sigma_partial(const HomogeneousSymbol& p, unsigned k, unsigned long N);

/// Certified upper bound on the tail sum_{n>N} term^2 for the named
/// submodules (integral comparison with explicit constants).
Rational sigma_tail_bound(Submodule s, unsigned k, unsigned long N);

/// Partial-fraction data: f(m) = sum_j amps[j]/(m + shifts[j]).
struct PartialFractionSpec {
  std::vector<Rational> amps;
  std::vector<unsigned long> shifts;
};

/// Amplitudes A_0..A_3 and shifts (k-2, k-1, k, k+1) of the decomposition of
/// m((m+k-2)(m+k+1)-3k^2+3k)/((m+k-2)(m+k-1)(m+k)(m+k+1)); requires k >= 2.
PartialFractionSpec pf_coefficients_zw2(unsigned k);

/// sum_{m>=1} f(m)^2 in exact closed form:
///   sum_j A_j^2 (zeta(2) - H^(2)_{n_j})
///   + 2 sum_{j<l} A_j A_l (H_{n_l} - H_{n_j})/(n_l - n_j).
PiQuadratic squared_pf_sum(const PartialFractionSpec& spec);

/// Closed form of Sigma_k:
///   zw2: (2/3, -4) at k = 0, else P(k) S_k - Q(k) with
///        P(k) = 2(10k^6-30k^5+49k^4-48k^3+29k^2-10k+2),
///        Q(k) = (60k^5-150k^4+214k^3-171k^2+77k-15)/3,
///        S_k = pi^2/6 - H^(2)_{k-1};
///   zw:  (1/6, 0) at k = 0, else (2k^2-2k+1) S_k - (2k-1).
PiQuadratic sigma_closed(Submodule s, unsigned k);

/// P(k) and Q(k) above, exposed for the series<->closed-form cross-checks.
Rational sigma_poly_P(Submodule s, unsigned long k);
Rational sigma_poly_Q(Submodule s, unsigned long k);

struct HsIdentities {
  PiQuadratic sigma0, sigma1, hs_norm_sq;
};

/// (Sigma_0, Sigma_1, ||C||^2_HS = Sigma_0 + Sigma_1); asserts the exact
/// identity Sigma_0 - Sigma_1 = 1 and throws identity_violation_error on a
/// formula regression.
HsIdentities hs_identities(Submodule s);

/// One +/- eigenvalue pair of the core operator:
///   lambda^2 = 1 - (D_n^2 - (A_{0,n})^2)^2 / (D_{n-1} D_n^2 D_{n+1}).
struct CoreEigenvalue {
  std::optional<unsigned> n;  // empty for the fixed eigenvalues 0 and 1
  Rational lambda_sq;
  double lambda;
};

/// Spectrum rows: the fixed eigenvalues 0 and 1 first, then one row per
/// n = 1..n_max with the exact lambda^2 and its nonnegative float root.
std::vector<CoreEigenvalue> core_eigenvalues(Submodule s, unsigned n_max);
std::vector<CoreEigenvalue> core_eigenvalues(const HomogeneousSymbol& p, unsigned n_max);

/// Per-k summary row: exact closed form (when available), exact partial sum,
/// certified tail bound, float rendering, and asymptote diagnostics.
struct InvariantReport {
  unsigned k = 0;
  std::optional<PiQuadratic> closed;
  Rational partial;
  std::optional<Rational> tail_bound;
  double float_value = 0.0;
  std::optional<double> asymptote;
  std::optional<double> residual_times_k3;
};

InvariantReport invariant_report(Submodule s, unsigned k, unsigned long truncation);
InvariantReport invariant_report(const HomogeneousSymbol& p, unsigned k, unsigned long truncation);

/// Two-term asymptote of Sigma_k: 92/(105k) + 46/(105k^2) for zw2,
/// 1/(3k) + 1/(6k^2) for zw. Requires k >= 1.
Rational sigma_asymptote(Submodule s, unsigned long k);

}  // namespace bidisk
