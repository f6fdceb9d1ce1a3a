#pragma once

#include <vector>

#include "bidisk/interval.hpp"
#include "bidisk/invariants.hpp"
#include "bidisk/pi_quadratic.hpp"

namespace bidisk {

/// Two-sided rational bracketing of S_k = sum_{n>=k} 1/n^2 from consecutive
/// truncations of the Euler-Maclaurin expansion
///   S_k = 1/k + 1/(2k^2) + 1/(6k^3) - 1/(30k^5) + 1/(42k^7) - ...
/// Consecutive partial sums alternate around S_k, so each order gives a
/// certified [L, U]:
///   order 1: width 1/(6k^3); order 2: width 1/(30k^5); order 3 (default):
///   U ends at +1/(42k^7), L one positive term earlier, width 1/(42k^7).
struct SkEnclosure {
  unsigned long k;
  int order;
  RationalInterval interval;
};

SkEnclosure sk_enclosure(unsigned long k, int order = 3);

/// Delta_k = Sigma_k - Sigma_{k+1}, exact. For zw2 the result is additionally
/// verified against the simplified route R(k) - T(k) S_k with
///   R(k) = 120k^4+60k^3+212k^2+96k+68+20/k+4/k^2,
///   T(k) = 8k(15k^4+24k^2+5);
/// a mismatch throws identity_violation_error.
PiQuadratic delta_k(Submodule s, unsigned long k);

/// The R(k) - T(k) S_k route by itself (zw2 only), for two-route tests.
PiQuadratic delta_k_via_rt(unsigned long k);

/// The denominator-cleared form of the analytic lower bound on Delta_k for
/// zw2: 92 k^4 - 340 k^2 - 100 > 0, valid input k >= 3. Pure integer check.
bool analytic_lower_bound_check(unsigned long k);

/// Exact-sign monotonicity certificate: qpi2_sign(Delta_k) for k = 0..k_max
/// (Delta_0 comes from the identity Sigma_0 - Sigma_1 = 1), plus the analytic
/// integer bound for k >= 3 on zw2. Throws certificate_error carrying the
/// first offending k; never fires on the two named submodules.
struct MonotonicityCertificate {
  Submodule submodule;
  unsigned long k_checked_max;
  std::vector<Sign> exact_signs;   // signs of Delta_0..Delta_k_max
  unsigned long analytic_bound_from;  // 0 when no analytic bound applies
};

MonotonicityCertificate monotonicity_certificate(Submodule s, unsigned long k_max);

/// Diagnostic table row: (Sigma_k - two-term asymptote) * k^3 stays bounded.
struct ResidualRow {
  unsigned long k;
  double sigma_float;
  double asym_float;
  double residual_times_k3;
};

std::vector<ResidualRow> asymptote_residual(Submodule s, unsigned long k_lo, unsigned long k_hi);

}  // namespace bidisk
