#include "bidisk/asymptotics.hpp"

#include "bidisk/errors.hpp"
#include "bidisk/numbers.hpp"

namespace bidisk {

SkEnclosure sk_enclosure(unsigned long k, int order) {
  if (k < 1) throw domain_error("sk_enclosure needs k >= 1");
  if (order < 1 || order > 3) throw domain_error("sk_enclosure order must be in 1..3");
  Int ik(k);
  Rational base = Rational(Int(1), ik) + Rational(Int(1), 2 * ik * ik);
  Rational b2(Int(1), 6 * ik * ik * ik);
  Rational b4(Int(1), 30 * ik * ik * ik * ik * ik);
  Rational b6(Int(1), 42 * ik * ik * ik * ik * ik * ik * ik);
  Rational lo, hi;
  switch (order) {
    case 1:
      lo = base;
      hi = base + b2;
      break;
    case 2:
      lo = base + b2 - b4;
      hi = base + b2;
      break;
    default:
      lo = base + b2 - b4;
      hi = base + b2 - b4 + b6;
      break;
  }
  return SkEnclosure{k, order, RationalInterval(lo, hi)};
}

PiQuadratic delta_k_via_rt(unsigned long k) {
  if (k < 1) throw domain_error("delta_k_via_rt needs k >= 1");
  Int x(k);
  Rational r = Rational(120 * x * x * x * x + 60 * x * x * x + 212 * x * x + 96 * x + 68) +
               Rational(Int(20), x) + Rational(Int(4), x * x);
  Rational t(Int(8) * x * (15 * x * x * x * x + 24 * x * x + 5));
  // R(k) - T(k) (pi^2/6 - H^(2)_{k-1})
  return PiQuadratic(-t / Rational(6), r + t * harmonic2(k - 1));
}

PiQuadratic delta_k(Submodule s, unsigned long k) {
  if (k < 1) throw domain_error("delta_k needs k >= 1");
  PiQuadratic d = sigma_closed(s, static_cast<unsigned>(k)) -
                  sigma_closed(s, static_cast<unsigned>(k) + 1);
  if (s == Submodule::zw2 && d != delta_k_via_rt(k))
    throw identity_violation_error("delta_k: closed-form difference disagrees with R(k) - T(k) S_k");
  return d;
}

bool analytic_lower_bound_check(unsigned long k) {
  if (k < 3) throw domain_error("analytic_lower_bound_check is stated for k >= 3");
  if (k <= 1000000000UL) {
    // 92 k^4 stays below 2^127 for k <= 1e9.
    __int128 k2 = static_cast<__int128>(k) * static_cast<__int128>(k);
    return 92 * k2 * k2 - 340 * k2 - 100 > 0;
  }
  Int k2 = Int(k) * Int(k);
  return 92 * k2 * k2 - 340 * k2 - 100 > 0;
}

MonotonicityCertificate monotonicity_certificate(Submodule s, unsigned long k_max) {
  if (k_max < 1) throw domain_error("monotonicity_certificate needs k_max >= 1");
  MonotonicityCertificate cert{s, k_max, {}, s == Submodule::zw2 ? 3ul : 0ul};
  cert.exact_signs.reserve(k_max + 1);

  // Delta_0 through the Sigma_0 - Sigma_1 = 1 identity (H^(2)_{-1} undefined).
  PiQuadratic d0 = sigma_closed(s, 0) - sigma_closed(s, 1);
  cert.exact_signs.push_back(qpi2_sign(d0));
  if (cert.exact_signs.back() != Sign::positive)
    throw certificate_error("monotonicity certificate failed at k = 0", 0);

  for (unsigned long k = 1; k <= k_max; ++k) {
    cert.exact_signs.push_back(qpi2_sign(delta_k(s, k)));
    if (cert.exact_signs.back() != Sign::positive)
      throw certificate_error("monotonicity certificate failed", k);
  }
  if (s == Submodule::zw2) {
    for (unsigned long k = 3; k <= k_max; ++k)
      if (!analytic_lower_bound_check(k))
        throw certificate_error("analytic lower bound failed", k);
  }
  return cert;
}

std::vector<ResidualRow> asymptote_residual(Submodule s, unsigned long k_lo, unsigned long k_hi) {
  if (k_lo < 1 || k_lo >= k_hi) throw domain_error("asymptote_residual needs 1 <= k_lo < k_hi");
  std::vector<ResidualRow> rows;
  rows.reserve(k_hi - k_lo + 1);
  for (unsigned long k = k_lo; k <= k_hi; ++k) {
    PiQuadratic sigma = sigma_closed(s, static_cast<unsigned>(k));
    Rational asym = sigma_asymptote(s, k);
    Int k3 = Int(k) * Int(k) * Int(k);
    PiQuadratic residual = (sigma - PiQuadratic(Rational(0), asym)) * Rational(k3);
    rows.push_back({k, to_double(sigma), asym.to_double(), to_double(residual)});
  }
  return rows;
}

}  // namespace bidisk
