#include "bidisk/pi_quadratic.hpp"

#include <atomic>

namespace bidisk {

namespace {

std::atomic<int> g_pi2_digits{40};

Rational pow10_inv(int digits) {
  Int den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return Rational(Int(1), den);
}

}  // namespace

void set_pi2_digits(int digits) {
  if (digits < 1 || digits > 200) throw domain_error("pi^2 digits must be in [1, 200]");
  g_pi2_digits.store(digits, std::memory_order_relaxed);
}

int pi2_digits() { return g_pi2_digits.load(std::memory_order_relaxed); }

RationalInterval pi2_enclosure(const Rational& abs_err) {
  if (abs_err.sign() <= 0) throw domain_error("pi2_enclosure needs abs_err > 0");
  // zeta(2) = 3 * sum_{n>=1} 1/(n^2 C(2n,n)). Consecutive term ratio is
  // n^2/((2n+1)(2n+2)) < 1/4, so the tail after N terms is < (4/3) t_{N+1}
  // and pi^2 = 6 zeta(2) lies in [6 S_N, 6 S_N + 8 t_{N+1}].
  Rational eps = abs_err;
  const Rational clamp(1, 10000);
  if (eps > clamp) eps = clamp;

  Rational partial(0);
  Int central(2);  // C(2n,n) for n = 1
  unsigned long n = 1;
  for (;;) {
    Int den = Int(n) * Int(n) * central;
    partial += Rational(Int(3), den);
    // t_{n+1}
    unsigned long m = n + 1;
    central = central * Int(2 * n + 1) * Int(2 * n + 2) / (Int(m) * Int(m));
    Rational t_next(Int(3), Int(m) * Int(m) * central);
    if (Rational(8) * t_next <= eps) {
      Rational lo = Rational(6) * partial;
      return RationalInterval(lo, lo + Rational(8) * t_next);
    }
    n = m;
  }
}

RationalInterval qpi2_enclosure(const PiQuadratic& v, const Rational& abs_err) {
  if (v.pi2_coeff.is_zero())
    return RationalInterval(v.const_coeff, v.const_coeff);
  RationalInterval pi2 = pi2_enclosure(abs_err);
  Rational a = v.pi2_coeff;
  Rational x = a * pi2.lo() + v.const_coeff;
  Rational y = a * pi2.hi() + v.const_coeff;
  if (a.sign() > 0) return RationalInterval(x, y);
  return RationalInterval(y, x);
}

Sign qpi2_sign(const PiQuadratic& v) {
  if (v.pi2_coeff.is_zero()) {
    int s = v.const_coeff.sign();
    return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
  }
  Rational width = pow10_inv(pi2_digits());
  const Rational cap = pow10_inv(200);
  for (;;) {
    RationalInterval enc = qpi2_enclosure(v, width);
    if (enc.lo().sign() > 0) return Sign::positive;
    if (enc.hi().sign() < 0) return Sign::negative;
    if (width < cap)
      throw refinement_budget_error(
          "qpi2_sign: interval still straddles zero at width cap 1e-200");
    width /= Rational(2);
  }
}

double to_double(const PiQuadratic& v) {
  if (v.pi2_coeff.is_zero()) return v.const_coeff.to_double();
  RationalInterval pi2 = pi2_enclosure(pow10_inv(pi2_digits()));
  return (v.pi2_coeff * pi2.midpoint() + v.const_coeff).to_double();
}

}  // namespace bidisk
