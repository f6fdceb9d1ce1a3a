#pragma once

#include <ostream>
#include <string>

#include "bidisk/interval.hpp"
#include "bidisk/rational.hpp"

namespace bidisk {

/// Exact value a*pi^2 + b with rational a, b. Since pi^2 is irrational the
/// representation is unique: two values are equal iff both components match.
struct PiQuadratic {
  Rational pi2_coeff;   // a
  Rational const_coeff; // b

  PiQuadratic() = default;
  PiQuadratic(Rational a, Rational b)
      : pi2_coeff(std::move(a)), const_coeff(std::move(b)) {}

  bool is_rational() const { return pi2_coeff.is_zero(); }

  PiQuadratic& operator+=(const PiQuadratic& o) {
    pi2_coeff += o.pi2_coeff;
    const_coeff += o.const_coeff;
    return *this;
  }
  PiQuadratic& operator-=(const PiQuadratic& o) {
    pi2_coeff -= o.pi2_coeff;
    const_coeff -= o.const_coeff;
    return *this;
  }
  PiQuadratic& operator*=(const Rational& c) {
    pi2_coeff *= c;
    const_coeff *= c;
    return *this;
  }

  friend PiQuadratic operator+(PiQuadratic a, const PiQuadratic& b) { return a += b; }
  friend PiQuadratic operator-(PiQuadratic a, const PiQuadratic& b) { return a -= b; }
  friend PiQuadratic operator*(PiQuadratic a, const Rational& c) { return a *= c; }
  friend PiQuadratic operator*(const Rational& c, PiQuadratic a) { return a *= c; }
  friend PiQuadratic operator-(const PiQuadratic& a) {
    return PiQuadratic(-a.pi2_coeff, -a.const_coeff);
  }
  friend bool operator==(const PiQuadratic& a, const PiQuadratic& b) {
    return a.pi2_coeff == b.pi2_coeff && a.const_coeff == b.const_coeff;
  }
  friend bool operator!=(const PiQuadratic& a, const PiQuadratic& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const PiQuadratic& v) {
    return os << "(" << v.pi2_coeff << ")*pi^2 + (" << v.const_coeff << ")";
  }
};

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// Default number of decimal digits for pi^2 enclosures used in sign
/// evaluation and float rendering. Thread-safe; intended to be set once at
/// startup (the CLI maps BIDISK_PI2_DIGITS here).
void set_pi2_digits(int digits);
int pi2_digits();

/// Rational enclosure [lo, hi] of pi^2 with hi - lo <= abs_err, deterministic
/// for a given abs_err and nested as abs_err decreases. Widths are clamped to
/// at most 1e-4 so the interval is always well separated from 9.87.
RationalInterval pi2_enclosure(const Rational& abs_err);

/// Enclosure of a*pi^2 + b obtained by interval evaluation.
RationalInterval qpi2_enclosure(const PiQuadratic& v, const Rational& abs_err);

/// Exact sign of a*pi^2 + b. Rational values are decided directly; otherwise
/// the pi^2 enclosure is refined (width halved) until zero is excluded, which
/// terminates because pi^2 is irrational. A hard cap of 10^-200 on the width
/// guards against implementation bugs and raises refinement_budget_error.
Sign qpi2_sign(const PiQuadratic& v);

/// Float rendering through an exact enclosure midpoint at the configured
/// precision, so near-cancelling values keep full double accuracy.
double to_double(const PiQuadratic& v);

}  // namespace bidisk
