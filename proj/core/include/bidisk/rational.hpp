#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "bidisk/errors.hpp"

namespace bidisk {

using Int = mpz_class;

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; the canonical zero is 0/1. Arithmetic is exact.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}            // NOLINT: implicit by design
  Rational(const Int& v) : v_(v) {}      // NOLINT
  Rational(long num, long den) : v_(num, den) { canonicalize(); }
  Rational(const Int& num, const Int& den) : v_(num, den) { canonicalize(); }

  static Rational from_string(std::string_view text) {
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0)
      throw domain_error("invalid rational literal: " + std::string(text));
    if (q.get_den() == 0) throw domain_error("zero denominator: " + std::string(text));
    q.canonicalize();
    Rational r;
    r.v_ = std::move(q);
    return r;
  }

  Int numerator() const { return v_.get_num(); }
  Int denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational abs() const {
    Rational r = *this;
    if (r.sign() < 0) r.v_ = -r.v_;
    return r;
  }

  Rational inverse() const {
    if (is_zero()) throw domain_error("inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
  }

  /// Integer power; negative exponents invert (which throws on zero).
  Rational pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Rational r;
    mpz_pow_ui(r.v_.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.v_.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return r;  // powers of a canonical value stay canonical
  }

  double to_double() const { return v_.get_d(); }

  std::string to_string() const { return v_.get_str(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw domain_error("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.v_ = -a.v_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

 private:
  void canonicalize() {
    if (v_.get_den() == 0) throw domain_error("zero denominator");
    v_.canonicalize();
  }

  mpq_class v_;  // invariant: canonical (reduced, denominator > 0)
};

inline Int factorial_int(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// C(n, k); zero when k is out of range.
inline Int binomial_int(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

}  // namespace bidisk
