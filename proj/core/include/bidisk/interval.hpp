#pragma once

#include "bidisk/errors.hpp"
#include "bidisk/rational.hpp"

namespace bidisk {

/// Pair of rational endpoints enclosing a real value.
class RationalInterval {
 public:
  RationalInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) throw domain_error("interval endpoints out of order");
  }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / Rational(2); }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const RationalInterval& inner) const {
    return lo_ <= inner.lo_ && inner.hi_ <= hi_;
  }

 private:
  Rational lo_, hi_;
};

}  // namespace bidisk
