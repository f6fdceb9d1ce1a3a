#pragma once

#include <vector>

#include "bidisk/rational.hpp"

namespace bidisk {

/// H_n = sum_{r=1}^n 1/r, with H_0 = 0.
Rational harmonic(unsigned long n);

/// H_n^(2) = sum_{r=1}^n 1/r^2, with H_0^(2) = 0.
Rational harmonic2(unsigned long n);

/// Prefix tables of first- and second-order harmonic numbers. Built once in
/// the constructor; read-only afterwards, so freely shareable across threads.
class HarmonicCache {
 public:
  explicit HarmonicCache(unsigned long max_n);

  unsigned long max_n() const { return h1_.size() - 1; }
  const Rational& h1(unsigned long n) const;
  const Rational& h2(unsigned long n) const;

 private:
  std::vector<Rational> h1_, h2_;
};

/// Even-index Bernoulli number B_{2m} (B_2 = 1/6, B_4 = -1/30, B_6 = 1/42),
/// computed from the defining recurrence sum_j C(m+1, j) B_j = 0.
Rational bernoulli_even(unsigned m);

/// Barnes G at a positive integer: G(1) = 1, G(n) = prod_{j=0}^{n-2} j!.
Int barnes_g_int(unsigned long n);

}  // namespace bidisk
