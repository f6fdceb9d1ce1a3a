#include "bidisk/numbers.hpp"

#include "bidisk/errors.hpp"

namespace bidisk {

Rational harmonic(unsigned long n) {
  Rational h(0);
  for (unsigned long r = 1; r <= n; ++r) h += Rational(Int(1), Int(r));
  return h;
}

Rational harmonic2(unsigned long n) {
  Rational h(0);
  for (unsigned long r = 1; r <= n; ++r) h += Rational(Int(1), Int(r) * Int(r));
  return h;
}

HarmonicCache::HarmonicCache(unsigned long max_n) {
  h1_.reserve(max_n + 1);
  h2_.reserve(max_n + 1);
  h1_.emplace_back(0);
  h2_.emplace_back(0);
  for (unsigned long r = 1; r <= max_n; ++r) {
    h1_.push_back(h1_.back() + Rational(Int(1), Int(r)));
    h2_.push_back(h2_.back() + Rational(Int(1), Int(r) * Int(r)));
  }
}

const Rational& HarmonicCache::h1(unsigned long n) const {
  if (n >= h1_.size()) throw domain_error("HarmonicCache: index beyond max_n");
  return h1_[n];
}

const Rational& HarmonicCache::h2(unsigned long n) const {
  if (n >= h2_.size()) throw domain_error("HarmonicCache: index beyond max_n");
  return h2_[n];
}

Rational bernoulli_even(unsigned m) {
  if (m < 1) throw domain_error("bernoulli_even needs m >= 1");
  // B_0 = 1, B_1 = -1/2; for m >= 1,
  //   B_m = -1/(m+1) * sum_{j=0}^{m-1} C(m+1, j) B_j.
  const unsigned top = 2 * m;
  std::vector<Rational> b;
  b.reserve(top + 1);
  b.emplace_back(1);
  b.emplace_back(-1, 2);
  for (unsigned i = 2; i <= top; ++i) {
    Rational acc(0);
    for (unsigned j = 0; j < i; ++j) acc += Rational(binomial_int(i + 1, j)) * b[j];
    b.push_back(-acc / Rational(Int(i + 1)));
  }
  return b[top];
}

Int barnes_g_int(unsigned long n) {
  if (n < 1) throw domain_error("barnes_g_int needs n >= 1");
  Int g(1), fact(1);
  for (unsigned long j = 1; j + 1 < n; ++j) {
    fact *= Int(j);   // j!
    g *= fact;
  }
  return g;
}

}  // namespace bidisk
