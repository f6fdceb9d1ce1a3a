#include "bidisk/bivariate.hpp"

#include "bidisk/errors.hpp"

namespace bidisk {

BivariatePoly BivariatePoly::monomial(long a, long b, Rational coeff) {
  BivariatePoly q;
  q.add_term(a, b, coeff);
  return q;
}

BivariatePoly BivariatePoly::from_symbol(const HomogeneousSymbol& p) {
  BivariatePoly q;
  const long k = static_cast<long>(p.degree());
  for (long j = 0; j <= k; ++j) q.add_term(j, k - j, p.coefficients()[static_cast<std::size_t>(j)]);
  return q;
}

void BivariatePoly::add_term(long a, long b, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto key = Exponents{a, b};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

void BivariatePoly::accumulate_scaled_shift(BivariatePoly& out, const Rational& c,
                                            long dz, long dw) const {
  if (c.is_zero()) return;
  for (const auto& [exp, coeff] : terms_)
    out.add_term(exp.first + dz, exp.second + dw, c * coeff);
}

BivariatePoly BivariatePoly::scaled_shift(const Rational& c, long dz, long dw) const {
  BivariatePoly out;
  accumulate_scaled_shift(out, c, dz, dw);
  return out;
}

BivariatePoly operator+(const BivariatePoly& x, const BivariatePoly& y) {
  BivariatePoly out = x;
  for (const auto& [exp, coeff] : y.terms_) out.add_term(exp.first, exp.second, coeff);
  return out;
}

Rational h2_inner(const BivariatePoly& q1, const BivariatePoly& q2) {
  // Walk the smaller term map.
  const auto& small = q1.terms().size() <= q2.terms().size() ? q1 : q2;
  const auto& big = q1.terms().size() <= q2.terms().size() ? q2 : q1;
  Rational acc(0);
  for (const auto& [exp, coeff] : small.terms()) {
    auto it = big.terms().find(exp);
    if (it != big.terms().end()) acc += coeff * it->second;
  }
  return acc;
}

std::pair<BivariatePoly, BivariatePoly> defect_basis_unnormalized(
    const HomogeneousSymbol& p, unsigned n, const std::vector<Rational>& cof0,
    const std::vector<Rational>& cofn) {
  if (cof0.size() != n + 1 || cofn.size() != n + 1)
    throw dimension_error("defect_basis_unnormalized: cofactor rows must have length n+1");
  BivariatePoly base = BivariatePoly::from_symbol(p);
  BivariatePoly phi, psi;
  for (unsigned j = 0; j <= n; ++j) {
    base.accumulate_scaled_shift(phi, cof0[j], j, n - j);
    base.accumulate_scaled_shift(psi, cofn[j], j, n - j);
  }
  return {std::move(phi), std::move(psi)};
}

}  // namespace bidisk
