#pragma once

#include <map>
#include <utility>

#include "bidisk/rational.hpp"
#include "bidisk/symbol.hpp"

namespace bidisk {

/// Sparse polynomial in z and w with rational coefficients; the carrier for
/// the independent H^2(D^2) inner-product oracle (monomials z^a w^b are an
/// orthonormal set there). No explicit zero coefficients are stored.
class BivariatePoly {
 public:
  using Exponents = std::pair<long, long>;  // (z power, w power)

  BivariatePoly() = default;

  static BivariatePoly monomial(long a, long b, Rational coeff = Rational(1));
  /// p as a polynomial: sum c_j z^j w^{k-j}.
  static BivariatePoly from_symbol(const HomogeneousSymbol& p);

  void add_term(long a, long b, const Rational& coeff);

  /// this * c * z^dz w^dw, accumulated into out.
  void accumulate_scaled_shift(BivariatePoly& out, const Rational& c, long dz, long dw) const;

  BivariatePoly scaled_shift(const Rational& c, long dz, long dw) const;

  const std::map<Exponents, Rational>& terms() const { return terms_; }

  friend BivariatePoly operator+(const BivariatePoly& x, const BivariatePoly& y);

 private:
  std::map<Exponents, Rational> terms_;
};

/// H^2(D^2) inner product: sum over shared exponent pairs of coeff1*coeff2
/// (coefficients are real, so conjugation is trivial).
Rational h2_inner(const BivariatePoly& q1, const BivariatePoly& q2);

/// Unnormalized defect-space basis vectors
///   Phi_n = sum_j cof0[j] p z^j w^{n-j},  Psi_n = sum_j cofn[j] p z^j w^{n-j},
/// where cof0/cofn are the first/last cofactor rows of the Gram matrix of p
/// at size n. Squared norms of the normalized vectors divide by D_n D_{n+1}.
std::pair<BivariatePoly, BivariatePoly> defect_basis_unnormalized(
    const HomogeneousSymbol& p, unsigned n, const std::vector<Rational>& cof0,
    const std::vector<Rational>& cofn);

}  // namespace bidisk
