#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bidisk/matrix.hpp"
#include "bidisk/rational.hpp"

namespace bidisk {

/// The two submodules with closed-form invariants: [z-w] and [(z-w)^2].
enum class Submodule { zw, zw2 };

/// Homogeneous polynomial p = sum_{j=0}^k c_j z^j w^{k-j} with rational
/// coefficients, the generator of the submodule [p]. At least one coefficient
/// must be nonzero.
class HomogeneousSymbol {
 public:
  explicit HomogeneousSymbol(std::vector<Rational> coeffs);

  /// Parses the CLI text format "c_0,c_1,...,c_k", e.g. "1,-2,1".
  static HomogeneousSymbol parse(std::string_view text);

  unsigned degree() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// True when exactly one coefficient is nonzero (Gram matrix is a positive
  /// multiple of the identity and all pairings with k >= 1 vanish).
  bool is_monomial() const;

  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

/// Generator for a named submodule: "-1,1" for zw, "1,-2,1" for zw2.
HomogeneousSymbol symbol_for(Submodule s);

/// Autocorrelation a_m = sum_i c_{i+m} c_i = <p w^m, p z^m>, the m-th Fourier
/// coefficient of |p(z,1)|^2 on the circle. Symmetric in m; zero for |m| > k.
Rational autocorrelation(const HomogeneousSymbol& p, long m);

/// All autocorrelations of a symbol, with symmetric out-of-band access.
struct AutocorrelationSeq {
  std::vector<Rational> a;  // a[0..degree]

  static AutocorrelationSeq of(const HomogeneousSymbol& p);

  Rational at(long m) const {
    unsigned long mm = static_cast<unsigned long>(m < 0 ? -m : m);
    return mm < a.size() ? a[mm] : Rational(0);
  }
};

/// The (n+1) x (n+1) Toeplitz Gram matrix A with entry(i,j) = a_{i-j}.
struct ToeplitzGram {
  unsigned n;
  AutocorrelationSeq acf;

  Rational entry(unsigned i, unsigned j) const {
    return acf.at(static_cast<long>(i) - static_cast<long>(j));
  }
  RationalMatrix dense() const;
};

ToeplitzGram gram_matrix(const HomogeneousSymbol& p, unsigned n);

}  // namespace bidisk
