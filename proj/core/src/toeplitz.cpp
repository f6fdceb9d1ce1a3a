#include "bidisk/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "bidisk/errors.hpp"
#include "bidisk/numbers.hpp"

namespace bidisk {

namespace {

void require_square(const RationalMatrix& m, const char* who) {
  if (!m.square()) throw dimension_error(std::string(who) + ": matrix must be square");
}

// Forward elimination on a working copy. Returns the determinant; rows below
// the pivot are updated only over the pivot row's nonzero columns, which keeps
// banded matrices cheap.
Rational eliminate_det(RationalMatrix work) {
  const std::size_t n = work.rows();
  Rational det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && work.at(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(work.at(pivot, j), work.at(k, j));
      det = -det;
    }
    const Rational& p = work.at(k, k);
    det *= p;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (work.at(i, k).is_zero()) continue;
      Rational f = work.at(i, k) / p;
      for (std::size_t j = k; j < n; ++j) {
        if (work.at(k, j).is_zero()) continue;
        work.at(i, j) -= f * work.at(k, j);
      }
    }
  }
  return det;
}

}  // namespace

Rational det_exact(const RationalMatrix& m) {
  require_square(m, "det_exact");
  if (m.rows() == 0) return Rational(1);
  return eliminate_det(m);
}

Rational cofactor_exact(const RationalMatrix& m, std::size_t i, std::size_t j) {
  require_square(m, "cofactor_exact");
  if (i >= m.rows() || j >= m.cols()) throw std::out_of_range("cofactor_exact: index out of range");
  Rational d = det_exact(m.minor_matrix(i, j));
  return ((i + j) % 2 == 0) ? d : -d;
}

RationalMatrix RationalMatrix::minor_matrix(std::size_t i, std::size_t j) const {
  RationalMatrix out(rows_ - 1, cols_ - 1);
  for (std::size_t r = 0, ro = 0; r < rows_; ++r) {
    if (r == i) continue;
    for (std::size_t c = 0, co = 0; c < cols_; ++c) {
      if (c == j) continue;
      out.at(ro, co) = at(r, c);
      ++co;
    }
    ++ro;
  }
  return out;
}

std::optional<std::vector<Rational>> leading_principal_minors(const RationalMatrix& m) {
  require_square(m, "leading_principal_minors");
  const std::size_t n = m.rows();
  RationalMatrix work = m;
  std::vector<Rational> minors;
  minors.reserve(n);
  Rational prefix(1);
  for (std::size_t k = 0; k < n; ++k) {
    const Rational& p = work.at(k, k);
    if (p.is_zero()) return std::nullopt;  // chain of minors breaks; caller falls back
    prefix *= p;
    minors.push_back(prefix);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (work.at(i, k).is_zero()) continue;
      Rational f = work.at(i, k) / p;
      for (std::size_t j = k; j < n; ++j) {
        if (work.at(k, j).is_zero()) continue;
        work.at(i, j) -= f * work.at(k, j);
      }
    }
  }
  return minors;
}

std::vector<Rational> solve_exact(const RationalMatrix& a, const std::vector<Rational>& b) {
  require_square(a, "solve_exact");
  const std::size_t n = a.rows();
  if (b.size() != n) throw dimension_error("solve_exact: rhs length mismatch");
  RationalMatrix work = a;
  std::vector<Rational> rhs = b;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && work.at(pivot, k).is_zero()) ++pivot;
    if (pivot == n) throw singular_gram_error("solve_exact: singular matrix");
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(work.at(pivot, j), work.at(k, j));
      std::swap(rhs[pivot], rhs[k]);
    }
    const Rational& p = work.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (work.at(i, k).is_zero()) continue;
      Rational f = work.at(i, k) / p;
      for (std::size_t j = k; j < n; ++j) {
        if (work.at(k, j).is_zero()) continue;
        work.at(i, j) -= f * work.at(k, j);
      }
      if (!rhs[k].is_zero()) rhs[i] -= f * rhs[k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc = rhs[ii];
    for (std::size_t j = ii + 1; j < n; ++j) {
      if (work.at(ii, j).is_zero() || x[j].is_zero()) continue;
      acc -= work.at(ii, j) * x[j];
    }
    x[ii] = acc / work.at(ii, ii);
  }
  return x;
}

DetSequence det_sequence(const HomogeneousSymbol& p, unsigned N) {
  DetSequence seq{p, {Rational(1)}};
  if (N == 0) return seq;
  auto minors = leading_principal_minors(gram_matrix(p, N - 1).dense());
  if (minors) {
    for (auto& d : *minors) seq.values.push_back(std::move(d));
    return seq;
  }
  for (unsigned n = 1; n <= N; ++n)
    seq.values.push_back(det_exact(gram_matrix(p, n - 1).dense()));
  return seq;
}

Rational closed_Dn(Submodule s, unsigned long n) {
  if (s == Submodule::zw) return Rational(Int(n + 1));
  return Rational(Int(n + 1) * Int(n + 2) * Int(n + 2) * Int(n + 3), Int(12));
}

Rational closed_cofactor_last_row(Submodule s, unsigned long n, unsigned long k) {
  if (k > n) throw domain_error("closed_cofactor_last_row needs k <= n");
  if (s == Submodule::zw) return Rational(Int(k + 1));
  Int ik(k), in(n);
  return Rational(-(in + 2) * (in + 3) * (ik + 1) * (ik + 2) * (ik - in - 1), Int(12));
}

Rational closed_cofactor_first_row_corner(Submodule s, unsigned long n) {
  if (s == Submodule::zw) return Rational(1);
  return Rational(Int(n + 1) * Int(n + 2) * Int(n + 3), Int(6));
}

namespace {

// Scale factor s > 0 such that a_m = s (-1)^m C(2d, d+m) for all m, when the
// symbol's autocorrelations match a scaled |1-z|^{2d}; this is what makes the
// polynomial cofactor ansatz applicable.
std::optional<Rational> alternating_binomial_scale(const AutocorrelationSeq& acf) {
  const auto d = static_cast<unsigned long>(acf.a.size()) - 1;
  if (d == 0) return std::nullopt;
  Rational s = acf.a[0] / Rational(binomial_int(2 * d, static_cast<long>(d)));
  if (s.sign() <= 0) return std::nullopt;
  for (unsigned long m = 1; m <= d; ++m) {
    Rational expect = s * Rational(binomial_int(2 * d, static_cast<long>(d + m)));
    if (m % 2 == 1) expect = -expect;
    if (acf.a[m] != expect) return std::nullopt;
  }
  return s;
}

// Sum_j a_{i-j} P(j) over j in [j_lo, j_hi], expressed in the monomial
// coefficients of P: the c_t coefficient is sum_j a_{i-j} j^t.
void stencil_row(const AutocorrelationSeq& acf, long i, long j_lo, long j_hi,
                 unsigned unknowns, RationalMatrix& sys, std::size_t row) {
  for (long j = j_lo; j <= j_hi; ++j) {
    Rational a = acf.at(i - j);
    if (a.is_zero()) continue;
    Rational power(1);
    for (unsigned t = 0; t < unknowns; ++t) {
      sys.at(row, t) += a * power;
      power *= Rational(j);
    }
  }
}

std::optional<std::vector<Rational>> cofactor_row_by_ansatz(
    const AutocorrelationSeq& acf, unsigned n, const Rational& d_n) {
  const auto d = static_cast<long>(acf.a.size()) - 1;
  if (d < 1 || static_cast<long>(n) < 2 * d - 1) return std::nullopt;
  if (!alternating_binomial_scale(acf)) return std::nullopt;

  // Unknowns: c_0..c_{2d-1} of P; C_j = P(j) for j = 1..n+1 (1-based columns).
  const unsigned unknowns = static_cast<unsigned>(2 * d);
  RationalMatrix sys(unknowns, unknowns);
  std::vector<Rational> rhs(unknowns, Rational(0));
  std::size_t row = 0;
  for (long i = 1; i <= d; ++i, ++row)
    stencil_row(acf, i, 1, i + d, unknowns, sys, row);
  for (long i = static_cast<long>(n) + 2 - d; i <= static_cast<long>(n); ++i, ++row)
    stencil_row(acf, i, i - d, static_cast<long>(n) + 1, unknowns, sys, row);
  // Normalization C_{n+1} = D_n.
  Rational power(1);
  for (unsigned t = 0; t < unknowns; ++t) {
    sys.at(row, t) = power;
    power *= Rational(static_cast<long>(n) + 1);
  }
  rhs[row] = d_n;

  std::vector<Rational> poly;
  try {
    poly = solve_exact(sys, rhs);
  } catch (const singular_gram_error&) {
    return std::nullopt;
  }

  std::vector<Rational> values(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    Rational j(static_cast<long>(k) + 1), pw(1), acc(0);
    for (unsigned t = 0; t < unknowns; ++t) {
      acc += poly[t] * pw;
      pw *= j;
    }
    values[k] = acc;
  }
  return values;
}

// Cofactor-expansion identity: sum_j a_{i-j} x_j = delta_{i,r} D_{n+1}.
bool expansion_identity_holds(const AutocorrelationSeq& acf, unsigned n,
                              const std::vector<Rational>& x, unsigned r,
                              const Rational& d_np1) {
  const long d = static_cast<long>(acf.a.size()) - 1;
  for (long i = 0; i <= static_cast<long>(n); ++i) {
    Rational acc(0);
    long j_lo = std::max<long>(0, i - d);
    long j_hi = std::min<long>(static_cast<long>(n), i + d);
    for (long j = j_lo; j <= j_hi; ++j) {
      if (x[static_cast<std::size_t>(j)].is_zero()) continue;
      acc += acf.at(i - j) * x[static_cast<std::size_t>(j)];
    }
    const Rational expect = (i == static_cast<long>(r)) ? d_np1 : Rational(0);
    if (acc != expect) return false;
  }
  return true;
}

std::vector<Rational> unit_rhs(unsigned n, unsigned r, const Rational& scale) {
  std::vector<Rational> rhs(n + 1, Rational(0));
  rhs[r] = scale;
  return rhs;
}

}  // namespace

namespace {

CofactorRow last_row_with_dets(const HomogeneousSymbol& p, const AutocorrelationSeq& acf,
                               unsigned n, const Rational& d_n, const Rational& d_np1) {
  if (d_np1.is_zero())
    throw singular_gram_error("last_row_cofactors: D_{n+1} = 0, symbol inadmissible");
  if (n == 0) return {0, RowSel::last, {Rational(1)}};
  if (auto fitted = cofactor_row_by_ansatz(acf, n, d_n)) {
    if (expansion_identity_holds(acf, n, *fitted, n, d_np1))
      return {n, RowSel::last, std::move(*fitted)};
  }
  auto x = solve_exact(gram_matrix(p, n).dense(), unit_rhs(n, n, d_np1));
  return {n, RowSel::last, std::move(x)};
}

}  // namespace

CofactorRow last_row_cofactors(const HomogeneousSymbol& p, unsigned n) {
  AutocorrelationSeq acf = AutocorrelationSeq::of(p);
  ToeplitzGram gram{n, acf};
  auto minors = leading_principal_minors(gram.dense());

  Rational d_n, d_np1;
  if (minors) {
    d_n = (n == 0) ? Rational(1) : (*minors)[n - 1];
    d_np1 = (*minors)[n];
  } else {
    d_n = (n == 0) ? Rational(1) : det_exact(gram_matrix(p, n - 1).dense());
    d_np1 = det_exact(gram.dense());
  }
  return last_row_with_dets(p, acf, n, d_n, d_np1);
}

CofactorRow last_row_cofactors(const HomogeneousSymbol& p, unsigned n, const Rational& d_n,
                               const Rational& d_np1) {
  return last_row_with_dets(p, AutocorrelationSeq::of(p), n, d_n, d_np1);
}

CofactorRow first_row_cofactors(const HomogeneousSymbol& p, const CofactorRow& last) {
  const unsigned n = last.n;
  std::vector<Rational> values(last.values.rbegin(), last.values.rend());

  AutocorrelationSeq acf = AutocorrelationSeq::of(p);
  Rational d_np1 = (n == 0) ? acf.a[0] : Rational(0);
  if (n > 0) {
    // D_{n+1} recovered from the verified last row: sum_j a_{n-j} A_{n,j}.
    const long d = static_cast<long>(acf.a.size()) - 1;
    for (long j = std::max<long>(0, static_cast<long>(n) - d); j <= static_cast<long>(n); ++j)
      d_np1 += acf.at(static_cast<long>(n) - j) * last.values[static_cast<std::size_t>(j)];
  }
  if (expansion_identity_holds(acf, n, values, 0, d_np1))
    return {n, RowSel::first, std::move(values)};
  auto x = solve_exact(ToeplitzGram{n, acf}.dense(), unit_rhs(n, 0, d_np1));
  return {n, RowSel::first, std::move(x)};
}

CofactorRow first_row_cofactors(const HomogeneousSymbol& p, unsigned n) {
  return first_row_cofactors(p, last_row_cofactors(p, n));
}

LaurentSeq fh_symbol_coeffs(FHParams params) {
  const long alpha = static_cast<long>(params.alpha);
  // (1-z)^alpha has coefficient (-1)^j C(alpha, j) at z^j.
  std::vector<Rational> base(static_cast<std::size_t>(alpha) + 1);
  for (long j = 0; j <= alpha; ++j) {
    Rational c(binomial_int(params.alpha, j));
    base[static_cast<std::size_t>(j)] = (j % 2 == 0) ? c : -c;
  }
  // |1-z|^{2 alpha}: convolve with the reflected copy; coefficient at m
  // (m in [-alpha, alpha]) is sum_j base[j] base[j-m].
  LaurentSeq sym;
  sym.min_m = -alpha + params.beta;
  sym.coeffs.assign(static_cast<std::size_t>(2 * alpha) + 1, Rational(0));
  for (long m = -alpha; m <= alpha; ++m) {
    Rational acc(0);
    for (long j = 0; j <= alpha; ++j) {
      long i = j - m;
      if (i < 0 || i > alpha) continue;
      acc += base[static_cast<std::size_t>(j)] * base[static_cast<std::size_t>(i)];
    }
    sym.coeffs[static_cast<std::size_t>(m + alpha)] = acc;
  }
  // (-z)^beta: index shift by beta and sign (-1)^beta.
  if (params.beta % 2 != 0)
    for (auto& c : sym.coeffs) c = -c;
  return sym;
}

RationalMatrix fh_toeplitz_truncation(FHParams params, unsigned n) {
  LaurentSeq sym = fh_symbol_coeffs(params);
  RationalMatrix m(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      m.at(i, j) = sym.at(static_cast<long>(i) - static_cast<long>(j));
  return m;
}

Rational fh_determinant(FHParams params, unsigned n) {
  if (n < 1) throw domain_error("fh_determinant needs n >= 1");
  const long alpha = static_cast<long>(params.alpha);
  const long beta = params.beta;
  if (alpha + beta < 0 || alpha - beta < 0) return Rational(0);  // vanishing case
  auto g = [](long z) {
    if (z < 1) throw domain_error("fh_determinant: Barnes G argument out of scope");
    return barnes_g_int(static_cast<unsigned long>(z));
  };
  const long nn = static_cast<long>(n);
  Rational head(g(1 + alpha + beta) * g(1 + alpha - beta), g(1 + 2 * alpha));
  Rational tail(g(1 + nn) * g(1 + nn + 2 * alpha),
                g(1 + nn + alpha + beta) * g(1 + nn + alpha - beta));
  return head * tail;
}

namespace {

// log of a positive rational without overflowing double range.
double log_rational(const Rational& r) {
  long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, r.numerator().get_mpz_t());
  double md = mpz_get_d_2exp(&ed, r.denominator().get_mpz_t());
  constexpr double ln2 = 0.6931471805599453;
  return std::log(mn) - std::log(md) + static_cast<double>(en - ed) * ln2;
}

}  // namespace

double fh_exponent_estimate(FHParams params, unsigned n_lo, unsigned n_hi) {
  if (n_lo < 2 || n_lo >= n_hi) throw domain_error("fh_exponent_estimate needs 2 <= n_lo < n_hi");
  const std::size_t count = n_hi - n_lo + 1;
  std::vector<double> logn(count), logd(count), invn(count);
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    Rational d = fh_determinant(params, n);
    if (d.sign() <= 0) throw domain_error("fh_exponent_estimate: zero determinant in range");
    std::size_t idx = n - n_lo;
    logn[idx] = std::log(static_cast<double>(n));
    logd[idx] = log_rational(d);
    invn[idx] = 1.0 / static_cast<double>(n);
  }
  // Least squares on log D = c0 + sigma log n + c2 / n; the 1/n regressor
  // absorbs the finite-size factor of the exact determinants. Falls back to
  // the plain two-parameter fit when the window is too short.
  const unsigned terms = count >= 3 ? 3u : 2u;
  long double ata[3][3] = {};
  long double atb[3] = {};
  for (std::size_t i = 0; i < count; ++i) {
    long double row[3] = {1.0L, static_cast<long double>(logn[i]), static_cast<long double>(invn[i])};
    for (unsigned r = 0; r < terms; ++r) {
      for (unsigned c = 0; c < terms; ++c) ata[r][c] += row[r] * row[c];
      atb[r] += row[r] * static_cast<long double>(logd[i]);
    }
  }
  for (unsigned c = 0; c < terms; ++c) {
    unsigned piv = c;
    for (unsigned r = c + 1; r < terms; ++r)
      if (std::fabs(static_cast<double>(ata[r][c])) > std::fabs(static_cast<double>(ata[piv][c]))) piv = r;
    std::swap(ata[piv], ata[c]);
    std::swap(atb[piv], atb[c]);
    for (unsigned r = 0; r < terms; ++r) {
      if (r == c || ata[r][c] == 0.0L) continue;
      long double f = ata[r][c] / ata[c][c];
      for (unsigned cc = 0; cc < terms; ++cc) ata[r][cc] -= f * ata[c][cc];
      atb[r] -= f * atb[c];
    }
  }
  return static_cast<double>(atb[1] / ata[1][1]);
}

}  // namespace bidisk
