#include "bidisk/bivariate.hpp"
#include "bidisk/errors.hpp"
#include "bidisk/symbol.hpp"
#include "bidisk/toeplitz.hpp"
#include "doctest.h"

using namespace bidisk;

namespace {

// Oracle for Gram entries: <p w^m z^pad..., p z^m ...> through the monomial
// inner product, with both sides padded to a common bidegree.
Rational gram_entry_oracle(const HomogeneousSymbol& p, long m) {
  long mm = m < 0 ? -m : m;
  BivariatePoly base = BivariatePoly::from_symbol(p);
  BivariatePoly lhs = base.scaled_shift(Rational(1), 0, mm);  // p w^m
  BivariatePoly rhs = base.scaled_shift(Rational(1), mm, 0);  // p z^m
  return h2_inner(lhs, rhs);
}

}  // namespace

TEST_CASE("symbol parsing and validation") {
  HomogeneousSymbol p = HomogeneousSymbol::parse("1,-2,1");
  CHECK(p.degree() == 2);
  CHECK(p.coefficients()[1] == Rational(-2));
  CHECK(HomogeneousSymbol::parse(" 1/2 , -3/2 ").coefficients()[0] == Rational(1, 2));
  CHECK_THROWS_AS(HomogeneousSymbol::parse("0,0"), domain_error);
  CHECK_THROWS_AS(HomogeneousSymbol::parse("1,,2"), domain_error);
  CHECK_THROWS_AS(HomogeneousSymbol::parse(""), domain_error);
  CHECK(HomogeneousSymbol::parse("0,0,3").is_monomial());
  CHECK(!p.is_monomial());
  CHECK(symbol_for(Submodule::zw).to_string() == "-1,1");
  CHECK(symbol_for(Submodule::zw2).to_string() == "1,-2,1");
}

TEST_CASE("autocorrelations") {
  HomogeneousSymbol p2 = symbol_for(Submodule::zw2);
  CHECK(autocorrelation(p2, 0) == Rational(6));
  CHECK(autocorrelation(p2, 1) == Rational(-4));
  CHECK(autocorrelation(p2, 2) == Rational(1));
  CHECK(autocorrelation(p2, 3) == Rational(0));
  CHECK(autocorrelation(p2, -2) == Rational(1));

  HomogeneousSymbol p1 = symbol_for(Submodule::zw);
  CHECK(autocorrelation(p1, 0) == Rational(2));
  CHECK(autocorrelation(p1, 1) == Rational(-1));

  HomogeneousSymbol z3 = HomogeneousSymbol::parse("0,0,0,1");
  CHECK(autocorrelation(z3, 0) == Rational(1));
  for (long m = 1; m <= 4; ++m) CHECK(autocorrelation(z3, m) == Rational(0));
}

TEST_CASE("autocorrelation symmetry and Cauchy-Schwarz") {
  for (const char* text : {"1,-2,1", "-1,1", "1,1,1", "2/3,0,-5/7,1"}) {
    HomogeneousSymbol p = HomogeneousSymbol::parse(text);
    Rational a0 = autocorrelation(p, 0);
    CHECK(a0.sign() > 0);
    for (long m = 0; m <= static_cast<long>(p.degree()); ++m) {
      CHECK(autocorrelation(p, m) == autocorrelation(p, -m));
      CHECK(autocorrelation(p, m).abs() <= a0);
    }
  }
}

TEST_CASE("gram matrices") {
  RationalMatrix g2 = gram_matrix(symbol_for(Submodule::zw2), 2).dense();
  const long expected[3][3] = {{6, -4, 1}, {-4, 6, -4}, {1, -4, 6}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(g2.at(i, j) == Rational(expected[i][j]));

  RationalMatrix g1 = gram_matrix(symbol_for(Submodule::zw), 1).dense();
  CHECK(g1.at(0, 0) == Rational(2));
  CHECK(g1.at(0, 1) == Rational(-1));
  CHECK(g1.at(1, 0) == Rational(-1));
  CHECK(g1.at(1, 1) == Rational(2));

  RationalMatrix g0 = gram_matrix(HomogeneousSymbol::parse("1,1,1"), 0).dense();
  CHECK(g0.rows() == 1);
  CHECK(g0.at(0, 0) == Rational(3));
}

TEST_CASE("gram entries match the H^2 oracle") {
  for (const char* text : {"1,-2,1", "-1,1", "1,1,1", "2/3,0,-5/7,1"}) {
    HomogeneousSymbol p = HomogeneousSymbol::parse(text);
    ToeplitzGram gram = gram_matrix(p, 20);
    for (unsigned i = 0; i <= 20; ++i)
      for (unsigned j = 0; j <= 20; ++j)
        REQUIRE(gram.entry(i, j) ==
                gram_entry_oracle(p, static_cast<long>(i) - static_cast<long>(j)));
  }
}

TEST_CASE("gram positivity for the named submodules") {
  for (Submodule s : {Submodule::zw, Submodule::zw2}) {
    DetSequence seq = det_sequence(symbol_for(s), 101);
    for (const Rational& d : seq.values) REQUIRE(d.sign() > 0);
  }
}

TEST_CASE("h2 inner product") {
  BivariatePoly zw = BivariatePoly::from_symbol(symbol_for(Submodule::zw));
  CHECK(h2_inner(zw, zw) == Rational(2));
  CHECK(h2_inner(BivariatePoly::monomial(1, 1), BivariatePoly::monomial(2, 0)) == Rational(0));

  BivariatePoly p2 = BivariatePoly::from_symbol(symbol_for(Submodule::zw2));
  CHECK(h2_inner(p2.scaled_shift(Rational(1), 0, 1), p2.scaled_shift(Rational(1), 1, 0)) ==
        Rational(-4));
}

TEST_CASE("bivariate polynomials drop zero terms") {
  BivariatePoly q;
  q.add_term(1, 2, Rational(3));
  q.add_term(1, 2, Rational(-3));
  CHECK(q.terms().empty());
  q.add_term(0, 0, Rational(0));
  CHECK(q.terms().empty());
}

TEST_CASE("unnormalized defect basis") {
  HomogeneousSymbol p1 = symbol_for(Submodule::zw);
  // n = 0: Phi_0 = Psi_0 = p (the 1x1 cofactor is 1)
  auto [phi0, psi0] = defect_basis_unnormalized(p1, 0, {Rational(1)}, {Rational(1)});
  CHECK(h2_inner(phi0, phi0) == Rational(2));
  CHECK(h2_inner(phi0, psi0) == Rational(2));

  CofactorRow first = first_row_cofactors(p1, 1);
  CHECK(first.values == std::vector<Rational>{Rational(2), Rational(1)});
  auto [phi1, psi1] =
      defect_basis_unnormalized(p1, 1, first.values, last_row_cofactors(p1, 1).values);
  CHECK(h2_inner(phi1, phi1) == Rational(6));  // D_1 D_2 = 2*3

  HomogeneousSymbol p2 = symbol_for(Submodule::zw2);
  auto [phi2, psi2] = defect_basis_unnormalized(p2, 1, first_row_cofactors(p2, 1).values,
                                                last_row_cofactors(p2, 1).values);
  CHECK(h2_inner(phi2, phi2) == Rational(120));  // D_1 D_2 = 6*20
  CHECK(h2_inner(psi2, psi2) == Rational(120));

  CHECK_THROWS_AS(defect_basis_unnormalized(p1, 2, {Rational(1)}, {Rational(1)}),
                  dimension_error);
}

TEST_CASE("defect bases are orthogonal to zM and wM degreewise") {
  for (Submodule s : {Submodule::zw, Submodule::zw2}) {
    HomogeneousSymbol p = symbol_for(s);
    BivariatePoly base = BivariatePoly::from_symbol(p);
    for (unsigned n = 1; n <= 6; ++n) {
      auto [phi, psi] = defect_basis_unnormalized(p, n, first_row_cofactors(p, n).values,
                                                  last_row_cofactors(p, n).values);
      for (unsigned a = 0; a + 1 <= n; ++a) {
        unsigned b = n - 1 - a;
        CHECK(h2_inner(phi, base.scaled_shift(Rational(1), a + 1, b)).is_zero());
        CHECK(h2_inner(psi, base.scaled_shift(Rational(1), a, b + 1)).is_zero());
      }
    }
  }
}
