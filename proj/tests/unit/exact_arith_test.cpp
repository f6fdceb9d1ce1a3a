#include <array>
#include <random>
#include <thread>
#include <vector>

#include "bidisk/errors.hpp"
#include "bidisk/interval.hpp"
#include "bidisk/numbers.hpp"
#include "bidisk/pi_quadratic.hpp"
#include "bidisk/rational.hpp"
#include "doctest.h"

using namespace bidisk;

namespace {

// pi^2 truncated to 49 decimals, from an independent high-precision
// evaluation; differs from pi^2 by less than 1e-49.
const Rational kPi2Reference = Rational(
    Int("98696044010893586188344909998761511353136994072407"),
    [] { Int d; mpz_ui_pow_ui(d.get_mpz_t(), 10, 49); return d; }());

Rational ten_pow_inv(unsigned digits) {
  Int d;
  mpz_ui_pow_ui(d.get_mpz_t(), 10, digits);
  return Rational(Int(1), d);
}

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, -2).denominator() == 2);
  CHECK(Rational(0, 7).to_string() == "0");
  CHECK(Rational::from_string("3/6").to_string() == "1/2");
  CHECK(Rational::from_string("-4").to_string() == "-4");
  CHECK_THROWS_AS(Rational(1, 0), domain_error);
  CHECK_THROWS_AS(Rational::from_string("x"), domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), domain_error);
  CHECK(Rational(-2, 3).pow(2) == Rational(4, 9));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(7, 3).abs() == Rational(7, 3));
  CHECK(Rational(-7, 3).abs() == Rational(7, 3));
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0) == Rational(0));
  CHECK(harmonic(2) == Rational(3, 2));
  CHECK(harmonic(4) == Rational(25, 12));
  CHECK(harmonic2(0) == Rational(0));
  CHECK(harmonic2(2) == Rational(5, 4));
  CHECK(harmonic2(3) == Rational(49, 36));
}

TEST_CASE("harmonic difference identities up to 10^4") {
  const unsigned long top = 10000;
  HarmonicCache cache(top);
  for (unsigned long n = 1; n <= top; ++n) {
    REQUIRE(cache.h1(n) - cache.h1(n - 1) == Rational(Int(1), Int(n)));
    REQUIRE(cache.h2(n) - cache.h2(n - 1) == Rational(Int(1), Int(n) * Int(n)));
  }
  // cache values agree with the direct operations
  for (unsigned long n : {0ul, 1ul, 17ul, 256ul, 9999ul}) {
    CHECK(cache.h1(n) == harmonic(n));
    CHECK(cache.h2(n) == harmonic2(n));
  }
  CHECK_THROWS_AS(cache.h1(top + 1), domain_error);
}

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli_even(1) == Rational(1, 6));
  CHECK(bernoulli_even(2) == Rational(-1, 30));
  CHECK(bernoulli_even(3) == Rational(1, 42));
  CHECK(bernoulli_even(4) == Rational(-1, 30));
  CHECK(bernoulli_even(5) == Rational(5, 66));
  CHECK_THROWS_AS(bernoulli_even(0), domain_error);
}

TEST_CASE("Barnes G at integer arguments") {
  CHECK(barnes_g_int(1) == 1);
  CHECK(barnes_g_int(2) == 1);
  CHECK(barnes_g_int(3) == 1);
  CHECK(barnes_g_int(4) == 2);
  CHECK(barnes_g_int(5) == 12);
  CHECK_THROWS_AS(barnes_g_int(0), domain_error);
  // G(n+1) = (n-1)! G(n) for 2 <= n <= 200
  for (unsigned long n = 2; n <= 200; ++n)
    REQUIRE(barnes_g_int(n + 1) == factorial_int(n - 1) * barnes_g_int(n));
}

TEST_CASE("pi^2 enclosure") {
  RationalInterval wide = pi2_enclosure(Rational(1));
  CHECK(wide.width() <= Rational(1));
  CHECK(wide.contains(kPi2Reference));

  RationalInterval tight = pi2_enclosure(ten_pow_inv(30));
  CHECK(tight.width() <= ten_pow_inv(30));
  CHECK(tight.contains(kPi2Reference));

  // 9.87 > pi^2 must never be inside, whatever the requested width.
  for (unsigned digits : {0u, 2u, 6u, 20u}) {
    RationalInterval enc = pi2_enclosure(digits == 0 ? Rational(1) : ten_pow_inv(digits));
    CHECK(!enc.contains(Rational(987, 100)));
  }

  // At width 1e-6 the truncated literal 9.8696044 lies inside.
  RationalInterval micro = pi2_enclosure(ten_pow_inv(6));
  CHECK(micro.contains(Rational(98696044, 10000000)));

  // Nesting under decreasing abs_err.
  RationalInterval prev = pi2_enclosure(ten_pow_inv(5));
  for (unsigned digits : {10u, 20u, 30u, 40u}) {
    RationalInterval next = pi2_enclosure(ten_pow_inv(digits));
    CHECK(prev.contains(next));
    prev = next;
  }
  CHECK_THROWS_AS(pi2_enclosure(Rational(0)), domain_error);
}

TEST_CASE("qpi2 sign evaluation") {
  CHECK(qpi2_sign({Rational(0), Rational(-4)}) == Sign::negative);
  CHECK(qpi2_sign({Rational(0), Rational(0)}) == Sign::zero);
  CHECK(qpi2_sign({Rational(2, 3), Rational(-4)}) == Sign::positive);
  CHECK(qpi2_sign({Rational(178, 3), Rational(-585)}) == Sign::positive);
  CHECK(qpi2_sign({Rational(-1), Rational(42)}) == Sign::positive);
  CHECK(qpi2_sign({Rational(1), Rational(-10)}) == Sign::negative);
}

TEST_CASE("qpi2 sign agrees with float evaluation for random values") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<long> num(-999, 999);
  std::uniform_int_distribution<long> den(1, 999);
  const double pi2 = 9.869604401089358;
  for (int i = 0; i < 10000; ++i) {
    Rational a(num(rng), den(rng));
    Rational b(num(rng), den(rng));
    double approx = a.to_double() * pi2 + b.to_double();
    if (std::abs(approx) <= 1e-6) continue;
    Sign s = qpi2_sign({a, b});
    REQUIRE((approx > 0 ? Sign::positive : Sign::negative) == s);
  }
}

TEST_CASE("PiQuadratic ring laws") {
  PiQuadratic x(Rational(2, 3), Rational(-4));
  PiQuadratic y(Rational(1, 6), Rational(5, 2));
  CHECK((x + y).pi2_coeff == Rational(5, 6));
  CHECK((x + y).const_coeff == Rational(-3, 2));
  CHECK((x - y) + y == x);
  CHECK(x * Rational(3) == PiQuadratic(Rational(2), Rational(-12)));
  CHECK(x != y);
  CHECK(PiQuadratic(Rational(0), Rational(1)) != PiQuadratic(Rational(1), Rational(0)));
  // float rendering stays close to a double-precision evaluation
  CHECK(to_double(x) == doctest::Approx(2.0 / 3.0 * 9.869604401089358 - 4).epsilon(1e-12));
}

TEST_CASE("interval invariants") {
  CHECK_THROWS_AS(RationalInterval(Rational(1), Rational(0)), domain_error);
  RationalInterval i(Rational(1, 3), Rational(1, 2));
  CHECK(i.width() == Rational(1, 6));
  CHECK(i.midpoint() == Rational(5, 12));
  CHECK(i.contains(Rational(2, 5)));
  CHECK(!i.contains(Rational(2, 3)));
}

TEST_CASE("certified evaluation is safe under concurrent use") {
  // Pure exact kernels running on several threads must agree bitwise with
  // the single-threaded values.
  std::vector<std::thread> workers;
  std::array<bool, 4> ok{};
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([t, &ok] {
      bool good = true;
      for (int i = 0; i < 50; ++i) {
        good = good && qpi2_sign({Rational(2, 3), Rational(-4)}) == Sign::positive;
        good = good && pi2_enclosure(Rational(1, 1000000)).contains(kPi2Reference);
        good = good && harmonic2(40 + t) == harmonic2(40 + t);
      }
      ok[static_cast<std::size_t>(t)] = good;
    });
  }
  for (auto& w : workers) w.join();
  for (bool good : ok) CHECK(good);
}

TEST_CASE("pi2 digits configuration") {
  CHECK(pi2_digits() == 40);
  set_pi2_digits(50);
  CHECK(pi2_digits() == 50);
  set_pi2_digits(40);
  CHECK_THROWS_AS(set_pi2_digits(0), domain_error);
  CHECK_THROWS_AS(set_pi2_digits(500), domain_error);
}
