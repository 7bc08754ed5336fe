#include <doctest.h>

#include "betamom/combinatorics.hpp"

using namespace betamom;

TEST_CASE("rising and falling factorials") {
  CHECK(rising_factorial(Rational(1, 2), 3) == Rational(15, 8));
  CHECK(rising_factorial(Rational(-7, 3), 0) == Rational(1));
  CHECK(falling_factorial(Rational(1, 2), 2) == Rational(-1, 4));
  CHECK(falling_factorial(Rational(5, 2), 2) == Rational(15, 4));

  // rising(3/2,2) in the factorial closed form at i = 1, n = 2
  const Rational closed = Rational(factorial(6)) * Rational(factorial(1)) /
                          (Rational(16) * Rational(factorial(3)) *
                           Rational(factorial(2)));
  CHECK(rising_factorial(Rational(3, 2), 2) == closed);
}

TEST_CASE("reflection between rising and falling") {
  CHECK(falling_factorial(Rational(-1, 2), 3) ==
        -rising_factorial(Rational(1, 2), 3));
  const Rational xs[] = {Rational(0), Rational(2, 3), Rational(-7, 5),
                         Rational(9, 2), Rational(-4)};
  for (const auto& x : xs) {
    for (unsigned long n = 0; n <= 30; ++n) {
      Rational sign = n % 2 ? Rational(-1) : Rational(1);
      CHECK(falling_factorial(x, n) == sign * rising_factorial(-x, n));
      CHECK(rising_factorial(x, n) == sign * falling_factorial(-x, n));
    }
  }
}

TEST_CASE("rising factorial of positive integers") {
  for (long k = 1; k <= 6; ++k)
    for (unsigned long n = 0; n <= 8; ++n) {
      const Rational expect =
          Rational(factorial(static_cast<unsigned long>(k) + n - 1)) /
          Rational(factorial(static_cast<unsigned long>(k) - 1));
      CHECK(rising_factorial(Rational(k), n) == expect);
    }
}

TEST_CASE("binomial, catalan, central binomial") {
  CHECK(binomial(5, -1) == Int(0));
  CHECK(binomial(5, 6) == Int(0));
  CHECK(binomial(5, 2) == Int(10));
  const long cat[] = {1, 1, 2, 5, 14, 42, 132};
  const long cb[] = {1, 2, 6, 20, 70, 252};
  for (unsigned long n = 0; n < 7; ++n) CHECK(catalan(n) == Int(cat[n]));
  for (unsigned long n = 0; n < 6; ++n) CHECK(central_binomial(n) == Int(cb[n]));
  CHECK(catalan_ext(-1) == Rational(-1, 2));
  CHECK(catalan_ext(4) == Rational(14));
}

TEST_CASE("legendre valuation") {
  CHECK(legendre_valuation(10, 3) == 4);
  CHECK(legendre_valuation(0, 5) == 0);
  CHECK(legendre_valuation(100, 2) == 97);
  CHECK_THROWS_AS(legendre_valuation(5, 1), std::domain_error);

  // brute-force multiplicity of p in n!
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
    for (unsigned long n = 0; n <= 200; ++n) {
      Int f = factorial(n);
      unsigned long mult = 0;
      while (f != 0 && mpz_divisible_ui_p(f.get_mpz_t(), p)) {
        mpz_divexact_ui(f.get_mpz_t(), f.get_mpz_t(), p);
        ++mult;
      }
      CHECK(legendre_valuation(n, p) == mult);
    }
  }
}

TEST_CASE("prime factorization") {
  const auto f = factorize(360);
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0] == std::pair{2ul, 3u});
  CHECK(f.factors[1] == std::pair{3ul, 2u});
  CHECK(f.factors[2] == std::pair{5ul, 1u});
  for (unsigned long n = 2; n <= 300; ++n) CHECK(factorize(n).reconstruct() == n);
  CHECK_THROWS_AS(factorize(1), std::domain_error);
}
