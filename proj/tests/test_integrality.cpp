#include <doctest.h>

#include <numeric>

#include "betamom/combinatorics.hpp"
#include "betamom/integrality.hpp"
#include "betamom/moments.hpp"
#include "betamom/oeis.hpp"

using namespace betamom;
using namespace betamom::integrality;

namespace {
Rational R(long n, long d = 1) { return Rational(n, d); }
}  // namespace

TEST_CASE("multiplier values") {
  CHECK(multiplier(3, 3) == Int(81));
  CHECK(multiplier(2, 3) == Int(9));
  CHECK(multiplier(4, 6) == Int(1296) * Int(8) * Int(3));
  CHECK_THROWS_AS(multiplier(3, 1), std::domain_error);
}

TEST_CASE("check_integrality basics") {
  const auto rep = check_integrality(1, 3, 3);
  REQUIRE(rep.rows.size() == 4);
  CHECK(rep.all_integer);
  CHECK(rep.rows[1].product == R(1));
  CHECK(rep.rows[2].product == R(2));
  CHECK(rep.rows[3].product == R(14));

  CHECK(check_integrality(1, 8, 10).all_integer);
  CHECK(check_integrality(1, 2, 40).all_integer);
  CHECK_THROWS_AS(check_integrality(2, 4, 5), std::domain_error);
  CHECK_THROWS_AS(check_integrality(0, 3, 5), std::domain_error);
  CHECK_THROWS_AS(check_integrality(3, 3, 5), std::domain_error);
}

TEST_CASE("integrality holds for every coprime pair with r <= 12") {
  for (unsigned long r = 2; r <= 12; ++r)
    for (unsigned long p = 1; p < r; ++p) {
      if (std::gcd(p, r) != 1) continue;
      const auto rep = check_integrality(p, r, 100);
      CAPTURE(p);
      CAPTURE(r);
      CHECK(rep.all_integer);
    }
}

TEST_CASE("cleared product cross-check") {
  // r^n rising(p/r, n) = prod_{j<n} (jr+p), then the d^nu factors clear n!
  for (const auto& [p, r] : std::vector<std::pair<long, long>>{
           {1, 3}, {1, 8}, {3, 8}, {5, 12}}) {
    for (unsigned long n = 0; n <= 100; n += 9) {
      Int prod(1);
      for (unsigned long j = 0; j < n; ++j)
        prod *= Int(static_cast<long>(j) * r + p);
      const Rational lhs = Rational(r).pow(static_cast<long>(n)) *
                           rising_factorial(Rational(p, r), n);
      CHECK(lhs == Rational(prod));
      Int nu_part(1);
      for (const auto& [d, e] : factorize(static_cast<unsigned long>(r)).factors) {
        Int f;
        mpz_ui_pow_ui(f.get_mpz_t(), d, legendre_valuation(n, d));
        nu_part *= f;
      }
      const Rational direct = Rational(Int(nu_part * prod)) / Rational(factorial(n));
      const Rational via_multiplier =
          Rational(multiplier(n, static_cast<unsigned long>(r))) *
          m(n, BetaParams(Rational(p, r), Rational(r - p, r)));
      CHECK(direct == via_multiplier);
    }
  }
}

TEST_CASE("cleared products reproduce their cataloged integer sequences") {
  oeis::OeisClient client;
  for (const auto& [p, r, id] :
       std::vector<std::tuple<unsigned long, unsigned long, std::string>>{
           {1, 3, "A004117"}, {1, 8, "A181161"}}) {
    const auto fixture = client.fetch(id);
    const auto rep = check_integrality(p, r, 30);
    for (unsigned long n = 0; n <= 30; ++n) {
      REQUIRE(rep.rows[n].product.is_integer());
      CHECK(rep.rows[n].product.num() == fixture.terms[n]);
    }
  }
}

TEST_CASE("minimality probe for p/r = 1/3") {
  // removing one factor of 3 must break integrality somewhere by n = 50
  bool broke = false;
  const BetaParams params(R(1, 3), R(2, 3));
  for (unsigned long n = 1; n <= 50 && !broke; ++n) {
    const Rational reduced =
        Rational(multiplier(n, 3)) / R(3) * m(n, params);
    if (!reduced.is_integer()) broke = true;
  }
  CHECK(broke);
}

TEST_CASE("demo_nonintegral reproduces the quoted values") {
  const auto vals = demo_nonintegral(9);
  CHECK(vals[0] == R(1));
  CHECK(vals[1] == R(8, 7));
  CHECK(vals[2] == R(3));
  CHECK(vals[3] == R(20, 3));
  CHECK(vals[4] == R(26, 3));
  // a prime outside {2,3} shows up in a denominator
  CHECK(vals[1].den() == Int(7));
  bool saw_noninteger = false;
  for (const auto& v : vals) saw_noninteger = saw_noninteger || !v.is_integer();
  CHECK(saw_noninteger);
}
