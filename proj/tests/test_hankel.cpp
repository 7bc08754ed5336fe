#include <doctest.h>

#include "betamom/catalog.hpp"
#include "betamom/combinatorics.hpp"
#include "betamom/hankel.hpp"
#include "betamom/integrality.hpp"

using namespace betamom;
using namespace betamom::hankel;

namespace {
Rational R(long n, long d = 1) { return Rational(n, d); }

// test-only oracle: plain rational Gaussian elimination
Rational naive_det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k].is_zero()) ++p;
    if (p == n) return R(0);
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

Rational naive_hankel_det(const std::vector<Rational>& seq, unsigned n,
                          int shift) {
  std::vector<std::vector<Rational>> m(n + 1, std::vector<Rational>(n + 1));
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = 0; j <= n; ++j) m[i][j] = seq[shift + i + j];
  return naive_det(std::move(m));
}
}  // namespace

TEST_CASE("catalan hankel determinants are all 1") {
  std::vector<Rational> cat;
  for (unsigned long n = 0; n < 18; ++n) cat.emplace_back(catalan(n));
  for (const Rational& d : hankel_determinants(cat, 8, 0)) CHECK(d == R(1));
  for (const Rational& d : hankel_determinants(cat, 8, 1)) CHECK(d == R(1));
}

TEST_CASE("agreement with the naive rational determinant oracle") {
  const auto seq = M_sequence(MomentSpec(R(-1, 3), R(3, 2), R(5, 2)), 12);
  for (int shift : {0, 1}) {
    const auto dets = hankel_determinants(seq, 4, shift);
    for (unsigned n = 0; n <= 4; ++n)
      CHECK(dets[n] == naive_hankel_det(seq, n, shift));
  }
}

TEST_CASE("rank-one and non-moment sequences") {
  const std::vector<Rational> ones(9, R(1));
  const auto dets = hankel_determinants(ones, 2, 0);
  CHECK(dets[0] == R(1));
  CHECK(dets[1] == R(0));
  CHECK(dets[2] == R(0));

  const std::vector<Rational> bad{R(1), R(2), R(1), R(0), R(0)};
  const auto rep = check_pm_sequence(bad, 1, false);
  CHECK(!rep.pm_up_to_order);
  CHECK(rep.determinants[1] == R(-3));
}

TEST_CASE("sequence length preconditions") {
  const std::vector<Rational> seq(5, R(1));
  CHECK_THROWS_AS(hankel_determinants(seq, 2, 1), std::domain_error);
  CHECK_THROWS_AS(hankel_determinants(seq, 3, 0), std::domain_error);
  CHECK_NOTHROW(hankel_determinants(seq, 2, 0));
}

TEST_CASE("check_pm on genuine distributions") {
  const auto r1 = check_pm(MomentSpec(R(0), R(1, 2), R(3, 2)), 5);
  CHECK(r1.pm_up_to_order);
  CHECK(r1.stieltjes_up_to_order);
  CHECK(r1.stieltjes_meaningful);

  const auto r2 = check_pm(MomentSpec(R(-2), R(3, 2), R(3, 2)), 5);
  CHECK(r2.pm_up_to_order);
  CHECK(!r2.stieltjes_meaningful);

  const auto r3 = check_pm(MomentSpec(R(0), R(1, 2), R(1, 2)), 4);
  for (const auto& d : r3.shifted_determinants) CHECK(d.is_positive());
}

TEST_CASE("full catalog passes the order-8 positivity suite") {
  for (const auto& entry : catalog()) {
    const auto rep = check_pm(entry.spec, 8);
    CHECK(rep.strictly_positive);
    if (rep.stieltjes_meaningful) CHECK(rep.shifted_strictly_positive);
  }
}

TEST_CASE("the cleared integer sequence is not a pm sequence") {
  // 3^n 3^nu_3(n!) m_n(1/3, 2/3): integers, but fails positivity early
  const BetaParams p(R(1, 3), R(2, 3));
  std::vector<Rational> seq;
  for (unsigned long n = 0; n <= 14; ++n) {
    seq.push_back(Rational(integrality::multiplier(n, 3)) * m(n, p));
    CHECK(seq.back().is_integer());
  }
  const auto dets = hankel_determinants(seq, 6, 0);
  unsigned first_fail = 99;
  for (unsigned n = 0; n <= 6; ++n)
    if (dets[n].is_negative()) {
      first_fail = n;
      break;
    }
  CHECK(first_fail <= 6);
  CHECK(first_fail == 2);  // recorded from this oracle run
}
