#include <doctest.h>

#include "betamom/catalog.hpp"
#include "betamom/combinatorics.hpp"
#include "betamom/moments.hpp"
#include "betamom/transforms.hpp"

using namespace betamom;
using namespace betamom::transforms;

namespace {
Rational R(long n, long d = 1) { return Rational(n, d); }

std::vector<Rational> rat(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}
}  // namespace

TEST_CASE("atom application") {
  const auto cat = rat({1, 1, 2, 5, 14, 42, 132, 429, 1430});
  const auto bt = transforms::apply(TransformSpec{{BinomialTransform{}}}, cat);
  CHECK(bt == rat({1, 2, 5, 15, 51, 188, 731, 2950, 12235}));

  CHECK(transforms::apply(TransformSpec{{SignChange{}}}, rat({1, 1, 3, 6, 15})) ==
        rat({1, -1, 3, -6, 15}));

  CHECK(transforms::apply(TransformSpec{{GeometricScale{R(2)}}}, rat({1, 1, 1})) ==
        rat({1, 2, 4}));
  CHECK(transforms::apply(TransformSpec{{ConstantScale{R(3)}}}, rat({1, 2})) == rat({3, 6}));

  CHECK(transforms::apply(TransformSpec{{ShiftLeft{rat({1, 1})}}}, cat) ==
        rat({2, 5, 14, 42, 132, 429, 1430}));
  CHECK_THROWS_AS(transforms::apply(TransformSpec{{ShiftLeft{rat({2})}}}, cat),
                  std::domain_error);
  CHECK_THROWS_AS(transforms::apply(TransformSpec{{ShiftLeft{rat({1, 1})}}}, rat({1})),
                  std::domain_error);
  CHECK(transforms::apply(TransformSpec{{ShiftRight{rat({7, 8})}}}, rat({1})) ==
        rat({7, 8, 1}));
}

TEST_CASE("binomial round-trip on random-ish rational sequences") {
  std::vector<Rational> seq;
  for (long i = 0; i < 20; ++i)
    seq.push_back(Rational(3 * i * i - 7 * i + 1, (i % 5) + 1));
  const TransformSpec bt{{BinomialTransform{}}};
  CHECK(transforms::apply(inverse(bt), transforms::apply(bt, seq)) == seq);
  CHECK(transforms::apply(bt, transforms::apply(inverse(bt), seq)) == seq);
}

TEST_CASE("inverse of composite specs") {
  const TransformSpec t{{GeometricScale{R(4)}, ShiftLeft{rat({1, 12})},
                         BinomialTransform{}, ConstantScale{R(2, 7)}}};
  const auto inv = inverse(t);
  std::vector<Rational> seq = rat({1, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(transforms::apply(inv, transforms::apply(t, seq)) == seq);
  // single atoms as named in the text
  CHECK(std::holds_alternative<InverseBinomialTransform>(
      inverse(TransformSpec{{BinomialTransform{}}}).atoms[0]));
  const auto gs = inverse(TransformSpec{{GeometricScale{R(4)}}});
  CHECK(std::get<GeometricScale>(gs.atoms[0]).q == R(1, 4));
  const auto sr = inverse(TransformSpec{{ShiftRight{rat({1, 3})}}});
  CHECK(std::get<ShiftLeft>(sr.atoms[0]).prefix == rat({1, 3}));
}

TEST_CASE("scaled binomial relation between basepoints") {
  // {M_n(b,..)/(b-c)^n} is the binomial transform of {M_n(c,..)/(b-c)^n}
  const std::pair<long, long> pairs[] = {{1, 0}, {0, -1}, {2, 1}};
  for (const auto& [b, c] : pairs)
    for (long ta = 1; ta <= 3; ta += 2)
      for (long tb = 1; tb <= 3; tb += 2) {
        const BetaParams params(Rational(ta, 2), Rational(tb, 2));
        const Rational d(b - c);
        auto left = M_sequence(MomentSpec(Rational(b), params), 21);
        auto right = M_sequence(MomentSpec(Rational(c), params), 21);
        for (unsigned long n = 0; n <= 20; ++n) {
          const Rational dn = d.pow(static_cast<long>(n));
          left[n] /= dn;
          right[n] /= dn;
        }
        CHECK(transforms::apply(TransformSpec{{BinomialTransform{}}}, right) == left);
      }
}

TEST_CASE("apply length bookkeeping") {
  const auto seq = rat({1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(transforms::apply(TransformSpec{{BinomialTransform{}}}, seq).size() == 8);
  CHECK(transforms::apply(TransformSpec{{ShiftLeft{rat({1})}}}, seq).size() == 7);
  CHECK(transforms::apply(TransformSpec{{ShiftRight{rat({0, 0})}}}, seq).size() == 10);
}

TEST_CASE("matcher finds the paper's identifications") {
  // l-s(1): M_n(0,3/2,3/2) against the Catalan numbers
  const auto a = M_sequence(MomentSpec(R(0), R(3, 2), R(3, 2)), 12);
  std::vector<Rational> cat;
  for (unsigned long n = 0; n < 13; ++n) cat.emplace_back(catalan(n));
  const auto found = match(a, cat);
  REQUIRE(found.has_value());
  const auto out = transforms::apply(*found, cat);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(out[i] == a[i]);
  REQUIRE(found->atoms.size() == 1);
  CHECK(std::get<ShiftLeft>(found->atoms[0]).prefix == rat({1}));

  // constant scale: M_n(0,1/2,5/2) = (1/3) A007054
  const auto b = M_sequence(MomentSpec(R(0), R(1, 2), R(5, 2)), 12);
  std::vector<Rational> a7054;
  for (unsigned long n = 0; n < 12; ++n)
    a7054.push_back(R(6) * Rational(factorial(2 * n)) /
                    (Rational(factorial(n)) * Rational(factorial(n + 2))));
  const auto found2 = match(b, a7054);
  REQUIRE(found2.has_value());
  REQUIRE(found2->atoms.size() == 1);
  CHECK(std::get<ConstantScale>(found2->atoms[0]).s == R(1, 3));

  // identity
  const auto found3 = match(cat, cat);
  REQUIRE(found3.has_value());
  CHECK(found3->empty());

  // no relation
  CHECK(!match(rat({1, 2, 4, 8, 16, 32, 64, 128}),
               rat({1, 1, 2, 3, 5, 8, 13, 21}))
             .has_value());
}

TEST_CASE("matcher handles binomial-transform layers") {
  const auto cat = M_sequence(MomentSpec(R(0), R(1, 2), R(3, 2)), 12);
  const auto bt = M_sequence(MomentSpec(R(1), R(1, 2), R(3, 2)), 12);
  const auto found = match(bt, cat);
  REQUIRE(found.has_value());
  CHECK(transforms::apply(*found, cat) == bt);
  CHECK(std::holds_alternative<BinomialTransform>(found->atoms[0]));
}

TEST_CASE("catalog rows reproduce their reference sequences") {
  // cent-g1: 2 S_n(3/2,5/2) -> sign change -> two prepended 1s
  for (const auto& entry : catalog()) {
    if (entry.label != "cent-g1") continue;
    const auto terms = entry_terms(entry, 9);
    CHECK(terms == rat({1, 1, 2, 1, 2, 2, 4, 5, 10}));
  }
}

TEST_CASE("to_string names the operations") {
  const TransformSpec t{{ShiftLeft{rat({1})}, SignChange{}}};
  CHECK(to_string(t) == "l-s(1) . sc");
  CHECK(to_string(TransformSpec{}) == "identity");
}
