#include "betamom/catalog.hpp"

#include <mutex>

namespace betamom {

namespace {

using transforms::ConstantScale;
using transforms::ShiftRight;
using transforms::SignChange;
using transforms::TransformSpec;

NamedSequenceEntry row(std::string label, std::string description, Rational c,
                       Rational a, Rational b, Rational scale,
                       TransformSpec t, std::string oeis) {
  return NamedSequenceEntry{std::move(label),    std::move(description),
                            MomentSpec(std::move(c), std::move(a), std::move(b)),
                            std::move(scale),    std::move(t),
                            std::move(oeis),     {}};
}

Rational R(long n, long d = 1) { return Rational(n, d); }

std::vector<Rational> ones(std::initializer_list<long> vals) {
  std::vector<Rational> out;
  for (long v : vals) out.emplace_back(v);
  return out;
}

std::vector<NamedSequenceEntry> build() {
  std::vector<NamedSequenceEntry> rows;
  const TransformSpec id{};

  // -- moment families at c = 0 --------------------------------------------
  rows.push_back(row("pocz-a", "central binomial coefficients",
                     R(0), R(1, 2), R(1, 2), R(1), id, "A000984"));
  rows.push_back(row("pocz-b", "Catalan numbers",
                     R(0), R(1, 2), R(3, 2), R(1), id, "A000108"));
  rows.push_back(row("pocz-c", "binomial(2n+1, n+1)",
                     R(0), R(3, 2), R(1, 2), R(1), id, "A001700"));
  rows.push_back(row("pocz-d", "one third of the super ballot numbers",
                     R(0), R(1, 2), R(5, 2), R(1),
                     TransformSpec{{ConstantScale{R(3)}}}, "A007054"));
  rows.push_back(row("pocz-e", "Catalan numbers from n = 1 on",
                     R(0), R(3, 2), R(3, 2), R(1),
                     TransformSpec{{ShiftRight{ones({1})}}}, "A000108"));
  rows.push_back(row("pocz-f", "A001700 shifted, divided by 3",
                     R(0), R(5, 2), R(1, 2), R(1),
                     TransformSpec{{ConstantScale{R(3)}, ShiftRight{ones({1})}}},
                     "A001700"));
  rows.push_back(row("pocz-g", "super ballot family 60(2n)!/(n!(n+3)!), over 10",
                     R(0), R(1, 2), R(7, 2), R(1),
                     TransformSpec{{ConstantScale{R(10)}}}, "A007272"));
  rows.push_back(row("pocz-h", "super ballot numbers shifted, halved",
                     R(0), R(3, 2), R(5, 2), R(1),
                     TransformSpec{{ConstantScale{R(2)}, ShiftRight{ones({3})}}},
                     "A007054"));
  rows.push_back(row("pocz-i", "Catalan numbers from n = 2 on, halved",
                     R(0), R(5, 2), R(3, 2), R(1),
                     TransformSpec{{ConstantScale{R(2)}, ShiftRight{ones({1, 1})}}},
                     "A000108"));
  rows.push_back(row("pocz-j", "A001700 from n = 2 on, over 10",
                     R(0), R(7, 2), R(1, 2), R(1),
                     TransformSpec{{ConstantScale{R(10)}, ShiftRight{ones({1, 3})}}},
                     "A001700"));

  // -- shifted central-binomial family (alpha = beta = 1/2) -----------------
  rows.push_back(row("bc-1", "gf 1/sqrt((1-13x)(1+3x))",
                     R(-3, 4), R(1, 2), R(1, 2), R(4), id, "A322248"));
  rows.push_back(row("bc-2", "gf 1/sqrt(1-2x-63x^2)",
                     R(-7, 4), R(1, 2), R(1, 2), R(4), id, "A098441"));
  rows.push_back(row("bc-3", "gf 1/sqrt(1-2x-15x^2)",
                     R(-3, 2), R(1, 2), R(1, 2), R(2), id, "A084605"));
  rows.push_back(row("bc-4", "duplicate listing of bc-3",
                     R(-3, 2), R(1, 2), R(1, 2), R(2), id, "A084605"));
  rows.push_back(row("bc-5", "central trinomial coefficients",
                     R(-1), R(1, 2), R(1, 2), R(1), id, "A002426"));
  rows.push_back(row("bc-6", "gf 1/sqrt(1-6x-7x^2)",
                     R(-1, 2), R(1, 2), R(1, 2), R(2), id, "A322242"));
  rows.push_back(row("bc-7", "gf 1/sqrt(1-14x-15x^2), not in OEIS",
                     R(-1, 4), R(1, 2), R(1, 2), R(4), id, ""));
  rows.push_back(row("bc-8", "gf 1/sqrt(1-18x+17x^2), not in OEIS",
                     R(1, 4), R(1, 2), R(1, 2), R(4), id, ""));
  rows.push_back(row("bc-9", "gf 1/sqrt(1-10x+9x^2)",
                     R(1, 2), R(1, 2), R(1, 2), R(2), id, "A084771"));
  rows.push_back(row("bc-10", "gf 1/sqrt(1-6x+5x^2)",
                     R(1), R(1, 2), R(1, 2), R(1), id, "A026375"));
  rows.push_back(row("bc-11", "gf 1/sqrt(1-26x+105x^2), not in OEIS",
                     R(5, 4), R(1, 2), R(1, 2), R(4), id, ""));
  rows.push_back(row("bc-12", "gf 1/sqrt(1-14x+33x^2)",
                     R(3, 2), R(1, 2), R(1, 2), R(2), id, "A248168"));
  rows.push_back(row("bc-13", "gf 1/sqrt(1-8x+12x^2)",
                     R(2), R(1, 2), R(1, 2), R(1), id, "A081671"));
  rows.push_back(row("bc-14", "gf 1/sqrt(1-18x+65x^2), not in OEIS",
                     R(5, 2), R(1, 2), R(1, 2), R(2), id, ""));

  // -- shifted Catalan family (alpha = 1/2, beta = 3/2) ----------------------
  rows.push_back(row("cat-1", "Riordan numbers",
                     R(-1), R(1, 2), R(3, 2), R(1), id, "A005043"));
  rows.push_back(row("cat-2", "Motzkin numbers",
                     R(-1), R(3, 2), R(3, 2), R(1), id, "A001006"));
  rows.push_back(row("cat-3", "gf (1-sqrt((1-7x)/(1+x)))/(4x)",
                     R(-1, 2), R(1, 2), R(3, 2), R(2), id, "A337168"));
  rows.push_back(row("cat-4", "gf (1-sqrt((1-5x)/(1+3x)))/(4x), not in OEIS",
                     R(-3, 2), R(1, 2), R(3, 2), R(2), id, ""));
  rows.push_back(row("cat-5", "A162326 without its leading 1",
                     R(1, 2), R(1, 2), R(3, 2), R(2),
                     TransformSpec{{ShiftRight{ones({1})}}}, "A162326"));
  rows.push_back(row("cat-6", "binomial transform of the Catalan numbers",
                     R(1), R(1, 2), R(3, 2), R(1), id, "A007317"));
  rows.push_back(row("cat-7", "gf (1-sqrt((1-11x)/(1-3x)))/(4x), not in OEIS",
                     R(3, 2), R(1, 2), R(3, 2), R(2), id, ""));
  rows.push_back(row("cat-8", "second binomial transform of the Catalan numbers",
                     R(2), R(1, 2), R(3, 2), R(1), id, "A064613"));

  // -- assorted Motzkin-family shifts (alpha = beta = 3/2) -------------------
  rows.push_back(row("as-1", "A002212 without its leading 1",
                     R(1), R(3, 2), R(3, 2), R(1),
                     TransformSpec{{ShiftRight{ones({1})}}}, "A002212"));
  rows.push_back(row("as-2", "gf (1-4x-sqrt(1-8x+12x^2))/(2x^2)",
                     R(2), R(3, 2), R(3, 2), R(1), id, "A005572"));
  rows.push_back(row("as-3", "gf (1-5x-sqrt(1-10x+21x^2))/(2x^2)",
                     R(3), R(3, 2), R(3, 2), R(1), id, "A182401"));
  rows.push_back(row("as-4", "A059231 without its leading 1",
                     R(1, 2), R(3, 2), R(3, 2), R(2),
                     TransformSpec{{ShiftRight{ones({1})}}}, "A059231"));

  // -- symmetric family on [-2, 2] -------------------------------------------
  rows.push_back(row("cent-a", "aerated central binomial coefficients",
                     R(-2), R(1, 2), R(1, 2), R(1), id, "A126869"));
  rows.push_back(row("cent-b", "even terms 2^n/(n+1), odd terms 0",
                     R(-2), R(1), R(1), R(1), id, ""));
  rows.push_back(row("cent-c", "aerated Catalan numbers",
                     R(-2), R(3, 2), R(3, 2), R(1), id, "A126120"));
  rows.push_back(row("cent-d", "even terms 3*2^n/((n+1)(n+3)), odd terms 0",
                     R(-2), R(2), R(2), R(1), id, ""));
  rows.push_back(row("cent-e1", "signed middle binomial coefficients",
                     R(-2), R(1, 2), R(3, 2), R(1), id, "A126930"));
  rows.push_back(row("cent-e2", "middle binomial coefficients",
                     R(-2), R(3, 2), R(1, 2), R(1), id, "A001405"));
  rows.push_back(row("cent-f1", "2^n/(n+1) even, -2^n/(n+2) odd",
                     R(-2), R(1), R(2), R(1), id, ""));
  rows.push_back(row("cent-f2", "2^n/(n+1) even, 2^n/(n+2) odd",
                     R(-2), R(2), R(1), R(1), id, ""));
  rows.push_back(row("cent-g1", "A089408 via sign change and two prepended 1s",
                     R(-2), R(3, 2), R(5, 2), R(1),
                     TransformSpec{{ConstantScale{R(2)}, SignChange{},
                                    ShiftRight{ones({1, 1})}}},
                     "A089408"));
  rows.push_back(row("cent-g2", "A089408 via two prepended 1s",
                     R(-2), R(5, 2), R(3, 2), R(1),
                     TransformSpec{{ConstantScale{R(2)},
                                    ShiftRight{ones({1, 1})}}},
                     "A089408"));

  for (auto& r : rows)
    if (r.oeis_id.empty()) r.reference_prefix = entry_terms(r, 10);
  return rows;
}

}  // namespace

const std::vector<NamedSequenceEntry>& catalog() {
  static const std::vector<NamedSequenceEntry> rows = build();
  return rows;
}

std::vector<Rational> entry_terms(const NamedSequenceEntry& e, std::size_t count) {
  std::size_t dropped = 0;
  for (const auto& atom : e.transform.atoms)
    if (const auto* sl = std::get_if<transforms::ShiftLeft>(&atom))
      dropped += sl->prefix.size();
  std::vector<Rational> terms = M_sequence(e.spec, count + dropped);
  if (!(e.scale == Rational(1))) {
    Rational p(1);
    for (auto& v : terms) {
      v *= p;
      p *= e.scale;
    }
  }
  terms = transforms::apply(e.transform, std::move(terms));
  if (terms.size() > count) terms.resize(count);
  return terms;
}

}  // namespace betamom
