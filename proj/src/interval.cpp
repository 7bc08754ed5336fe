#include "betamom/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace betamom {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(Interval o) {
  std::swap(prec_, o.prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::exact(const Rational& r, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_set_q(out.lo_, r.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_, r.raw().get_mpq_t(), MPFR_RNDU);
  return out;
}

Interval Interval::hull(const Rational& lo, const Rational& hi,
                        mpfr_prec_t prec) {
  if (lo > hi) throw std::domain_error("Interval::hull: lo > hi");
  Interval out(prec);
  mpfr_set_q(out.lo_, lo.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_, hi.raw().get_mpq_t(), MPFR_RNDU);
  return out;
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_const_pi(out.lo_, MPFR_RNDD);
  mpfr_const_pi(out.hi_, MPFR_RNDU);
  return out;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval out(std::max(a.prec_, b.prec_));
  mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval out(std::max(a.prec_, b.prec_));
  mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return out;
}

Interval operator*(const Interval& a, const Interval& b) {
  Interval out(std::max(a.prec_, b.prec_));
  mpfr_t t;
  mpfr_init2(t, out.prec_);
  // lower: min of the four products rounded down
  mpfr_mul(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  for (auto [x, y] : {std::pair{a.lo_, b.hi_}, {a.hi_, b.lo_}, {a.hi_, b.hi_}}) {
    mpfr_mul(t, x, y, MPFR_RNDD);
    mpfr_min(out.lo_, out.lo_, t, MPFR_RNDD);
  }
  // upper: max of the four products rounded up
  mpfr_mul(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  for (auto [x, y] : {std::pair{a.lo_, b.lo_}, {a.lo_, b.hi_}, {a.hi_, b.lo_}}) {
    mpfr_mul(t, x, y, MPFR_RNDU);
    mpfr_max(out.hi_, out.hi_, t, MPFR_RNDU);
  }
  mpfr_clear(t);
  return out;
}

Interval Interval::reciprocal() const {
  if (mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0)
    throw std::domain_error("Interval::reciprocal: interval contains zero");
  Interval out(prec_);
  mpfr_ui_div(out.lo_, 1, hi_, MPFR_RNDD);
  mpfr_ui_div(out.hi_, 1, lo_, MPFR_RNDU);
  return out;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(lo_) < 0)
    throw std::domain_error("Interval::sqrt: negative lower end");
  Interval out(prec_);
  mpfr_sqrt(out.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(out.hi_, hi_, MPFR_RNDU);
  return out;
}

bool Interval::contains(const Rational& r) const {
  return mpfr_cmp_q(lo_, r.raw().get_mpq_t()) <= 0 &&
         mpfr_cmp_q(hi_, r.raw().get_mpq_t()) >= 0;
}

namespace {

Rational mpfr_to_rational(const mpfr_t x) {
  if (mpfr_zero_p(x)) return Rational(0);
  if (!mpfr_number_p(x))
    throw std::domain_error("Interval: endpoint is not finite");
  Int z;
  const mpfr_exp_t e = mpfr_get_z_2exp(z.get_mpz_t(), x);
  Rational r(z);
  if (e >= 0) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r * Rational(p);
  }
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(-e));
  return r / Rational(p);
}

}  // namespace

Rational Interval::lower() const { return mpfr_to_rational(lo_); }
Rational Interval::upper() const { return mpfr_to_rational(hi_); }

}  // namespace betamom
