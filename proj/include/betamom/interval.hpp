#pragma once

#include <mpfr.h>

#include "betamom/rational.hpp"

namespace betamom {

/// Closed interval with mpfr endpoints, all operations outward rounded
/// (RNDD for the lower end, RNDU for the upper).
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 256);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(Interval o);
  ~Interval();

  static Interval exact(const Rational& r, mpfr_prec_t prec = 256);
  static Interval hull(const Rational& lo, const Rational& hi,
                       mpfr_prec_t prec = 256);
  static Interval pi(mpfr_prec_t prec = 256);

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  Interval reciprocal() const;  // requires 0 outside the interval
  Interval sqrt() const;        // requires lower end >= 0

  bool contains(const Rational& r) const;

  /// Exact rational endpoints (mpfr values are dyadic).
  Rational lower() const;
  Rational upper() const;
  Rational width() const { return upper() - lower(); }

  mpfr_prec_t precision() const { return prec_; }

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_, hi_;
};

}  // namespace betamom
