#include "betamom/hankel.hpp"

#include <stdexcept>

namespace betamom::hankel {

namespace {

// Bareiss fraction-free elimination; exact over integers.
Int integer_determinant(std::vector<std::vector<Int>> a) {
  const std::size_t n = a.size();
  int sign = 1;
  Int prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k] == 0) ++pivot;
      if (pivot == n) return Int(0);
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

Rational hankel_det(std::span<const Rational> seq, unsigned n, int shift) {
  const std::size_t dim = n + 1;
  // Clear denominators row by row; det scales by the product of row lcms.
  std::vector<std::vector<Int>> a(dim, std::vector<Int>(dim));
  Int scale(1);
  for (std::size_t i = 0; i < dim; ++i) {
    Int rowlcm(1);
    for (std::size_t j = 0; j < dim; ++j) {
      const Int den = seq[shift + i + j].den();
      mpz_lcm(rowlcm.get_mpz_t(), rowlcm.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t j = 0; j < dim; ++j) {
      const Rational& e = seq[shift + i + j];
      a[i][j] = e.num() * (rowlcm / e.den());
    }
    scale *= rowlcm;
  }
  return Rational(integer_determinant(std::move(a)), scale);
}

bool all_nonnegative(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (x.is_negative()) return false;
  return true;
}

bool all_positive(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (!x.is_positive()) return false;
  return true;
}

}  // namespace

std::vector<Rational> hankel_determinants(std::span<const Rational> seq,
                                          unsigned N, int shift) {
  if (shift != 0 && shift != 1)
    throw std::domain_error("hankel_determinants: shift must be 0 or 1");
  if (seq.size() < 2 * static_cast<std::size_t>(N) + 1 + shift)
    throw std::domain_error("hankel_determinants: sequence too short");
  std::vector<Rational> out;
  out.reserve(N + 1);
  for (unsigned n = 0; n <= N; ++n) out.push_back(hankel_det(seq, n, shift));
  return out;
}

HankelReport check_pm_sequence(std::span<const Rational> seq, unsigned N,
                               bool stieltjes_meaningful) {
  HankelReport r;
  r.order = N;
  r.determinants = hankel_determinants(seq, N, 0);
  r.shifted_determinants = hankel_determinants(seq, N, 1);
  r.pm_up_to_order = all_nonnegative(r.determinants);
  r.stieltjes_up_to_order = all_nonnegative(r.shifted_determinants);
  r.stieltjes_meaningful = stieltjes_meaningful;
  r.strictly_positive = all_positive(r.determinants);
  r.shifted_strictly_positive = all_positive(r.shifted_determinants);
  return r;
}

HankelReport check_pm(const MomentSpec& spec, unsigned N) {
  const std::vector<Rational> seq = M_sequence(spec, 2 * N + 2);
  return check_pm_sequence(seq, N, !spec.c.is_negative());
}

}  // namespace betamom::hankel
