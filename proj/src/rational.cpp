#include "betamom/rational.hpp"

#include <cctype>
#include <ostream>

namespace betamom {

std::optional<Rational> Rational::parse(std::string_view s) {
  auto is_int = [](std::string_view v) {
    if (!v.empty() && (v.front() == '+' || v.front() == '-')) v.remove_prefix(1);
    if (v.empty()) return false;
    for (char ch : v)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  const auto slash = s.find('/');
  std::string_view num_s = s.substr(0, slash);
  if (!is_int(num_s)) return std::nullopt;
  Int num(std::string(num_s), 10);
  if (slash == std::string_view::npos) return Rational(num);
  std::string_view den_s = s.substr(slash + 1);
  if (!is_int(den_s) || den_s.front() == '-' || den_s.front() == '+')
    return std::nullopt;
  Int den(std::string(den_s), 10);
  if (den == 0) return std::nullopt;
  return Rational(num, den);
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  const Rational base = e > 0 ? *this : reciprocal();
  unsigned long k = e > 0 ? static_cast<unsigned long>(e)
                          : static_cast<unsigned long>(-e);
  Int n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), k);
  return Rational(n, d);  // already coprime, constructor is a no-op reduce
}

Int Rational::floor() const {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return q;
}

std::string Rational::to_string() const {
  std::string s = num().get_str();
  if (!is_integer()) {
    s += '/';
    s += den().get_str();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

Rational pow2(long e) { return Rational(2).pow(e); }

}  // namespace betamom
