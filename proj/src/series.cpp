#include "betamom/series.hpp"

#include <algorithm>
#include <map>

#include "betamom/combinatorics.hpp"

namespace betamom::series {

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::domain_error("PowerSeries: needs a constant term");
}

PowerSeries PowerSeries::constant(const Rational& c, std::size_t order) {
  std::vector<Rational> v(order + 1, Rational(0));
  v[0] = c;
  return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  if (order > this->order())
    throw std::domain_error("truncated: cannot extend a series");
  std::vector<Rational> v(c_.begin(),
                          c_.begin() + static_cast<std::ptrdiff_t>(order + 1));
  return PowerSeries(std::move(v));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> v(n + 1);
  for (std::size_t k = 0; k <= n; ++k) v[k] = a[k] + b[k];
  return PowerSeries(std::move(v));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  return a + (-b);
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> v(n + 1, Rational(0));
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) v[i + j] += a[i] * b[j];
  }
  return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::operator*(const Rational& s) const {
  std::vector<Rational> v(c_);
  for (auto& x : v) x *= s;
  return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::operator-() const { return *this * Rational(-1); }

PowerSeries reciprocal(const PowerSeries& a) {
  if (a[0].is_zero())
    throw std::domain_error("reciprocal: zero constant term");
  const std::size_t n = a.order();
  std::vector<Rational> b(n + 1, Rational(0));
  const Rational inv0 = a[0].reciprocal();
  b[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc(0);
    for (std::size_t j = 1; j <= k; ++j) acc += a[j] * b[k - j];
    b[k] = -acc * inv0;
  }
  return PowerSeries(std::move(b));
}

PowerSeries sqrt(const PowerSeries& a) {
  if (!(a[0] == Rational(1)))
    throw std::domain_error("sqrt: constant term must be 1");
  const std::size_t n = a.order();
  std::vector<Rational> y{Rational(1)};
  std::size_t cur = 0;
  while (cur < n) {
    const std::size_t next = std::min(2 * cur + 1, n);
    y.resize(next + 1, Rational(0));  // padding corrected by the Newton step
    const PowerSeries yn(y);
    const PowerSeries upd =
        (yn + a.truncated(next) * reciprocal(yn)) * Rational(1, 2);
    y = upd.coefficients();
    cur = next;
  }
  return PowerSeries(std::move(y));
}

PowerSeries linear_binomial_pow(const Rational& e, const Rational& a,
                                std::size_t order) {
  std::vector<Rational> v(order + 1);
  Rational coef(1);  // binom(e, j) a^j, updated incrementally
  for (std::size_t j = 0; j <= order; ++j) {
    v[j] = coef;
    coef *= (e - Rational(static_cast<long>(j))) * a /
            Rational(static_cast<long>(j) + 1);
  }
  return PowerSeries(std::move(v));
}

PowerSeries divide_by_power(const PowerSeries& a, std::size_t k) {
  if (a.order() < k)
    throw std::domain_error("divide_by_power: order too small");
  for (std::size_t i = 0; i < k; ++i)
    if (!a[i].is_zero())
      throw CancellationError(
          "divide_by_power: nonzero coefficient of x^" + std::to_string(i));
  std::vector<Rational> v(a.coefficients().begin() +
                              static_cast<std::ptrdiff_t>(k),
                          a.coefficients().end());
  return PowerSeries(std::move(v));
}

PowerSeries substitute_shift(const PowerSeries& g, const Rational& c) {
  const std::size_t n = g.order();
  std::vector<Rational> lin(n + 1, Rational(0));
  lin[0] = Rational(1);
  if (n >= 1) lin[1] = -c;
  const PowerSeries u = reciprocal(PowerSeries(lin));  // 1/(1-cx)
  std::vector<Rational> xu_c(n + 1, Rational(0));
  for (std::size_t k = 1; k <= n; ++k) xu_c[k] = u[k - 1];
  const PowerSeries xu(std::move(xu_c));  // x/(1-cx)
  PowerSeries term = u;                   // x^j u^{j+1} for j = 0
  PowerSeries acc = term * g[0];
  for (std::size_t j = 1; j <= n; ++j) {
    term = term * xu;
    acc = acc + term * g[j];
  }
  return acc;
}

PowerSeries gf_param_shift(const PowerSeries& g, const BetaParams& p,
                           ParamShift dir) {
  const Rational s = p.alpha + p.beta;
  if (dir == ParamShift::alpha_up) {
    const PowerSeries num = g - PowerSeries::constant(Rational(1), g.order());
    return divide_by_power(num, 1) * (s / p.alpha);
  }
  std::vector<Rational> one_minus_x(g.order() + 1, Rational(0));
  one_minus_x[0] = Rational(1);
  if (g.order() >= 1) one_minus_x[1] = Rational(-1);
  const PowerSeries num =
      PowerSeries::constant(Rational(1), g.order()) - PowerSeries(one_minus_x) * g;
  return divide_by_power(num, 1) * (s / p.beta);
}

PowerSeries gf_of_moments(const MomentSpec& spec, std::size_t order) {
  return PowerSeries(M_sequence(spec, order + 1));
}

PowerSeries gf_of_moments(const BetaParams& params, std::size_t order) {
  return PowerSeries(m_sequence(params, order + 1));
}

PowerSeries gen_i_gf(const Rational& alpha, long s, std::size_t order) {
  if (!alpha.is_positive() || alpha >= Rational(s))
    throw std::domain_error("gen_i_gf: need 0 < alpha < alpha+beta");
  const Rational a1 = Rational(1) - alpha;
  const Rational a2 = Rational(2) - alpha;
  const Rational a3 = Rational(3) - alpha;
  switch (s) {
    case 1:
      return linear_binomial_pow(-alpha, Rational(-1), order);
    case 2: {
      if (a1.is_zero()) throw std::domain_error("gen_i_gf: alpha = 1 degenerate");
      const PowerSeries num =
          PowerSeries::constant(Rational(1), order + 1) -
          linear_binomial_pow(a1, Rational(-1), order + 1);
      return divide_by_power(num, 1) * a1.reciprocal();
    }
    case 3: {
      if (a1.is_zero() || a2.is_zero())
        throw std::domain_error("gen_i_gf: integer alpha degenerate");
      std::vector<Rational> polyc(order + 3, Rational(0));
      polyc[0] = Rational(-1);
      polyc[1] = a2;
      const PowerSeries num =
          linear_binomial_pow(a2, Rational(-1), order + 2) + PowerSeries(polyc);
      return divide_by_power(num, 2) * (Rational(2) / (a1 * a2));
    }
    case 4: {
      if (a1.is_zero() || a2.is_zero() || a3.is_zero())
        throw std::domain_error("gen_i_gf: integer alpha degenerate");
      std::vector<Rational> polyc(order + 4, Rational(0));
      polyc[0] = Rational(-6);
      polyc[1] = Rational(6) * a3;
      polyc[2] = Rational(-3) * a3 * a2;
      const PowerSeries num =
          linear_binomial_pow(a3, Rational(-1), order + 3) * Rational(6) +
          PowerSeries(polyc);
      return divide_by_power(num, 3) * (Rational(-1) / (a1 * a2 * a3));
    }
    default:
      throw std::domain_error("gen_i_gf: alpha+beta must be 1..4");
  }
}

namespace {

PowerSeries poly(std::vector<Rational> low, std::size_t order) {
  low.resize(order + 1, Rational(0));
  return PowerSeries(std::move(low));
}

PowerSeries one_minus(const Rational& a, std::size_t order) {
  return poly({Rational(1), -a}, order);
}

PowerSeries sqrt_1m4x(std::size_t order) {
  return sqrt(one_minus(Rational(4), order));
}

// gf of q^n M_n(c,1/2,1/2): 1/sqrt((1-cqx)(1-(c+4)qx))
PowerSeries bc_gf(const Rational& c, const Rational& q, std::size_t order) {
  return reciprocal(
      sqrt(one_minus(c * q, order) * one_minus((c + Rational(4)) * q, order)));
}

// gf of q^n M_n(c,1/2,3/2): (1 - sqrt((1-(c+4)qx)/(1-cqx)))/(2qx)
PowerSeries cat_gf(const Rational& c, const Rational& q, std::size_t order) {
  const PowerSeries rad =
      sqrt(one_minus((c + Rational(4)) * q, order + 1) *
           reciprocal(one_minus(c * q, order + 1)));
  const PowerSeries num = PowerSeries::constant(Rational(1), order + 1) - rad;
  return divide_by_power(num, 1) * (Rational(1) / (Rational(2) * q));
}

// gf of q^n M_n(c,3/2,3/2): (1-(c+2)qx - sqrt((1-cqx)(1-(c+4)qx)))/(2 q^2 x^2)
PowerSeries as_gf(const Rational& c, const Rational& q, std::size_t order) {
  const PowerSeries rad = sqrt(one_minus(c * q, order + 2) *
                               one_minus((c + Rational(4)) * q, order + 2));
  const PowerSeries num =
      poly({Rational(1), -(c + Rational(2)) * q}, order + 2) - rad;
  return divide_by_power(num, 2) * (Rational(1) / (Rational(2) * q * q));
}

PowerSeries build_fixed(const std::string& id, std::size_t N) {
  const Rational h(1, 2);
  if (id == "G-a") return reciprocal(sqrt_1m4x(N));
  if (id == "G-b") {
    const PowerSeries s = sqrt_1m4x(N + 1);
    const PowerSeries num = PowerSeries::constant(Rational(1), N + 1) - s;
    return divide_by_power(num, 1) * reciprocal(s.truncated(N)) * h;
  }
  if (id == "G-c") {
    const PowerSeries num =
        PowerSeries::constant(Rational(1), N + 1) - sqrt_1m4x(N + 1);
    return divide_by_power(num, 1) * h;
  }
  if (id == "G-d") {
    const PowerSeries num =
        linear_binomial_pow(Rational(3, 2), Rational(-4), N + 2) +
        poly({Rational(-1), Rational(6)}, N + 2);
    return divide_by_power(num, 2) * Rational(1, 6);
  }
  if (id == "G-e") {
    const PowerSeries num =
        poly({Rational(1), Rational(-2)}, N + 2) - sqrt_1m4x(N + 2);
    return divide_by_power(num, 2) * h;
  }
  if (id == "G-f") {
    const PowerSeries s = sqrt_1m4x(N + 2);
    const PowerSeries num = PowerSeries::constant(Rational(1), N + 2) -
                            s * poly({Rational(1), Rational(2)}, N + 2);
    return divide_by_power(num, 2) * reciprocal(s.truncated(N)) * Rational(1, 6);
  }
  if (id == "G-g") {
    const PowerSeries num =
        poly({Rational(1), Rational(-10), Rational(30)}, N + 3) -
        linear_binomial_pow(Rational(5, 2), Rational(-4), N + 3);
    return divide_by_power(num, 3) * Rational(1, 20);
  }
  if (id == "G-h") {
    const PowerSeries num =
        linear_binomial_pow(Rational(3, 2), Rational(-4), N + 3) +
        poly({Rational(-1), Rational(6), Rational(-6)}, N + 3);
    return divide_by_power(num, 3) * Rational(1, 4);
  }
  if (id == "G-i") {
    const PowerSeries num = poly({Rational(1), Rational(-2), Rational(-2)}, N + 3) -
                            sqrt_1m4x(N + 3);
    return divide_by_power(num, 3) * Rational(1, 4);
  }
  if (id == "G-j") {
    const PowerSeries s = sqrt_1m4x(N + 3);
    const PowerSeries num =
        PowerSeries::constant(Rational(1), N + 3) -
        s * poly({Rational(1), Rational(2), Rational(6)}, N + 3);
    return divide_by_power(num, 3) * reciprocal(s.truncated(N)) * Rational(1, 20);
  }
  if (id == "cent-e1")
    return cat_gf(Rational(-2), Rational(1), N);
  if (id == "cent-g") {
    // gf of 2 S_n(3/2,5/2)
    const PowerSeries num =
        linear_binomial_pow(Rational(3, 2), Rational(-2), N + 3) *
            sqrt(poly({Rational(1), Rational(2)}, N + 3)) +
        poly({Rational(-1), Rational(2), Rational(2)}, N + 3);
    return divide_by_power(num, 3) * h;
  }
  throw std::domain_error("closed_form_gf: unknown id " + id);
}

const std::map<std::string, std::pair<Rational, Rational>>& bc_rows() {
  static const std::map<std::string, std::pair<Rational, Rational>> rows = {
      {"bc-1", {Rational(-3, 4), Rational(4)}},
      {"bc-2", {Rational(-7, 4), Rational(4)}},
      {"bc-3", {Rational(-3, 2), Rational(2)}},
      {"bc-4", {Rational(-3, 2), Rational(2)}},
      {"bc-5", {Rational(-1), Rational(1)}},
      {"bc-6", {Rational(-1, 2), Rational(2)}},
      {"bc-7", {Rational(-1, 4), Rational(4)}},
      {"bc-8", {Rational(1, 4), Rational(4)}},
      {"bc-9", {Rational(1, 2), Rational(2)}},
      {"bc-10", {Rational(1), Rational(1)}},
      {"bc-11", {Rational(5, 4), Rational(4)}},
      {"bc-12", {Rational(3, 2), Rational(2)}},
      {"bc-13", {Rational(2), Rational(1)}},
      {"bc-14", {Rational(5, 2), Rational(2)}},
  };
  return rows;
}

const std::map<std::string, std::pair<Rational, Rational>>& cat_rows() {
  static const std::map<std::string, std::pair<Rational, Rational>> rows = {
      {"cat-1", {Rational(-1), Rational(1)}},
      {"cat-3", {Rational(-1, 2), Rational(2)}},
      {"cat-4", {Rational(-3, 2), Rational(2)}},
      {"cat-5", {Rational(1, 2), Rational(2)}},
      {"cat-6", {Rational(1), Rational(1)}},
      {"cat-7", {Rational(3, 2), Rational(2)}},
      {"cat-8", {Rational(2), Rational(1)}},
  };
  return rows;
}

const std::map<std::string, std::pair<Rational, Rational>>& as_rows() {
  static const std::map<std::string, std::pair<Rational, Rational>> rows = {
      {"as-1", {Rational(1), Rational(1)}},
      {"as-2", {Rational(2), Rational(1)}},
      {"as-3", {Rational(3), Rational(1)}},
      {"as-4", {Rational(1, 2), Rational(2)}},
  };
  return rows;
}

}  // namespace

PowerSeries closed_form_gf(const std::string& id, std::size_t order) {
  if (id.rfind("gen-i:", 0) == 0) {
    const auto second = id.find(':', 6);
    if (second == std::string::npos)
      throw std::domain_error("closed_form_gf: expected gen-i:<alpha>:<s>");
    const auto alpha = Rational::parse(id.substr(6, second - 6));
    const auto s = Rational::parse(id.substr(second + 1));
    if (!alpha || !s || !s->is_integer())
      throw std::domain_error("closed_form_gf: bad gen-i parameters");
    return gen_i_gf(*alpha, s->num().get_si(), order);
  }
  if (auto it = bc_rows().find(id); it != bc_rows().end())
    return bc_gf(it->second.first, it->second.second, order);
  if (id == "cat-2")
    return as_gf(Rational(-1), Rational(1), order);
  if (auto it = cat_rows().find(id); it != cat_rows().end())
    return cat_gf(it->second.first, it->second.second, order);
  if (auto it = as_rows().find(id); it != as_rows().end())
    return as_gf(it->second.first, it->second.second, order);
  return build_fixed(id, order);
}

std::vector<std::string> closed_form_ids() {
  std::vector<std::string> ids;
  for (char c = 'a'; c <= 'j'; ++c) ids.push_back(std::string("G-") + c);
  for (const auto& [k, v] : bc_rows()) ids.push_back(k);
  for (const auto& [k, v] : cat_rows()) ids.push_back(k);
  for (const auto& [k, v] : as_rows()) ids.push_back(k);
  ids.push_back("cat-2");
  ids.push_back("cent-e1");
  ids.push_back("cent-g");
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace betamom::series
