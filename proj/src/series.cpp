#include "pinched/series.hpp"

#include <sstream>
#include <stdexcept>

#include "pinched/betti.hpp"

namespace pinched {

Polynomial::Polynomial(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::constant(const mpq_class& c) { return Polynomial(std::vector<mpq_class>{c}); }

Polynomial Polynomial::monomial(const mpq_class& c, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  std::vector<mpq_class> v(exponent + 1, 0);
  v[exponent] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::one_minus_power(int step, int power) {
  Polynomial base = Polynomial{1} - monomial(1, step);
  Polynomial out{1};
  for (int i = 0; i < power; ++i) out = out * base;
  return out;
}

int Polynomial::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] != 0) return static_cast<int>(k);
  }
  return -1;
}

mpq_class Polynomial::coeff(int k) const {
  return k < 0 || k >= static_cast<int>(c_.size()) ? mpq_class(0) : c_[k];
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpq_class> v(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * static_cast<long>(k);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::reversed() const {
  return Polynomial(std::vector<mpq_class>(c_.rbegin(), c_.rend()));
}

Polynomial Polynomial::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (is_zero()) return {};
  std::vector<mpq_class> v(k, 0);
  v.insert(v.end(), c_.begin(), c_.end());
  return Polynomial(std::move(v));
}

Polynomial Polynomial::compress(int step) const {
  std::vector<mpq_class> v;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (k % step != 0) throw std::invalid_argument("exponent not a multiple of the step");
    const std::size_t j = k / step;
    if (v.size() <= j) v.resize(j + 1, 0);
    v[j] = c_[k];
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
  std::vector<mpq_class> v = c_;
  for (auto& x : v) x *= c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
  return is_zero() ? Polynomial() : scaled(1 / leading());
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<mpq_class> rem = a.c_;
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<mpq_class> quo(a.degree() - db + 1, 0);
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k] == 0) continue;
    const mpq_class f = rem[k] / b.leading();
    quo[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const mpq_class& c = c_[k];
    if (c == 0) continue;
    const mpq_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) {
      if (mag != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero()) {
    num_ = Polynomial();
    den_ = Polynomial{1};
    return;
  }
  const Polynomial g = gcd(num, den);
  num_ = divmod(num, g).first;
  den_ = divmod(den, g).first;
  const mpq_class scale = den_.coeff(0) != 0 ? den_.coeff(0) : den_.leading();
  num_ = num_.scaled(1 / scale);
  den_ = den_.scaled(1 / scale);
}

RationalFunction RationalFunction::derivative() const {
  Polynomial top = num_.derivative() * den_ - num_ * den_.derivative();
  return {std::move(top), den_ * den_};
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.num_.is_zero()) throw std::domain_error("division by the zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

std::vector<mpq_class> RationalFunction::expand(int through) const {
  const mpq_class c0 = den_.coeff(0);
  if (c0 == 0) throw std::domain_error("no power series: denominator vanishes at 0");
  std::vector<mpq_class> out(through + 1, 0);
  for (int k = 0; k <= through; ++k) {
    mpq_class acc = num_.coeff(k);
    for (int j = 1; j <= std::min(k, den_.degree()); ++j) acc -= den_.coeff(j) * out[k - j];
    out[k] = acc / c0;
  }
  return out;
}

namespace {

std::vector<mpz_class> integer_coefficients(const Polynomial& p, const mpz_class& scale) {
  std::vector<mpz_class> out;
  for (const auto& c : p.coeffs()) {
    mpq_class v = c * scale;
    v.canonicalize();
    if (v.get_den() != 1) throw std::logic_error("integer_form: scaling failed");
    out.push_back(v.get_num());
  }
  return out;
}

}  // namespace

std::pair<std::vector<mpz_class>, std::vector<mpz_class>> RationalFunction::integer_form() const {
  mpz_class l = 1;
  for (const auto* p : {&num_, &den_}) {
    for (const auto& c : p->coeffs()) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    }
  }
  auto num = integer_coefficients(num_, l);
  auto den = integer_coefficients(den_, l);
  mpz_class g = 0;
  for (const auto* v : {&num, &den}) {
    for (const auto& c : *v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g > 1) {
    for (auto* v : {&num, &den}) {
      for (auto& c : *v) c /= g;
    }
  }
  return {std::move(num), std::move(den)};
}

std::string RationalFunction::str(const std::string& var) const {
  return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

Reciprocal substitute_reciprocal(const RationalFunction& f) {
  // num(1/z) = z^{-deg num} rev(num), likewise for den.
  const Polynomial& num = f.numerator();
  const Polynomial& den = f.denominator();
  if (num.is_zero()) return {RationalFunction(), 0};
  const int shift = den.degree() - num.degree();
  return {RationalFunction(num.reversed(), den.reversed()), shift};
}

RationalFunction veronese_module_series(int n, int d, int k) {
  if (n < 1 || d < 1 || k < 0 || k >= d) {
    throw std::invalid_argument("veronese module series needs n >= 1, d >= 1, 0 <= k < d");
  }
  RationalFunction f(Polynomial::monomial(1, k + n - 1), Polynomial::one_minus_power(d, 1));
  mpz_class factorial = 1;
  for (int j = 1; j < n; ++j) {
    f = f.derivative();
    factorial *= j;
  }
  return f * RationalFunction(Polynomial::constant(mpq_class(1, 1) / factorial));
}

RationalFunction hilbert_closed(const PinchConfig& config) {
  const int d = config.d();
  int q = 0;
  switch (config.pinch_class()) {
    case PinchClass::MaxD: q = config.n(); break;
    case PinchClass::MaxDMinus1: q = 1; break;
    case PinchClass::Interior: q = 0; break;
  }
  const RationalFunction missing(Polynomial::monomial(1, d), Polynomial::one_minus_power(d, q));
  return veronese_module_series(config.n(), d, 0) - missing;
}

std::vector<mpq_class> hilbert_by_counting(const PinchConfig& config, int through) {
  std::vector<mpq_class> out(through + 1, 0);
  for (int t = 0; t * config.d() <= through; ++t) {
    out[t * config.d()] = static_cast<long>(enumerate_degree(config, t).size());
  }
  return out;
}

Polynomial h_polynomial(const PinchConfig& config) {
  if (config.n() != 2) throw std::invalid_argument("h-polynomial is only provided for n = 2");
  const RationalFunction p = hilbert_closed(config);
  const Polynomial cleared = p.numerator() * Polynomial::one_minus_power(config.d(), config.big_n() - 1);
  auto [quo, rem] = divmod(cleared, p.denominator());
  if (!rem.is_zero()) throw std::logic_error("Hilbert series denominator does not divide");
  return quo.compress(config.d());
}

Polynomial h_polynomial_closed_form(int d, PinchClass pinch) {
  std::vector<mpq_class> c(d + 2, 0);
  for (int i = 0; i <= d + 1; ++i) {
    const long sign_prev = (i % 2 == 0) ? -1 : 1;  // (-1)^{i-1}
    mpq_class v;
    switch (pinch) {
      case PinchClass::MaxD:
        v = mpq_class(binomial(d - 1, i)) * (i - 1);
        break;
      case PinchClass::MaxDMinus1:
        v = mpq_class(binomial(d, i)) * (i - 1) * (d - i - 1) / (d - 1);
        break;
      case PinchClass::Interior:
        v = mpq_class((d - 1) * binomial(d - 2, i - 1) - binomial(d, i - 1) - binomial(d - 2, i));
        break;
    }
    c[i] = sign_prev * v;
  }
  return Polynomial(std::move(c));
}

bool k_polynomial_check(const BettiTable& table, const PinchConfig& config) {
  if (!table.guard_column_zero()) {
    throw std::invalid_argument("K-polynomial check needs a certified table (guard column zero)");
  }
  const int d = config.d();
  std::vector<mpq_class> lhs((table.range().s_max + 1) * d + 1, 0);
  for (const auto& [cell, value] : table.entries()) {
    const auto [i, s] = cell;
    lhs[s * d] += (i % 2 == 0 ? 1 : -1) * value;
  }
  const RationalFunction p = hilbert_closed(config);
  auto [quo, rem] = divmod(p.numerator() * Polynomial::one_minus_power(d, config.big_n() - 1),
                           p.denominator());
  if (!rem.is_zero()) return false;
  return Polynomial(std::move(lhs)) == quo;
}

int canonical_partner(int n, int d, int k) {
  if (d < 1 || k < 0 || k >= d) throw std::invalid_argument("canonical partner needs 0 <= k < d");
  return (((-n - k) % d) + d) % d;
}

CanonicalCheck canonical_series_check(int n, int d, int k) {
  const int t = canonical_partner(n, d, k);
  const Reciprocal r = substitute_reciprocal(veronese_module_series(n, d, k));
  const RationalFunction signed_value =
      r.value * RationalFunction(Polynomial::constant(n % 2 == 0 ? 1 : -1));
  const RationalFunction q = signed_value / veronese_module_series(n, d, t);
  const Polynomial& num = q.numerator();
  const Polynomial& den = q.denominator();
  if (num.is_zero() || num.degree() != num.valuation() || den.degree() != den.valuation()) {
    return {false, 0, 0};
  }
  const mpq_class c = num.leading() / den.leading();
  if (c != 1 && c != -1) return {false, 0, 0};
  return {true, r.shift + num.degree() - den.degree(), c == 1 ? 1 : -1};
}

}  // namespace pinched
