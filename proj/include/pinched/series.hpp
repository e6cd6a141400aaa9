#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "pinched/semigroup.hpp"

namespace pinched {

/// Univariate polynomial with exact rational coefficients, indexed by
/// exponent. The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<mpq_class> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial constant(const mpq_class& c);
  static Polynomial monomial(const mpq_class& c, int exponent);
  /// (1 - z^step)^power
  static Polynomial one_minus_power(int step, int power);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Lowest exponent with a nonzero coefficient; -1 for zero.
  int valuation() const;
  mpq_class coeff(int k) const;
  const mpq_class& leading() const { return c_.back(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  Polynomial derivative() const;
  /// z^e * p(1/z) with e = degree(): the coefficient sequence reversed.
  Polynomial reversed() const;
  Polynomial shifted(int k) const;  // multiply by z^k, k >= 0
  /// p(z) with z^step replaced by w; throws if an exponent is not a multiple.
  Polynomial compress(int step) const;
  Polynomial scaled(const mpq_class& c) const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a) { return a.scaled(-1); }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Exact division with remainder; throws on a zero divisor.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  /// Monic gcd; gcd(0, 0) = 0.
  friend Polynomial gcd(const Polynomial& a, const Polynomial& b);

  std::string str(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

/// numerator / denominator in lowest terms. The denominator is scaled to
/// have constant term 1 when that term is nonzero, otherwise to be monic.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial{1}) {}
  RationalFunction(Polynomial num, Polynomial den);
  explicit RationalFunction(Polynomial p) : RationalFunction(std::move(p), Polynomial{1}) {}

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_polynomial() const { return den_.degree() == 0; }

  RationalFunction derivative() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  /// Power-series coefficients of degrees 0..through. Needs a nonzero
  /// constant term in the denominator.
  std::vector<mpq_class> expand(int through) const;

  /// Numerator and denominator rescaled to coprime integer coefficient lists.
  std::pair<std::vector<mpz_class>, std::vector<mpz_class>> integer_form() const;

  std::string str(const std::string& var = "z") const;

 private:
  Polynomial num_;
  Polynomial den_;
};

/// f(1/z) written as z^shift * g(z) with g a rational function in z.
struct Reciprocal {
  RationalFunction value;
  int shift;
};
Reciprocal substitute_reciprocal(const RationalFunction& f);

/// (1/(n-1)!) (d/dz)^{n-1} [ z^{k+n-1} / (1 - z^d) ], the Hilbert series of
/// the Veronese module S_{n,d,k}. Needs n >= 1, d >= 1, 0 <= k < d.
RationalFunction veronese_module_series(int n, int d, int k);

/// Hilbert series of P_{n,d,m}: the Veronese ring series minus
/// z^d / (1 - z^d)^q with q = n, 1, 0 for the three pinch classes.
RationalFunction hilbert_closed(const PinchConfig& config);

/// Generating function of the graded piece sizes counted by enumeration,
/// truncated: coefficients of degree 0..through.
std::vector<mpq_class> hilbert_by_counting(const PinchConfig& config, int through);

/// n = 2 only: P(z) (1 - z^d)^{N-1}, written in w = z^d.
Polynomial h_polynomial(const PinchConfig& config);

/// n = 2 only: the closed coefficient formulas for the h-polynomial in w,
/// one per pinch class, for 0 <= i <= d + 1. The i = d + 1 term vanishes
/// except for interior pinches.
Polynomial h_polynomial_closed_form(int d, PinchClass pinch);

class BettiTable;

/// Σ (-1)^i β_{i,s} z^{sd} == P(z) (1 - z^d)^{N-1}. Throws
/// std::invalid_argument unless the table's guard column is all zero.
bool k_polynomial_check(const BettiTable& table, const PinchConfig& config);

/// The t in [0, d) with t ≡ -n - k (mod d). Throws unless 0 <= k < d.
int canonical_partner(int n, int d, int k);

struct CanonicalCheck {
  bool holds;
  int shift;
  int sign;  // ±1 when holds
};

/// Compares (-1)^n S_{n,d,k}(1/z) with S_{n,d,t}(z), t the canonical partner:
/// holds when the quotient is ±z^shift.
CanonicalCheck canonical_series_check(int n, int d, int k);

}  // namespace pinched
