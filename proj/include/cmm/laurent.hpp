#pragma once

// Exact Laurent polynomials in a formal variable q with rational exponents,
// and quotients of two such polynomials.

#include "cmm/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cmm {

using QExponent = Rational;

class LaurentQ {
 public:
  struct Term {
    QExponent exp;
    Rational coeff;

    bool operator==(const Term&) const = default;
  };

  LaurentQ() = default;
  LaurentQ(long constant);  // NOLINT: integers embed as constants
  LaurentQ(const Rational& constant);  // NOLINT

  static LaurentQ monomial(const Rational& coeff, const QExponent& exp);
  // q^exp with coefficient 1.
  static LaurentQ q_power(const QExponent& exp) { return monomial(1, exp); }
  // Builds from arbitrary (possibly repeated, possibly zero) terms.
  static LaurentQ from_terms(std::vector<Term> terms);

  // Terms sorted by strictly increasing exponent, all coefficients nonzero.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  const QExponent& min_exponent() const;
  const QExponent& max_exponent() const;
  const Term& lowest() const { return terms_.front(); }
  const Term& highest() const { return terms_.back(); }
  Rational coeff(const QExponent& exp) const;
  // Sum of all coefficients (value at q = 1).
  Rational coefficient_sum() const;

  // Terms with exponent <= order.
  LaurentQ truncated(const QExponent& order) const;
  // Multiply by q^shift.
  LaurentQ shifted(const QExponent& shift) const;
  // Substitute q -> q^factor (factor != 0).
  LaurentQ exponents_scaled(const Rational& factor) const;
  // q -> q^{-1}.
  LaurentQ reflected() const { return exponents_scaled(-1); }

  LaurentQ operator-() const;
  LaurentQ& operator+=(const LaurentQ& other);
  LaurentQ& operator-=(const LaurentQ& other);
  LaurentQ& operator*=(const LaurentQ& other);
  LaurentQ& operator*=(const Rational& scalar);

  friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
  friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
  friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
  friend LaurentQ operator*(LaurentQ a, const Rational& s) { return a *= s; }
  friend LaurentQ operator*(const Rational& s, LaurentQ a) { return a *= s; }

  bool operator==(const LaurentQ& other) const { return terms_ == other.terms_; }

  LaurentQ pow(unsigned e) const;

  // Canonical rendering, e.g. "q^-4 + q^-2 + 1", "q^(1/2) - q^(9/2)".
  std::string str() const;

 private:
  std::vector<Term> terms_;
};

// Parses the canonical rendering produced by LaurentQ::str().
LaurentQ parse_laurent(std::string_view text);

// acc += a * b.
void add_product(LaurentQ& acc, const LaurentQ& a, const LaurentQ& b);

// [m] = q^{m-1} + q^{m-3} + ... + q^{1-m}; [0] = 0; [-m] = -[m].
LaurentQ qbracket(long m);

// Exact quotient a / b when b divides a in the Laurent ring, otherwise nullopt.
std::optional<LaurentQ> divide_exact(const LaurentQ& a, const LaurentQ& b);

// Greatest common divisor, normalized like a RationalQ denominator
// (lowest term q^0 with coefficient 1). gcd(0, 0) = 0.
LaurentQ gcd(const LaurentQ& a, const LaurentQ& b);

// Quotient of two Laurent polynomials. The denominator is nonzero and
// normalized so its lowest term is exactly q^0 with coefficient 1.
class RationalQ {
 public:
  RationalQ() : num_(), den_(1) {}
  RationalQ(LaurentQ num);  // NOLINT: polynomials embed with denominator 1
  RationalQ(long c) : RationalQ(LaurentQ(c)) {}  // NOLINT
  RationalQ(LaurentQ num, LaurentQ den);

  const LaurentQ& num() const { return num_; }
  const LaurentQ& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_ == LaurentQ(1); }

  // Cancels the common factor of numerator and denominator.
  RationalQ reduced() const;

  RationalQ operator-() const { return RationalQ(-num_, den_); }
  friend RationalQ operator+(const RationalQ& a, const RationalQ& b);
  friend RationalQ operator-(const RationalQ& a, const RationalQ& b);
  friend RationalQ operator*(const RationalQ& a, const RationalQ& b);
  friend RationalQ operator/(const RationalQ& a, const RationalQ& b);

  // Cross-multiplication equality.
  friend bool rational_eq(const RationalQ& a, const RationalQ& b);
  bool operator==(const RationalQ& other) const { return rational_eq(*this, other); }

  // num.str() when the denominator is 1, otherwise "(num)/(den)".
  std::string str() const;

 private:
  void normalize();

  LaurentQ num_;
  LaurentQ den_;
};

RationalQ parse_rational_q(std::string_view text);

}  // namespace cmm
