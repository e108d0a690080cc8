#pragma once

// Sparse elements of the group algebra of the weight lattice (extended by
// half-weights): finite sums of formal exponentials e^w with LaurentQ
// coefficients.

#include "cmm/laurent.hpp"
#include "cmm/root_system.hpp"

#include <map>
#include <optional>
#include <string>

namespace cmm {

class WeightPoly {
 public:
  // Lexicographic on weights; rbegin() is the leading term used by division.
  using TermMap = std::map<Weight, LaurentQ>;

  WeightPoly() = default;
  static WeightPoly monomial(const Weight& w, LaurentQ coeff = LaurentQ(1));
  static WeightPoly constant(int n, LaurentQ coeff);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  LaurentQ coeff(const Weight& w) const;
  // Lexicographically largest weight in the support.
  const Weight& leading_weight() const;

  // Adds c*e^w, dropping the term if it cancels.
  void add_term(const Weight& w, const LaurentQ& c);

  // e^w -> e^{-w}; q is fixed.
  WeightPoly bar() const;
  // Applies a Weyl group element to every weight.
  WeightPoly permuted(std::span<const int> perm) const;
  bool all_in_lattice() const;

  WeightPoly operator-() const;
  WeightPoly& operator+=(const WeightPoly& other);
  WeightPoly& operator-=(const WeightPoly& other);
  WeightPoly& operator*=(const LaurentQ& scalar);
  friend WeightPoly operator+(WeightPoly a, const WeightPoly& b) { return a += b; }
  friend WeightPoly operator-(WeightPoly a, const WeightPoly& b) { return a -= b; }
  friend WeightPoly operator*(WeightPoly a, const LaurentQ& s) { return a *= s; }
  friend WeightPoly operator*(const WeightPoly& a, const WeightPoly& b);

  bool operator==(const WeightPoly& other) const { return terms_ == other.terms_; }

  // Terms by decreasing (w, w), then decreasing lex, as "(<LaurentQ>)*e[coords]".
  std::string str() const;

 private:
  TermMap terms_;
};

// Serial reference convolution.
// Inverse of WeightPoly::str; rejects non-canonical text.
WeightPoly parse_weight_poly(std::string_view text);

WeightPoly wp_mul(const WeightPoly& f, const WeightPoly& g);
// OpenMP convolution: per-thread partial maps merged in a fixed order.
// threads <= 0 uses the OpenMP default. Result is identical to wp_mul.
WeightPoly wp_mul_parallel(const WeightPoly& f, const WeightPoly& g, int threads = 0);

inline WeightPoly wp_bar(const WeightPoly& f) { return f.bar(); }

// Substitutes e^nu -> q^{scale (nu, mu)}.
LaurentQ wp_eval(const WeightPoly& f, const Weight& mu, const Rational& scale);

// Coefficient of e^0, i.e. the constant-term functional.
LaurentQ const_term(const WeightPoly& f);
// const_term(f * g) without forming the product.
LaurentQ const_term_of_product(const WeightPoly& f, const WeightPoly& g);

// Exact quotient f / g by lexicographic leading-term elimination, or nullopt
// when g does not divide f.
std::optional<WeightPoly> wp_divide_exact(const WeightPoly& f, const WeightPoly& g);

}  // namespace cmm
