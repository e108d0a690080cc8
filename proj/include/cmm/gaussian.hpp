#pragma once

// The Gaussian of the weight lattice, gamma = sum_{lambda in P} e^lambda
// q^{(lambda, lambda)}: exact pairing with finite elements, truncations,
// and checks of its expansion in characters.

#include "cmm/report.hpp"

#include <vector>

namespace cmm {

// CT(f * gamma) = sum_lambda f_lambda q^{(lambda, lambda)}. Exact; throws
// std::invalid_argument if f has a weight outside P.
LaurentQ gaussian_pairing(const WeightPoly& f);

struct TruncatedGaussian {
  int n = 2;
  Rational order;
  // e^lambda q^{(lambda, lambda)} for every lambda in P with (lambda, lambda) <= order.
  WeightPoly terms;
};

// Throws std::invalid_argument for a negative order.
TruncatedGaussian gaussian_truncated(const RootSystem& rs, const Rational& order);

// Coefficient of e^mu in
//   prod_{alpha>0} (1 - q^{2(alpha, rho)}) sum_{nu dominant} q^{(nu, nu + 2 rho)} dim_q(nu) chi_nu
// compared with q^{(mu, mu)}, both truncated to q-exponents <= order. The
// characters are built once and reused across mu.
class Prop1Checker {
 public:
  Prop1Checker(const RootSystem& rs, const Rational& order);

  VerificationReport check(const Weight& mu) const;
  // Dominant nu whose lowest q-exponent is within the order.
  std::size_t num_characters() const { return chars_.size(); }

 private:
  RootSystem rs_;
  Rational order_;
  LaurentQ prefactor_;
  // q^{(nu, nu + 2 rho)} dim_q(nu) chi_nu
  std::vector<WeightPoly> chars_;
};

VerificationReport prop1_coefficient_check(const RootSystem& rs, const Weight& mu, const Rational& order);

// The sl2 case written with x = e^{omega_1}:
//   sum_{m >= 0} q^{m(m+2)/2} [m+1] (x^m + x^{m-2} + ... + x^{-m}) (1 - q^2) = sum_l x^l q^{l^2/2}
// as x-series truncated at q-order `order`.
VerificationReport verify_eq5(const Rational& order);

// gamma(q^{2(lambda+rho)}) = q^{-(lambda, lambda + 2 rho)} gamma(q^{2 rho}), both
// sides built from the ball of radius^2 = order and compared up to the
// order at which both truncations are complete. That order is reported in
// the "complete_order" detail; it can be far below `order`.
VerificationReport gaussian_eval_property(const RootSystem& rs, const Weight& lambda, const Rational& order);

// Largest exponent up to which every term of sum_mu q^{(mu,mu) + 2(mu, v)}
// with (mu, mu) > order is guaranteed absent.
Rational shifted_ball_complete_order(const Weight& v, const Rational& order);

}  // namespace cmm
