#include "cmm/gaussian.hpp"

#include "cmm/characters.hpp"

#include <algorithm>
#include <stdexcept>

namespace cmm {

namespace {

void check_order(const Rational& order) {
  if (order < 0) throw std::invalid_argument("truncation order must be >= 0, got " + to_string(order));
}

WeightPoly truncate_coeffs(const WeightPoly& f, const Rational& order) {
  WeightPoly out;
  for (const auto& [w, c] : f.terms()) out.add_term(w, c.truncated(order));
  return out;
}

// Rational B >= sqrt(x) for x >= 0, within 1e-4.
Rational sqrt_upper(const Rational& x) {
  const Integer scale = 10000;
  const Rational scaled = x * scale * scale;
  Integer floor_val = scaled.get_num() / scaled.get_den();
  Integer root;
  mpz_sqrt(root.get_mpz_t(), floor_val.get_mpz_t());
  Rational b(root + 1, scale);
  b.canonicalize();
  return b;
}

}  // namespace

LaurentQ gaussian_pairing(const WeightPoly& f) {
  LaurentQ acc;
  for (const auto& [w, c] : f.terms()) {
    if (!w.in_lattice()) throw std::invalid_argument("gaussian_pairing: weight " + w.str() + " is not in P");
    acc += c.shifted(norm2(w));
  }
  return acc;
}

TruncatedGaussian gaussian_truncated(const RootSystem& rs, const Rational& order) {
  check_order(order);
  TruncatedGaussian g;
  g.n = rs.n();
  g.order = order;
  for (const auto& w : rs.weights_in_ball(order)) g.terms.add_term(w, LaurentQ::q_power(norm2(w)));
  return g;
}

Prop1Checker::Prop1Checker(const RootSystem& rs, const Rational& order) : rs_(rs), order_(order), prefactor_(1) {
  check_order(order);
  for (const auto& alpha : rs.positive_roots()) {
    prefactor_ *= LaurentQ(1) - LaurentQ::q_power(2 * inner(alpha, rs.rho()));
  }
  // The lowest exponent of q^{(nu, nu+2rho)} dim_q(nu) is (nu, nu+2rho) minus
  // the top degree of the bracket product, which is (nu, nu).
  for (const auto& nu : rs.weights_in_ball(order)) {
    if (!nu.is_dominant()) continue;
    const LaurentQ dim = q_dimension_product(rs, nu);
    const LaurentQ c = dim.shifted(inner(nu, nu + 2 * rs.rho()));
    if (c.min_exponent() > order) continue;
    chars_.push_back(weyl_character(rs, nu) * c);
  }
}

VerificationReport Prop1Checker::check(const Weight& mu) const {
  Stopwatch clock;
  rs_.check_rank(mu);
  if (!mu.in_lattice()) throw std::invalid_argument("prop1: " + mu.str() + " is not in P");
  VerificationReport r;
  r.id = IdentityId::kProp1;
  r.params.n = rs_.n();
  r.params.mu = mu;
  r.params.order = order_;
  const Rational mu2 = norm2(mu);
  LaurentQ lhs = mu2 <= order_ ? LaurentQ::q_power(mu2) : LaurentQ();
  LaurentQ sum;
  for (const auto& chi : chars_) sum += chi.coeff(mu);
  LaurentQ rhs = (prefactor_ * sum).truncated(order_);
  settle(r, RationalQ(std::move(lhs)), RationalQ(std::move(rhs)));
  r.details.emplace_back("characters", std::to_string(chars_.size()));
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport prop1_coefficient_check(const RootSystem& rs, const Weight& mu, const Rational& order) {
  return Prop1Checker(rs, order).check(mu);
}

VerificationReport verify_eq5(const Rational& order) {
  check_order(order);
  Stopwatch clock;
  const RootSystem rs(2);
  const Weight omega = rs.fundamental_weights()[0];

  WeightPoly lhs;
  // The m-th term starts at q^{m^2/2}.
  for (long m = 0; Rational(m * m, 2) <= order; ++m) {
    Rational e(m * (m + 2), 2);
    e.canonicalize();
    const LaurentQ coeff = qbracket(m + 1).shifted(e);
    for (long j = -m; j <= m; j += 2) lhs.add_term(Rational(j) * omega, coeff);
  }
  lhs = truncate_coeffs(lhs * (LaurentQ(1) - LaurentQ::q_power(2)), order);

  WeightPoly rhs;
  for (long l = 0; Rational(l * l, 2) <= order; ++l) {
    Rational e(l * l, 2);
    e.canonicalize();
    rhs.add_term(Rational(l) * omega, LaurentQ::q_power(e));
    if (l) rhs.add_term(Rational(-l) * omega, LaurentQ::q_power(e));
  }

  VerificationReport r;
  r.id = IdentityId::kEq5;
  r.params.n = 2;
  r.params.order = order;
  settle(r, lhs, rhs);
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

Rational shifted_ball_complete_order(const Weight& v, const Rational& order) {
  check_order(order);
  // A missing term has t = (mu,mu) > order and exponent >= t - 2 sqrt(t (v,v)),
  // which increases in t once t >= (v,v).
  const Rational s = norm2(v);
  if (order < s) return -s - 1;
  return order - 2 * sqrt_upper(order * s);
}

VerificationReport gaussian_eval_property(const RootSystem& rs, const Weight& lambda, const Rational& order) {
  check_order(order);
  rs.check_rank(lambda);
  if (!lambda.in_lattice() || !lambda.is_dominant()) {
    throw std::invalid_argument("gauss-eval needs a dominant integral weight, got " + lambda.str());
  }
  Stopwatch clock;
  const Weight shifted = lambda + rs.rho();
  const Rational shift = inner(lambda, lambda + 2 * rs.rho());
  const Rational complete = std::min<Rational>(shifted_ball_complete_order(shifted, order),
                                               shifted_ball_complete_order(rs.rho(), order) - shift);

  LaurentQ lhs;
  LaurentQ rhs;
  for (const auto& mu : rs.weights_in_ball(order)) {
    const Rational mu2 = norm2(mu);
    lhs += LaurentQ::q_power(mu2 + 2 * inner(mu, shifted));
    rhs += LaurentQ::q_power(mu2 + 2 * inner(mu, rs.rho()));
  }
  rhs = rhs.shifted(-shift);

  VerificationReport r;
  r.id = IdentityId::kGaussEval;
  r.params.n = rs.n();
  r.params.lambda = lambda;
  r.params.order = order;
  settle(r, RationalQ(lhs.truncated(complete)), RationalQ(rhs.truncated(complete)));
  r.details.emplace_back("shift", to_string(shift));
  r.details.emplace_back("complete_order", to_string(complete));
  if (complete < 0) {
    r.passed = false;
    r.details.emplace_back("note", "order too small for a complete comparison");
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

}  // namespace cmm
