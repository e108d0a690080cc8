#include "cmm/characters.hpp"
#include "cmm/gaussian.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace cmm;
using namespace cmm::testing;

namespace {

WeightPoly random_lattice_poly(std::mt19937& rng, const RootSystem& rs, int terms) {
  WeightPoly f;
  for (int i = 0; i < terms; ++i) f.add_term(random_weight(rng, rs, 3), random_nonzero_laurent(rng));
  return f;
}

}  // namespace

TEST_CASE("gaussian pairing") {
  RootSystem rs(2);
  CHECK(gaussian_pairing(WeightPoly::constant(2, 1)) == LaurentQ(1));
  const Weight w1 = fund(rs, {1});
  CHECK(gaussian_pairing(WeightPoly::monomial(w1)) == L("q^(1/2)"));
  CHECK(gaussian_pairing(WeightPoly::monomial(Rational(3) * w1, L("2"))) == L("2*q^(9/2)"));
  const WeightPoly d = weyl_denominator(rs);
  CHECK(gaussian_pairing(wp_mul(d, d.bar())).str() == "2 - 2*q^2");
  CHECK_THROWS_AS(gaussian_pairing(WeightPoly::monomial(Rational(1, 4) * rs.simple_roots()[0])), std::invalid_argument);
  CHECK(gaussian_pairing(WeightPoly()).is_zero());
}

TEST_CASE("property: pairing is W- and bar-invariant") {
  std::mt19937 rng(20240507);
  for (int n = 2; n <= 4; ++n) {
    RootSystem rs(n);
    for (int trial = 0; trial < 40; ++trial) {
      const WeightPoly f = random_lattice_poly(rng, rs, 5);
      const LaurentQ base = gaussian_pairing(f);
      CHECK(gaussian_pairing(f.bar()) == base);
      CHECK(gaussian_pairing(f.permuted(random_permutation(rng, n))) == base);
      const Weight nu = random_weight(rng, rs, 4);
      CHECK(gaussian_pairing(WeightPoly::monomial(nu)) == LaurentQ::q_power(norm2(nu)));
    }
  }
}

TEST_CASE("truncated gaussian") {
  RootSystem rs(2);
  const Weight w1 = fund(rs, {1});
  CHECK(gaussian_truncated(rs, 0).terms == WeightPoly::constant(2, 1));
  WeightPoly expected = WeightPoly::constant(2, 1);
  expected.add_term(w1, L("q^(1/2)"));
  expected.add_term(-w1, L("q^(1/2)"));
  CHECK(gaussian_truncated(rs, Rational(1, 2)).terms == expected);
  const Weight alpha = rs.simple_roots()[0];
  expected.add_term(alpha, L("q^2"));
  expected.add_term(-alpha, L("q^2"));
  CHECK(gaussian_truncated(rs, 2).terms == expected);
  CHECK_THROWS_AS(gaussian_truncated(rs, -1), std::invalid_argument);

  for (int n = 2; n <= 4; ++n) {
    RootSystem r(n);
    const auto g = gaussian_truncated(r, 6);
    CHECK(g.terms.coeff(r.zero()) == LaurentQ(1));
    CHECK(g.terms.size() == r.weights_in_ball(6).size());
    CHECK(g.terms.bar() == g.terms);
    CHECK(is_w_invariant(r, g.terms));
    for (const auto& [w, c] : g.terms.terms()) CHECK(c == LaurentQ::q_power(norm2(w)));
  }
}

TEST_CASE("character expansion of the gaussian, single coefficients") {
  RootSystem rs(2);
  const auto zero = prop1_coefficient_check(rs, rs.zero(), 6);
  CHECK(zero.passed);
  CHECK(render_value(zero.lhs) == "1");
  CHECK(render_value(zero.rhs) == "1");
  const auto w1 = prop1_coefficient_check(rs, fund(rs, {1}), Rational(1, 2));
  CHECK(w1.passed);
  CHECK(render_value(w1.rhs) == "q^(1/2)");
  const auto far = prop1_coefficient_check(rs, fund(rs, {5}), 2);
  CHECK(far.passed);
  CHECK(render_value(far.lhs) == "0");
  CHECK_THROWS_AS(prop1_coefficient_check(rs, rs.zero(), -1), std::invalid_argument);
  CHECK_THROWS_AS(prop1_coefficient_check(rs, Rational(1, 4) * rs.simple_roots()[0], 2),
                  std::invalid_argument);
}

TEST_CASE("property: every small coefficient matches") {
  for (int n = 2; n <= 3; ++n) {
    RootSystem rs(n);
    const Prop1Checker checker(rs, 8);
    for (const auto& mu : rs.weights_in_ball(4)) {
      CAPTURE(mu.str());
      const auto r = checker.check(mu);
      CHECK(r.passed);
    }
  }
}

TEST_CASE("sl2 x-series identity") {
  const auto zero = verify_eq5(0);
  CHECK(zero.passed);
  CHECK(render_value(zero.lhs) == "(1)*e[0,0]");
  const auto r = verify_eq5(20);
  CHECK(r.passed);
  const auto& series = std::get<WeightPoly>(r.lhs);
  RootSystem rs(2);
  CHECK(series.coeff(fund(rs, {1})) == L("q^(1/2)"));
  CHECK(series.coeff(rs.zero()) == LaurentQ(1));
  CHECK_THROWS_AS(verify_eq5(-1), std::invalid_argument);

  // agrees with the general coefficient check for every x-power
  const Rational order(15, 2);
  const auto eq5 = verify_eq5(order);
  const Prop1Checker checker(rs, order);
  for (long l = -5; l <= 5; ++l) {
    const Weight mu = Rational(l) * fund(rs, {1});
    const auto p = checker.check(mu);
    CHECK(p.passed);
    CHECK(std::get<RationalQ>(p.lhs) == RationalQ(std::get<WeightPoly>(eq5.rhs).coeff(mu)));
    CHECK(std::get<RationalQ>(p.rhs) == RationalQ(std::get<WeightPoly>(eq5.lhs).coeff(mu)));
  }
}

TEST_CASE("gaussian evaluation property") {
  for (int n = 2; n <= 3; ++n) {
    RootSystem rs(n);
    const auto trivial = gaussian_eval_property(rs, rs.zero(), 12);
    CHECK(trivial.passed);
    const auto r = gaussian_eval_property(rs, rs.fundamental_weights()[0], 40);
    CHECK(r.passed);
    std::string complete;
    std::string shift;
    for (const auto& [key, value] : r.details) {
      if (key == "complete_order") complete = value;
      if (key == "shift") shift = value;
    }
    CHECK(parse_rational(complete) >= 8);
    CHECK(shift == (n == 2 ? "3/2" : "8/3"));
  }
  RootSystem rs(2);
  CHECK_THROWS_AS(gaussian_eval_property(rs, W({Rational(-1), Rational(1)}), 10), std::invalid_argument);
  const auto tiny = gaussian_eval_property(rs, fund(rs, {3}), 1);
  CHECK_FALSE(tiny.passed);
}

TEST_CASE("property: complete order bound against brute force") {
  std::mt19937 rng(20240509);
  for (int n = 2; n <= 3; ++n) {
    RootSystem rs(n);
    for (int trial = 0; trial < 6; ++trial) {
      const Weight v = random_weight(rng, rs, 2) + rs.rho();
      const Rational order(std::uniform_int_distribution<int>(4, 30)(rng));
      const Rational bound = shifted_ball_complete_order(v, order);
      // terms just outside the ball must all sit above the bound
      for (const auto& mu : rs.weights_in_ball(4 * order)) {
        if (norm2(mu) <= order) continue;
        CHECK(norm2(mu) + 2 * inner(mu, v) > bound);
      }
    }
  }
}

TEST_CASE("report json round trip") {
  RootSystem rs(3);
  for (const auto& r : {verify_eq5(4), prop1_coefficient_check(rs, fund(rs, {1, 1}), 4),
                        gaussian_eval_property(rs, fund(rs, {1, 0}), 30)}) {
    const std::string line = r.to_json();
    const auto back = parse_report_json(line);
    CHECK(back.to_json() == line);
    CHECK(back.id == r.id);
    CHECK(back.params == r.params);
    CHECK(back.passed == r.passed);
  }
  CHECK_THROWS_AS(parse_report_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_report_json(R"({"identity":"nope"})"), std::invalid_argument);
}
