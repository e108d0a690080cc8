#include "cmm/macdonald.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <thread>

using namespace cmm;
using namespace cmm::testing;

namespace {

RationalQ R(std::string_view num, std::string_view den) { return RationalQ(L(num), L(den)); }

RationalQ coeff_of(const MacdonaldPoly& p, const Weight& mu) {
  for (const auto& [w, c] : p.coefficients) {
    if (w == mu) return c;
  }
  FAIL("weight " << mu.str() << " missing from expansion");
  return {};
}

}  // namespace

TEST_CASE("inner product of constants") {
  RootSystem rs(2);
  const WeightPoly one = WeightPoly::constant(2, 1);
  CHECK(inner_product_k(rs, one, one, 1) == LaurentQ(1));
  CHECK(inner_product_k(rs, one, one, 2) == L("q^-4 + q^-2 + 1"));
}

TEST_CASE("small Macdonald polynomials") {
  RootSystem rs(2);
  SUBCASE("P_0 = 1") {
    for (int k = 1; k <= 3; ++k) {
      const auto p = macdonald_poly(rs, rs.zero(), k);
      CHECK(p.poly.num == WeightPoly::constant(2, 1));
      CHECK(p.poly.den == LaurentQ(1));
      CHECK(p.str() == "P[0,0] = m[0,0]");
    }
  }
  SUBCASE("sl2, k = 2, lambda = 2 omega_1") {
    const auto p = macdonald_poly(rs, fund(rs, {2}), 2);
    CHECK(coeff_of(p, rs.zero()) == R("1 + 2*q^2 + q^4", "1 + q^2 + q^4"));
    CHECK(coeff_of(p, rs.zero()) == R("1 + q^2", "1") * R("1 - q^4", "1 - q^6"));
    CHECK(p.str() == "P[1,-1] = m[1,-1] + ((1 + 2*q^2 + q^4)/(1 + q^2 + q^4))*m[0,0]");
  }
  SUBCASE("rejects bad input") {
    CHECK_THROWS_AS(macdonald_poly(rs, W({Rational(-1), Rational(1)}), 2), std::invalid_argument);
    CHECK_THROWS_AS(macdonald_poly(rs, rs.zero(), 0), std::invalid_argument);
    CHECK_THROWS_AS(macdonald_poly(rs, W({Rational(1, 4), Rational(-1, 4)}), 1), std::invalid_argument);
  }
}

TEST_CASE("frozen sl2 oracle values") {
  RootSystem rs(2);
  struct Row {
    int k;
    long a;
    const char* cnum;
    const char* cden;
    const char* nnum;
    const char* nden;
  };
  const Row rows[] = {
      {2, 0, "0", "1", "1 + q^2 + q^4", "q^4"},
      {2, 1, "0", "1", "1 + q^4", "q^4"},
      {2, 2, "1 + 2*q^2 + q^4", "1 + q^2 + q^4", "1 + q^2 + q^4 + q^6 + q^8", "q^4 + q^6 + q^8"},
      {2, 3, "1 + q^2 + q^4", "1 + q^4", "1 + q^4 + q^8", "q^4 + q^8"},
      {3, 0, "0", "1", "1 + q^2 + 2*q^4 + 2*q^6 + 2*q^8 + q^10 + q^12", "q^12"},
      {3, 1, "0", "1", "1 + q^4 + q^6 + q^8 + q^12", "q^12"},
      {3, 2, "1 + q^2 + q^4", "1 + q^4", "1 + q^4 + q^6 + q^8 + q^10 + q^12 + q^16", "q^12 + q^16"},
      {3, 3, "1 + 2*q^2 + 3*q^4 + 2*q^6 + q^8", "1 + q^2 + q^4 + q^6 + q^8",
       "1 + q^2 + q^4 + q^6 + 2*q^8 + 2*q^10 + 2*q^12 + q^14 + q^16 + q^18 + q^20",
       "q^12 + q^14 + q^16 + q^18 + q^20"},
  };
  for (const auto& row : rows) {
    CAPTURE(row.k);
    CAPTURE(row.a);
    const Weight lambda = fund(rs, {row.a});
    const auto p = macdonald_poly(rs, lambda, row.k);
    if (row.a >= 2) CHECK(coeff_of(p, fund(rs, {row.a - 2})) == R(row.cnum, row.cden));
    CHECK(norm_direct(rs, p) == R(row.nnum, row.nden));
    CHECK(norm_formula(rs, lambda, row.k) == R(row.nnum, row.nden));
  }
}

TEST_CASE("k = 1 gives Weyl characters") {
  for (int n = 2; n <= 4; ++n) {
    RootSystem rs(n);
    for (const auto& lambda : rs.lower_dominant_weights(rs.from_fundamental(std::vector<long>(n - 1, 1)))) {
      CAPTURE(lambda.str());
      const auto p = macdonald_poly(rs, lambda, 1);
      CHECK(p.poly.den == LaurentQ(1));
      CHECK(p.poly.num == weyl_character(rs, lambda));
    }
  }
}

TEST_CASE("phi0 and phi") {
  RootSystem rs(2);
  const Weight half = Rational(1, 2) * rs.simple_roots()[0];
  WeightPoly expected = WeightPoly::monomial(half);
  expected.add_term(-half, -L("q^-2"));
  CHECK(phi0(rs, 2) == expected);
  CHECK(phi0(rs, 1) == WeightPoly::constant(2, 1));
  for (int n = 2; n <= 3; ++n) {
    RootSystem r(n);
    for (int k = 1; k <= 3; ++k) CHECK(wp_mul(phi0(r, k), weyl_denominator(r)) == delta_k(r, k));
  }
}

TEST_CASE("property: triangularity, orthogonality, norms") {
  struct Case {
    int n;
    int k;
    std::vector<long> bound;
  };
  const Case cases[] = {{2, 1, {4}}, {2, 2, {4}}, {2, 3, {4}}, {3, 1, {2, 2}}, {3, 2, {2, 2}}, {4, 2, {1, 0, 1}}};
  for (const auto& c : cases) {
    RootSystem rs(c.n);
    const auto weights = rs.lower_dominant_weights(rs.from_fundamental(c.bound));
    std::vector<MacdonaldPoly> polys;
    for (const auto& lambda : weights) polys.push_back(macdonald_poly(rs, lambda, c.k));
    for (std::size_t i = 0; i < polys.size(); ++i) {
      const auto& p = polys[i];
      CAPTURE(c.n);
      CAPTURE(c.k);
      CAPTURE(p.lambda.str());
      // triangular with leading coefficient 1
      CHECK(p.coefficients.back().first == p.lambda);
      CHECK(p.coefficients.back().second == RationalQ(1));
      for (const auto& [mu, coef] : p.poly.num.terms()) {
        CHECK(rs.dominance_le(mu.dominant_representative(), p.lambda));
      }
      CHECK(is_w_invariant(rs, p.poly.num));
      // orthogonal to every other Macdonald polynomial in range
      for (std::size_t j = 0; j < i; ++j) {
        CHECK(inner_product_k(rs, p.poly, polys[j].poly, c.k).is_zero());
      }
      // norm formula and the phi form of the norm
      const RationalQ norm = norm_direct(rs, p);
      CHECK(norm == norm_formula(rs, p.lambda, c.k));
      const auto f = phi(rs, p);
      CHECK(norm == inner_product_k(rs, f, f, 1));
      // lambda and lambda* have the same norm
      CHECK(norm == norm_direct(rs, macdonald_poly(rs, rs.star(p.lambda), c.k)));
    }
  }
}

TEST_CASE("property: solve order does not matter") {
  for (int n = 2; n <= 3; ++n) {
    RootSystem rs(n);
    for (int k = 1; k <= 2; ++k) {
      for (const auto& lambda : rs.lower_dominant_weights(rs.from_fundamental(std::vector<long>(n - 1, 2)))) {
        const auto a = macdonald_poly(rs, lambda, k, SolveOrder::kCanonical);
        const auto b = macdonald_poly(rs, lambda, k, SolveOrder::kReversed);
        CAPTURE(lambda.str());
        CHECK(a.coefficients == b.coefficients);
        CHECK(a.poly.num * b.poly.den == b.poly.num * a.poly.den);
      }
    }
  }
}

TEST_CASE("cache is shared across threads") {
  RootSystem rs(3);
  MacdonaldCache cache;
  const Weight lambda = fund(rs, {1, 1});
  std::vector<std::shared_ptr<const MacdonaldPoly>> got(4);
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t) pool.emplace_back([&, t] { got[t] = cache.get(rs, lambda, 2); });
  for (auto& th : pool) th.join();
  CHECK(cache.size() == 1);
  for (const auto& g : got) CHECK(g->coefficients == got[0]->coefficients);
  CHECK(cache.get(rs, lambda, 2) == cache.get(rs, lambda, 2));
}
