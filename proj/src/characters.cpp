#include "cmm/characters.hpp"

#include <stdexcept>

namespace cmm {

namespace {

const Rational kHalf(1, 2);

WeightPoly factor(const Weight& alpha, const LaurentQ& lower_coeff) {
  WeightPoly f = WeightPoly::monomial(kHalf * alpha);
  f.add_term(-(kHalf * alpha), -lower_coeff);
  return f;
}

}  // namespace

WeightPoly deformed_denominator(const RootSystem& rs, int first, int last) {
  WeightPoly out = WeightPoly::constant(rs.n(), 1);
  for (const auto& alpha : rs.positive_roots()) {
    for (int i = first; i <= last; ++i) out = wp_mul(out, factor(alpha, LaurentQ::q_power(-2 * i)));
  }
  return out;
}

WeightPoly weyl_denominator(const RootSystem& rs) { return deformed_denominator(rs, 0, 0); }

WeightPoly weyl_denominator_alternant(const RootSystem& rs) { return alternant(rs, rs.rho()); }

WeightPoly delta_k(const RootSystem& rs, int k) {
  if (k < 1) throw std::invalid_argument("delta_k needs k >= 1");
  WeightPoly d = deformed_denominator(rs, 0, k - 1);
  if (!d.all_in_lattice()) throw std::logic_error("delta_k has a weight outside P");
  return d;
}

WeightPoly alternant(const RootSystem& rs, const Weight& lambda) {
  const SignedOrbit orbit = rs.signed_orbit(lambda);
  WeightPoly out;
  if (orbit.degenerate) return out;
  for (const auto& t : orbit.terms) out.add_term(t.weight, LaurentQ(t.sign));
  return out;
}

WeightPoly weyl_character(const RootSystem& rs, const Weight& nu) {
  rs.check_rank(nu);
  if (!nu.in_lattice()) throw std::invalid_argument("weyl_character: " + nu.str() + " is not in P");
  const Weight shifted = nu + rs.rho();
  if (shifted.has_repeated_coordinate()) return {};
  auto chi = wp_divide_exact(alternant(rs, shifted), weyl_denominator_alternant(rs));
  if (!chi) throw std::logic_error("alternant of " + shifted.str() + " not divisible by the Weyl denominator");
  return *chi;
}

LaurentQ q_dimension(const RootSystem& rs, const Weight& nu) {
  return wp_eval(weyl_character(rs, nu), rs.rho(), 2);
}

LaurentQ q_dimension_product(const RootSystem& rs, const Weight& nu) {
  const Weight shifted = nu + rs.rho();
  LaurentQ num(1);
  LaurentQ den(1);
  for (const auto& alpha : rs.positive_roots()) {
    const Rational a = inner(shifted, alpha);
    const Rational b = inner(rs.rho(), alpha);
    if (!is_integer(a)) throw std::invalid_argument("q_dimension_product: " + nu.str() + " is not in P");
    num *= qbracket(a.get_num().get_si());
    den *= qbracket(b.get_num().get_si());
  }
  auto quotient = divide_exact(num, den);
  if (!quotient) throw std::logic_error("quantum dimension bracket product is not a Laurent polynomial");
  return *quotient;
}

WeightPoly monomial_symmetric(const RootSystem& rs, const Weight& mu) {
  WeightPoly out;
  for (const auto& w : rs.weyl_orbit(mu)) out.add_term(w, LaurentQ(1));
  return out;
}

bool is_w_invariant(const RootSystem& rs, const WeightPoly& f) {
  std::vector<int> perm(static_cast<std::size_t>(rs.n()));
  for (int i = 0; i + 1 < rs.n(); ++i) {
    for (int j = 0; j < rs.n(); ++j) perm[j] = j;
    std::swap(perm[i], perm[i + 1]);
    if (!(f.permuted(perm) == f)) return false;
  }
  return true;
}

std::map<Weight, LaurentQ> char_expand(const RootSystem& rs, const WeightPoly& f) {
  if (!f.all_in_lattice()) throw std::invalid_argument("char_expand: weight outside P");
  if (!is_w_invariant(rs, f)) throw std::invalid_argument("char_expand: input is not W-invariant");
  std::map<Weight, LaurentQ> out;
  WeightPoly rem = f;
  while (!rem.is_zero()) {
    // The lex-largest weight of a W-invariant element is dominant and is the
    // lex-largest weight of its character.
    const Weight top = rem.leading_weight();
    const LaurentQ c = rem.terms().rbegin()->second;
    rem -= weyl_character(rs, top) * c;
    out.emplace(top, c);
  }
  return out;
}

}  // namespace cmm
