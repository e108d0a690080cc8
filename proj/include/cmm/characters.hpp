#pragma once

// Classical objects in the group algebra: the Weyl denominator, its
// q-deformed powers, Weyl characters, quantum dimensions, monomial
// symmetric functions, and expansion in the character basis.

#include "cmm/weight_poly.hpp"

#include <map>

namespace cmm {

// prod_{alpha > 0} (e^{alpha/2} - e^{-alpha/2}).
WeightPoly weyl_denominator(const RootSystem& rs);
// sum_{w in W} (-1)^{|w|} e^{w rho}.
WeightPoly weyl_denominator_alternant(const RootSystem& rs);

// prod_{alpha > 0} prod_{i=0}^{k-1} (e^{alpha/2} - q^{-2i} e^{-alpha/2}).
// Throws std::invalid_argument for k < 1.
WeightPoly delta_k(const RootSystem& rs, int k);

// prod_{alpha > 0} prod_{i=first}^{last} (e^{alpha/2} - q^{-2i} e^{-alpha/2}).
WeightPoly deformed_denominator(const RootSystem& rs, int first, int last);

// sum_{w in W} (-1)^{|w|} e^{w lambda}; zero when lambda lies on a wall.
WeightPoly alternant(const RootSystem& rs, const Weight& lambda);

// chi_nu = alternant(nu + rho) / delta for any nu in P; zero when nu + rho
// lies on a wall. Throws std::invalid_argument when nu is not integral and
// std::logic_error if the division leaves a remainder.
WeightPoly weyl_character(const RootSystem& rs, const Weight& nu);

// dim_q L_nu = chi_nu(q^{2 rho}).
LaurentQ q_dimension(const RootSystem& rs, const Weight& nu);
// prod_{alpha > 0} [(nu + rho, alpha)] / [(rho, alpha)].
LaurentQ q_dimension_product(const RootSystem& rs, const Weight& nu);

// Orbit sum of e^w over W mu.
WeightPoly monomial_symmetric(const RootSystem& rs, const Weight& mu);

// Invariant under every simple reflection (hence under W).
bool is_w_invariant(const RootSystem& rs, const WeightPoly& f);

// Coefficients c_nu with f = sum c_nu chi_nu, obtained by peeling off the
// lexicographically largest weight. Throws std::invalid_argument when f is
// not W-invariant or has a non-integral weight.
std::map<Weight, LaurentQ> char_expand(const RootSystem& rs, const WeightPoly& f);

}  // namespace cmm
