#pragma once

// Macdonald polynomials for A_{n-1} at parameters (q^2, t = q^{2k}),
// the constant-term inner product that defines them, the generalized
// characters phi_lambda = (delta_k / delta) P_lambda, and both routes to
// the norm ||P_lambda||^2.

#include "cmm/characters.hpp"

#include <map>
#include <memory>
#include <shared_mutex>
#include <tuple>
#include <utility>
#include <vector>

namespace cmm {

// A WeightPoly with RationalQ coefficients sharing one denominator.
struct RationalWeightPoly {
  WeightPoly num;
  LaurentQ den{1};

  RationalWeightPoly bar() const { return {num.bar(), den}; }
  // Substitutes e^nu -> q^{scale (nu, mu)}.
  RationalQ eval(const Weight& mu, const Rational& scale) const;
};

struct MacdonaldPoly {
  Weight lambda;
  int k = 1;
  // (mu, c_mu) for every dominant mu <= lambda, in canonical order; the
  // last entry is (lambda, 1).
  std::vector<std::pair<Weight, RationalQ>> coefficients;
  // poly = numerator / denominator.
  RationalWeightPoly poly;

  // "P[lambda] = m[lambda] + (c)*m[mu] + ..." with mu decreasing.
  std::string str() const;
};

// Order in which the unknown coefficients and orthogonality equations are
// arranged before elimination. The solution does not depend on it.
enum class SolveOrder { kCanonical, kReversed };

// delta_k * bar(delta_k), cached per (n, k).
const WeightPoly& macdonald_weight(const RootSystem& rs, int k);

// <f, g>_k = (1/|W|) CT(delta_k bar(delta_k) f bar(g)).
LaurentQ inner_product_k(const RootSystem& rs, const WeightPoly& f, const WeightPoly& g, int k);
RationalQ inner_product_k(const RootSystem& rs, const RationalWeightPoly& f, const RationalWeightPoly& g, int k);

// Unique m_lambda + sum_{mu < lambda} c_mu m_mu orthogonal to every m_mu,
// mu < lambda. Throws std::invalid_argument for a non-dominant or
// non-integral lambda or k < 1; std::logic_error if the Gram system is
// singular.
MacdonaldPoly macdonald_poly(const RootSystem& rs, const Weight& lambda, int k,
                             SolveOrder order = SolveOrder::kCanonical);

// prod_{alpha > 0} prod_{i=1}^{k-1} (e^{alpha/2} - q^{-2i} e^{-alpha/2}).
WeightPoly phi0(const RootSystem& rs, int k);
// phi_lambda = phi0 * P_lambda.
RationalWeightPoly phi(const RootSystem& rs, const MacdonaldPoly& p);

// <P_lambda, P_lambda>_k computed from the constant term.
RationalQ norm_direct(const RootSystem& rs, const MacdonaldPoly& p);
// prod_{alpha>0} prod_{i=1}^{k-1} (1 - q^{-2(alpha, lambda+k rho) - 2i}) / (1 - q^{-2(alpha, lambda+k rho) + 2i}).
RationalQ norm_formula(const RootSystem& rs, const Weight& lambda, int k);

// Thread-safe memo of macdonald_poly keyed by (n, k, lambda).
class MacdonaldCache {
 public:
  std::shared_ptr<const MacdonaldPoly> get(const RootSystem& rs, const Weight& lambda, int k);
  std::size_t size() const;

 private:
  using Key = std::tuple<int, int, Weight>;
  mutable std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const MacdonaldPoly>> entries_;
};

}  // namespace cmm
