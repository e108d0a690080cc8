#include "cmm/macdonald.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace cmm {

namespace {

using Matrix = std::vector<std::vector<LaurentQ>>;

LaurentQ exact_quotient(const LaurentQ& a, const LaurentQ& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("fraction-free elimination: inexact division");
  return *q;
}

// Fraction-free Gauss-Jordan on an r x (r+1) augmented matrix. On return
// every diagonal entry equals the same nonzero pivot d (up to the sign of
// row swaps, which cancels in the solution) and column r holds d * x.
void bareiss_gauss_jordan(Matrix& a) {
  const std::size_t r = a.size();
  LaurentQ prev(1);
  for (std::size_t k = 0; k < r; ++k) {
    std::size_t p = k;
    while (p < r && a[p][k].is_zero()) ++p;
    if (p == r) throw std::logic_error("singular Gram matrix in Macdonald construction");
    std::swap(a[p], a[k]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j <= r; ++j) {
        if (j == k) continue;
        a[i][j] = exact_quotient(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      }
      a[i][k] = LaurentQ();
    }
    prev = a[k][k];
  }
}

LaurentQ lcm(const LaurentQ& a, const LaurentQ& b) {
  LaurentQ l = exact_quotient(a * b, gcd(a, b));
  const Rational c = l.lowest().coeff;
  return l.shifted(-l.min_exponent()) * Rational(1 / c);
}

}  // namespace

RationalQ RationalWeightPoly::eval(const Weight& mu, const Rational& scale) const {
  return RationalQ(wp_eval(num, mu, scale), den);
}

std::string MacdonaldPoly::str() const {
  std::string out = "P" + lambda.str() + " = m" + lambda.str();
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    if (it->first == lambda || it->second.is_zero()) continue;
    const RationalQ& c = it->second;
    out += " + ";
    out += "(" + c.str() + ")";
    out += "*m" + it->first.str();
  }
  return out;
}

const WeightPoly& macdonald_weight(const RootSystem& rs, int k) {
  static std::shared_mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<WeightPoly>> cache;
  const std::pair<int, int> key{rs.n(), k};
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  const WeightPoly d = delta_k(rs, k);
  auto value = std::make_unique<WeightPoly>(wp_mul(d, d.bar()));
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.try_emplace(key, std::move(value));
  return *it->second;
}

LaurentQ inner_product_k(const RootSystem& rs, const WeightPoly& f, const WeightPoly& g, int k) {
  const WeightPoly weighted = wp_mul(macdonald_weight(rs, k), f);
  return const_term_of_product(weighted, g.bar()) * Rational(1, rs.weyl_order());
}

RationalQ inner_product_k(const RootSystem& rs, const RationalWeightPoly& f, const RationalWeightPoly& g, int k) {
  return RationalQ(inner_product_k(rs, f.num, g.num, k), f.den * g.den);
}

MacdonaldPoly macdonald_poly(const RootSystem& rs, const Weight& lambda, int k, SolveOrder order) {
  rs.check_rank(lambda);
  if (k < 1) throw std::invalid_argument("macdonald_poly needs k >= 1");
  if (!lambda.in_lattice() || !lambda.is_dominant()) {
    throw std::invalid_argument("macdonald_poly needs a dominant integral weight, got " + lambda.str());
  }
  std::vector<Weight> lower = rs.lower_dominant_weights(lambda);
  lower.pop_back();  // lambda itself
  if (order == SolveOrder::kReversed) std::reverse(lower.begin(), lower.end());
  const std::size_t r = lower.size();

  const WeightPoly& weight = macdonald_weight(rs, k);
  const WeightPoly m_lambda = monomial_symmetric(rs, lambda);
  std::vector<WeightPoly> m;
  std::vector<WeightPoly> weighted;
  for (const auto& mu : lower) {
    m.push_back(monomial_symmetric(rs, mu));
    weighted.push_back(wp_mul(weight, m.back()));
  }
  const WeightPoly weighted_lambda = wp_mul(weight, m_lambda);

  // Row i: sum_j c_j <m_j, m_i> = -<m_lambda, m_i>, common 1/|W| dropped.
  Matrix a(r, std::vector<LaurentQ>(r + 1));
  for (std::size_t i = 0; i < r; ++i) {
    const WeightPoly bar_mi = m[i].bar();
    for (std::size_t j = 0; j < r; ++j) a[i][j] = const_term_of_product(weighted[j], bar_mi);
    a[i][r] = -const_term_of_product(weighted_lambda, bar_mi);
  }
  bareiss_gauss_jordan(a);

  std::vector<RationalQ> coeffs;
  LaurentQ common(1);
  for (std::size_t j = 0; j < r; ++j) {
    coeffs.push_back(RationalQ(a[j][r], a[j][j]).reduced());
    common = lcm(common, coeffs.back().den());
  }

  MacdonaldPoly p;
  p.lambda = lambda;
  p.k = k;
  p.poly.den = common;
  p.poly.num = m_lambda * common;
  for (std::size_t j = 0; j < r; ++j) {
    p.poly.num += m[j] * (coeffs[j].num() * exact_quotient(common, coeffs[j].den()));
    p.coefficients.emplace_back(lower[j], coeffs[j]);
  }
  std::sort(p.coefficients.begin(), p.coefficients.end(),
            [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
  p.coefficients.emplace_back(lambda, RationalQ(1));
  return p;
}

WeightPoly phi0(const RootSystem& rs, int k) {
  if (k < 1) throw std::invalid_argument("phi0 needs k >= 1");
  return deformed_denominator(rs, 1, k - 1);
}

RationalWeightPoly phi(const RootSystem& rs, const MacdonaldPoly& p) {
  const WeightPoly base = phi0(rs, p.k);
  if (!(wp_mul(base, weyl_denominator(rs)) == delta_k(rs, p.k))) {
    throw std::logic_error("phi0 * delta != delta_k");
  }
  return {wp_mul(base, p.poly.num), p.poly.den};
}

RationalQ norm_direct(const RootSystem& rs, const MacdonaldPoly& p) {
  return inner_product_k(rs, p.poly, p.poly, p.k);
}

RationalQ norm_formula(const RootSystem& rs, const Weight& lambda, int k) {
  if (k < 1) throw std::invalid_argument("norm_formula needs k >= 1");
  const Weight shifted = lambda + Rational(k) * rs.rho();
  LaurentQ num(1);
  LaurentQ den(1);
  for (const auto& alpha : rs.positive_roots()) {
    const Rational a = inner(alpha, shifted);
    for (int i = 1; i <= k - 1; ++i) {
      const Rational top = -2 * a - 2 * i;
      const Rational bottom = -2 * a + 2 * i;
      if (bottom == 0) throw std::logic_error("norm_formula: vanishing denominator factor");
      num *= LaurentQ(1) - LaurentQ::q_power(top);
      den *= LaurentQ(1) - LaurentQ::q_power(bottom);
    }
  }
  return RationalQ(std::move(num), std::move(den));
}

std::shared_ptr<const MacdonaldPoly> MacdonaldCache::get(const RootSystem& rs, const Weight& lambda, int k) {
  Key key{rs.n(), k, lambda};
  {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(key);
    if (it != entries_.end()) return it->second;
  }
  auto value = std::make_shared<const MacdonaldPoly>(macdonald_poly(rs, lambda, k));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = entries_.try_emplace(std::move(key), std::move(value));
  return it->second;
}

std::size_t MacdonaldCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

}  // namespace cmm
