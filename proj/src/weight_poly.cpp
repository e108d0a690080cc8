#include "cmm/weight_poly.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cmm {

WeightPoly WeightPoly::monomial(const Weight& w, LaurentQ coeff) {
  WeightPoly p;
  if (!coeff.is_zero()) p.terms_.emplace(w, std::move(coeff));
  return p;
}

WeightPoly WeightPoly::constant(int n, LaurentQ coeff) { return monomial(Weight::zero(n), std::move(coeff)); }

LaurentQ WeightPoly::coeff(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentQ{} : it->second;
}

const Weight& WeightPoly::leading_weight() const {
  if (terms_.empty()) throw std::logic_error("leading_weight of zero WeightPoly");
  return terms_.rbegin()->first;
}

void WeightPoly::add_term(const Weight& w, const LaurentQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeightPoly WeightPoly::bar() const {
  WeightPoly p;
  for (const auto& [w, c] : terms_) p.terms_.emplace(-w, c);
  return p;
}

WeightPoly WeightPoly::permuted(std::span<const int> perm) const {
  WeightPoly p;
  for (const auto& [w, c] : terms_) p.terms_.emplace(w.permuted(perm), c);
  return p;
}

bool WeightPoly::all_in_lattice() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.in_lattice(); });
}

WeightPoly WeightPoly::operator-() const {
  WeightPoly p = *this;
  for (auto& [w, c] : p.terms_) c = -c;
  return p;
}

WeightPoly& WeightPoly::operator+=(const WeightPoly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

WeightPoly& WeightPoly::operator-=(const WeightPoly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

WeightPoly& WeightPoly::operator*=(const LaurentQ& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

WeightPoly operator*(const WeightPoly& a, const WeightPoly& b) { return wp_mul(a, b); }

std::string WeightPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto* x, const auto* y) { return canonical_less(y->first, x->first); });
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out += " + ";
    out += "(" + order[i]->second.str() + ")*e" + order[i]->first.str();
  }
  return out;
}

WeightPoly parse_weight_poly(std::string_view text) {
  auto fail = [&]() { throw std::invalid_argument("malformed weight polynomial '" + std::string(text) + "'"); };
  WeightPoly out;
  if (text == "0") return out;
  std::size_t pos = 0;
  while (true) {
    if (pos >= text.size() || text[pos] != '(') fail();
    int depth = 0;
    std::size_t close = pos;
    for (; close < text.size(); ++close) {
      if (text[close] == '(') ++depth;
      if (text[close] == ')' && --depth == 0) break;
    }
    if (close >= text.size() || text.substr(close, 3) != ")*e") fail();
    const LaurentQ c = parse_laurent(text.substr(pos + 1, close - pos - 1));
    const std::size_t wstart = close + 3;
    const std::size_t wend = text.find(']', wstart);
    if (wend == std::string_view::npos) fail();
    const Weight w = parse_weight(text.substr(wstart, wend - wstart + 1));
    if (c.is_zero() || out.terms().count(w)) fail();
    out.add_term(w, c);
    pos = wend + 1;
    if (pos == text.size()) break;
    if (text.substr(pos, 3) != " + ") fail();
    pos += 3;
  }
  if (out.str() != text) fail();
  return out;
}

WeightPoly wp_mul(const WeightPoly& f, const WeightPoly& g) {
  WeightPoly out;
  for (const auto& [wf, cf] : f.terms()) {
    for (const auto& [wg, cg] : g.terms()) out.add_term(wf + wg, cf * cg);
  }
  return out;
}

WeightPoly wp_mul_parallel(const WeightPoly& f, const WeightPoly& g, int threads) {
#ifdef _OPENMP
  std::vector<const WeightPoly::TermMap::value_type*> left;
  left.reserve(f.size());
  for (const auto& t : f.terms()) left.push_back(&t);
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
  std::vector<WeightPoly> partial(static_cast<std::size_t>(nthreads));
  const long count = static_cast<long>(left.size());
#pragma omp parallel for num_threads(nthreads) schedule(static)
  for (long i = 0; i < count; ++i) {
    WeightPoly& acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
    const auto& [wf, cf] = *left[static_cast<std::size_t>(i)];
    for (const auto& [wg, cg] : g.terms()) acc.add_term(wf + wg, cf * cg);
  }
  WeightPoly out;
  for (const auto& p : partial) out += p;
  return out;
#else
  (void)threads;
  return wp_mul(f, g);
#endif
}

LaurentQ wp_eval(const WeightPoly& f, const Weight& mu, const Rational& scale) {
  LaurentQ acc;
  for (const auto& [w, c] : f.terms()) acc += c.shifted(scale * inner(w, mu));
  return acc;
}

LaurentQ const_term(const WeightPoly& f) {
  if (f.is_zero()) return {};
  return f.coeff(Weight::zero(f.terms().begin()->first.rank()));
}

LaurentQ const_term_of_product(const WeightPoly& f, const WeightPoly& g) {
  LaurentQ acc;
  for (const auto& [w, c] : f.terms()) {
    auto it = g.terms().find(-w);
    if (it != g.terms().end()) acc += c * it->second;
  }
  return acc;
}

std::optional<WeightPoly> wp_divide_exact(const WeightPoly& f, const WeightPoly& g) {
  if (g.is_zero()) throw std::domain_error("division by zero WeightPoly");
  if (f.is_zero()) return WeightPoly{};
  const int n = g.leading_weight().rank();

  // The Newton polytope of f is the Minkowski sum of those of the quotient
  // and g, which bounds every coordinate of the quotient's support.
  auto coord_range = [n](const WeightPoly& p) {
    std::vector<Rational> lo(p.terms().begin()->first.coords());
    std::vector<Rational> hi = lo;
    for (const auto& [w, c] : p.terms()) {
      for (int i = 0; i < n; ++i) {
        if (w[i] < lo[i]) lo[i] = w[i];
        if (w[i] > hi[i]) hi[i] = w[i];
      }
    }
    return std::pair{lo, hi};
  };
  const auto [flo, fhi] = coord_range(f);
  const auto [glo, ghi] = coord_range(g);

  const Weight& lead_w = g.leading_weight();
  const LaurentQ& lead_c = g.terms().rbegin()->second;
  WeightPoly rem = f;
  WeightPoly quotient;
  while (!rem.is_zero()) {
    const Weight qw = rem.leading_weight() - lead_w;
    for (int i = 0; i < n; ++i) {
      if (qw[i] < flo[i] - glo[i] || qw[i] > fhi[i] - ghi[i]) return std::nullopt;
    }
    auto qc = divide_exact(rem.terms().rbegin()->second, lead_c);
    if (!qc) return std::nullopt;
    for (const auto& [w, c] : g.terms()) rem.add_term(qw + w, -(*qc * c));
    quotient.add_term(qw, *qc);
  }
  return quotient;
}

}  // namespace cmm
