#include "cmm/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cmm {

Weight::Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {
  Rational sum = 0;
  for (const auto& c : coords_) sum += c;
  if (sum != 0) throw std::invalid_argument("weight coordinates must sum to zero");
}

Weight Weight::zero(int n) {
  Weight w;
  w.coords_.assign(static_cast<std::size_t>(n), Rational(0));
  return w;
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool Weight::in_lattice() const {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (!is_integer(coords_[i] - coords_[0])) return false;
  }
  return true;
}

bool Weight::is_dominant() const {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (coords_[i - 1] < coords_[i]) return false;
  }
  return true;
}

bool Weight::has_repeated_coordinate() const {
  std::vector<Rational> sorted = coords_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

Weight Weight::permuted(std::span<const int> perm) const {
  Weight w;
  w.coords_.reserve(coords_.size());
  for (int p : perm) w.coords_.push_back(coords_[static_cast<std::size_t>(p)]);
  return w;
}

Weight Weight::dominant_representative() const {
  Weight w = *this;
  std::sort(w.coords_.begin(), w.coords_.end(), std::greater<>());
  return w;
}

Weight Weight::operator-() const {
  Weight w = *this;
  for (auto& c : w.coords_) c = -c;
  return w;
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.coords_.size() != coords_.size()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (other.coords_.size() != coords_.size()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Weight operator*(const Rational& s, Weight w) {
  for (auto& c : w.coords_) c *= s;
  return w;
}

std::strong_ordering Weight::operator<=>(const Weight& other) const {
  const std::size_t m = std::min(coords_.size(), other.coords_.size());
  for (std::size_t i = 0; i < m; ++i) {
    const int c = cmp(coords_[i], other.coords_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return coords_.size() <=> other.coords_.size();
}

std::string Weight::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += to_string(coords_[i]);
  }
  return out + "]";
}

Weight parse_weight(std::string_view text) {
  auto fail = [&]() { throw std::invalid_argument("malformed weight '" + std::string(text) + "'"); };
  if (text.size() < 3 || text.front() != '[' || text.back() != ']') fail();
  std::vector<Rational> coords;
  std::string_view body = text.substr(1, text.size() - 2);
  while (true) {
    const auto comma = body.find(',');
    coords.push_back(parse_rational(body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  Weight w(std::move(coords));
  if (w.str() != text) fail();
  return w;
}

Rational inner(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("inner product of weights of different rank");
  Rational s = 0;
  for (std::size_t i = 0; i < a.coords().size(); ++i) s += a[i] * b[i];
  return s;
}

bool canonical_less(const Weight& a, const Weight& b) {
  const int c = cmp(norm2(a), norm2(b));
  if (c != 0) return c < 0;
  return a < b;
}

RootSystem::RootSystem(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("root system A_{n-1} needs n >= 2");
  auto unit_diff = [n](int i, int j) {
    std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
    c[i] = 1;
    c[j] = -1;
    return Weight(std::move(c));
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) positive_roots_.push_back(unit_diff(i, j));
  }
  for (int i = 0; i + 1 < n; ++i) simple_roots_.push_back(unit_diff(i, i + 1));
  for (int i = 1; i < n; ++i) {
    std::vector<Rational> c(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) c[j] = Rational(j < i ? n - i : -i, n);
    for (auto& x : c) x.canonicalize();
    fundamental_weights_.emplace_back(std::move(c));
  }
  std::vector<Rational> r(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    r[j] = Rational(n - 1 - 2 * j, 2);
    r[j].canonicalize();
  }
  rho_ = Weight(std::move(r));

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    weyl_group_.push_back({perm, inversions % 2 ? -1 : 1});
  } while (std::next_permutation(perm.begin(), perm.end()));
}

void RootSystem::check_rank(const Weight& w) const {
  if (w.rank() != n_) throw std::invalid_argument("weight " + w.str() + " has wrong rank for A_" + std::to_string(n_ - 1));
}

Weight RootSystem::from_fundamental(std::span<const long> coeffs) const {
  if (static_cast<int>(coeffs.size()) != n_ - 1) {
    throw std::invalid_argument("expected " + std::to_string(n_ - 1) + " fundamental coefficients");
  }
  Weight w = zero();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] < 0) throw std::invalid_argument("fundamental coefficients must be nonnegative");
    w += Rational(coeffs[i]) * fundamental_weights_[i];
  }
  return w;
}

std::vector<Rational> RootSystem::fundamental_coefficients(const Weight& w) const {
  check_rank(w);
  std::vector<Rational> a;
  for (int i = 0; i + 1 < n_; ++i) a.push_back(w[i] - w[i + 1]);
  return a;
}

std::vector<Weight> RootSystem::weyl_orbit(const Weight& w) const {
  check_rank(w);
  std::vector<Rational> c = w.coords();
  std::sort(c.begin(), c.end());
  std::vector<Weight> out;
  do {
    out.emplace_back(c);
  } while (std::next_permutation(c.begin(), c.end()));
  return out;
}

SignedOrbit RootSystem::signed_orbit(const Weight& w) const {
  check_rank(w);
  SignedOrbit orbit;
  orbit.degenerate = w.has_repeated_coordinate();
  orbit.terms.reserve(weyl_group_.size());
  for (const auto& g : weyl_group_) orbit.terms.push_back({w.permuted(g.perm), g.sign});
  return orbit;
}

bool RootSystem::dominance_le(const Weight& mu, const Weight& lambda) const {
  check_rank(mu);
  check_rank(lambda);
  const Weight diff = lambda - mu;
  Rational partial = 0;
  for (int i = 0; i < n_; ++i) {
    if (!is_integer(diff[i])) throw std::invalid_argument("dominance_le: weights in different cosets of P/Q");
  }
  for (int i = 0; i + 1 < n_; ++i) {
    partial += diff[i];
    if (partial < 0) return false;
  }
  return true;
}

std::vector<Weight> RootSystem::lower_dominant_weights(const Weight& lambda) const {
  check_rank(lambda);
  if (!lambda.in_lattice() || !lambda.is_dominant()) {
    throw std::invalid_argument("lower_dominant_weights needs a dominant integral weight");
  }
  // Dominant mu <= lambda lie in lambda + Q, so every coordinate is
  // congruent to lambda_i mod 1 and lies in [lambda_n, lambda_1].
  const Rational hi = lambda[0];
  const Rational lo = lambda[n_ - 1];
  std::vector<Weight> out;
  std::vector<Rational> mu(static_cast<std::size_t>(n_));
  // partial = sum_{j<i} (lambda_j - mu_j) must stay >= 0.
  auto recurse = [&](auto& self, int i, const Rational& upper, const Rational& partial) -> void {
    if (i == n_ - 1) {
      mu[i] = -std::accumulate(mu.begin(), mu.begin() + i, Rational(0));
      if (mu[i] > upper || mu[i] < lo) return;
      out.emplace_back(mu);
      return;
    }
    // upper is congruent to lambda_i mod 1, so candidates step down from it.
    for (Rational c = upper; c >= lo; c -= 1) {
      const Rational next_partial = partial + lambda[i] - c;
      if (next_partial < 0) continue;
      mu[i] = c;
      self(self, i + 1, c, next_partial);
    }
  };
  recurse(recurse, 0, hi, Rational(0));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Weight RootSystem::star(const Weight& nu) const {
  check_rank(nu);
  return (-nu).dominant_representative();
}

std::vector<Weight> RootSystem::weights_in_ball(const Rational& radius2) const {
  if (radius2 < 0) throw std::invalid_argument("weights_in_ball: negative radius");
  // a_i = (lambda, alpha_i) and |alpha_i|^2 = 2, so |a_i| <= sqrt(2 r).
  Integer bound;
  {
    Rational two_r = 2 * radius2;
    Integer fl = two_r.get_num() / two_r.get_den();
    mpz_sqrt(bound.get_mpz_t(), fl.get_mpz_t());
  }
  const long b = bound.get_si();
  std::vector<Weight> out;
  std::vector<long> a(static_cast<std::size_t>(n_ - 1), -b);
  while (true) {
    Weight w = zero();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != 0) w += Rational(a[i]) * fundamental_weights_[i];
    }
    if (norm2(w) <= radius2) out.push_back(std::move(w));
    std::size_t i = 0;
    while (i < a.size() && a[i] == b) a[i++] = -b;
    if (i == a.size()) break;
    ++a[i];
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace cmm
