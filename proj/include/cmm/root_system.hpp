#pragma once

// Root system A_{n-1}: weights in epsilon-coordinates (zero-sum rational
// vectors), positive roots e_i - e_j, the Weyl group S_n acting by
// coordinate permutation, and the dominance order.

#include "cmm/rational.hpp"

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace cmm {

class Weight {
 public:
  Weight() = default;
  // Throws std::invalid_argument unless the coordinates sum to zero.
  explicit Weight(std::vector<Rational> coords);
  static Weight zero(int n);

  int rank() const { return static_cast<int>(coords_.size()); }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  bool is_zero() const;
  // Member of the weight lattice P: all coordinate differences integral.
  bool in_lattice() const;
  // Weakly decreasing coordinates.
  bool is_dominant() const;
  // Coordinates carry a repeated value (the weight lies on a wall).
  bool has_repeated_coordinate() const;

  // (w lambda)_i = lambda_{perm[i]}.
  Weight permuted(std::span<const int> perm) const;
  // Coordinates sorted decreasingly.
  Weight dominant_representative() const;

  Weight operator-() const;
  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& s, Weight w);

  bool operator==(const Weight& other) const { return coords_ == other.coords_; }
  // Lexicographic on coordinates; translation invariant.
  std::strong_ordering operator<=>(const Weight& other) const;

  // "[p1/r1,...,pn/rn]" with integral entries written without "/1".
  std::string str() const;

 private:
  std::vector<Rational> coords_;
};

// Standard dot product of epsilon-coordinates. Throws on rank mismatch.
// Inverse of Weight::str; rejects non-canonical text.
Weight parse_weight(std::string_view text);

Rational inner(const Weight& a, const Weight& b);
inline Rational norm2(const Weight& a) { return inner(a, a); }

// Total order used for stable output: increasing (w, w), then lexicographic.
bool canonical_less(const Weight& a, const Weight& b);

struct WeylElement {
  std::vector<int> perm;
  int sign;  // (-1)^{length}
};

struct SignedTerm {
  Weight weight;
  int sign;
};

struct SignedOrbit {
  std::vector<SignedTerm> terms;  // one entry per Weyl group element
  // The weight has a repeated coordinate, so the alternating sum vanishes.
  bool degenerate = false;
};

class RootSystem {
 public:
  // Type A_{n-1}; n >= 2.
  explicit RootSystem(int n);

  int n() const { return n_; }
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const std::vector<Weight>& fundamental_weights() const { return fundamental_weights_; }
  const Weight& rho() const { return rho_; }
  int num_positive_roots() const { return static_cast<int>(positive_roots_.size()); }
  long weyl_order() const { return static_cast<long>(weyl_group_.size()); }
  const std::vector<WeylElement>& weyl_group() const { return weyl_group_; }

  Weight zero() const { return Weight::zero(n_); }

  // sum a_i omega_i; throws std::invalid_argument on a negative entry or
  // a length other than n-1.
  Weight from_fundamental(std::span<const long> coeffs) const;
  // a_i = (lambda, alpha_i) = lambda_i - lambda_{i+1}.
  std::vector<Rational> fundamental_coefficients(const Weight& w) const;

  // Distinct permutations of w, sorted lexicographically.
  std::vector<Weight> weyl_orbit(const Weight& w) const;
  SignedOrbit signed_orbit(const Weight& w) const;

  // mu <= lambda in dominance. Throws std::invalid_argument when
  // lambda - mu is not in the root lattice.
  bool dominance_le(const Weight& mu, const Weight& lambda) const;
  // Dominant mu <= lambda, sorted by canonical_less (lambda last).
  std::vector<Weight> lower_dominant_weights(const Weight& lambda) const;
  // Highest weight of the dual: dominant representative of -nu.
  Weight star(const Weight& nu) const;
  // All lambda in P with (lambda, lambda) <= radius2, sorted by canonical_less.
  std::vector<Weight> weights_in_ball(const Rational& radius2) const;

  void check_rank(const Weight& w) const;

 private:
  int n_;
  std::vector<Weight> positive_roots_;
  std::vector<Weight> simple_roots_;
  std::vector<Weight> fundamental_weights_;
  Weight rho_;
  std::vector<WeylElement> weyl_group_;
};

}  // namespace cmm
