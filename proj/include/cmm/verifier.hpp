#pragma once

// Exact checks of the constant-term identity
//   (1/|W|) CT(delta_k bar(delta_k) P_lambda bar(P_mu) gamma)
// against its two product forms, the character-expansion corollary, the
// lambda <-> mu symmetry of the right-hand side and the norm formula, plus
// serial and OpenMP runners over parameter grids.

#include "cmm/gaussian.hpp"
#include "cmm/macdonald.hpp"

#include <cstdint>
#include <functional>
#include <map>

namespace cmm {

struct CmmInstance {
  int n = 2;
  int k = 1;
  Weight lambda;
  Weight mu;

  // Throws std::invalid_argument unless n >= 2, k >= 1 and both weights are
  // dominant, integral and of rank n.
  void validate() const;
};

// Process-wide cache used when no cache is passed explicitly.
MacdonaldCache& default_cache();

// Computed twice, from delta_k bar(delta_k) P_lambda bar(P_mu) and from
// delta bar(delta) phi_lambda bar(phi_mu); throws std::logic_error if the two
// integrands differ.
RationalQ cmm_lhs(const CmmInstance& inst, MacdonaldCache& cache = default_cache());
// q^{(lambda,lambda)+(mu,mu+2k rho)} P_mu(q^{-2(lambda+k rho)}) q^{-2k(k-1)|R+|}
//   prod_{alpha>0} prod_{i=0}^{k-1} (1 - q^{2(alpha, lambda+k rho)+2i})
RationalQ cmm_rhs_eq1(const CmmInstance& inst, MacdonaldCache& cache = default_cache());
// q^{(lambda+k rho)^2 + (mu+k rho)^2 - 2 rho^2} phi_mu(q^{-2(lambda+k rho)})
//   prod_{alpha>0} (1 - q^{2(alpha,rho)}) ||P_lambda||^2 dim_q(lambda+(k-1)rho)
RationalQ cmm_rhs_eq8(const CmmInstance& inst, MacdonaldCache& cache = default_cache());

// Compares cmm_lhs with the selected right-hand side (kEq1 or kEq8); passes
// only if all three values agree. The other right-hand side is recorded in
// the details, with their ratio when they differ.
VerificationReport verify_cmm(const CmmInstance& inst, IdentityId which = IdentityId::kEq1,
                              MacdonaldCache& cache = default_cache());

// (1/|W|) CT(delta bar(delta) phi_lambda bar(phi_mu) sum_nu a_nu chi_nu)
// against sum_nu a_{nu*} C^nu, where phi_lambda bar(phi_mu) = sum_nu C^nu chi_nu.
VerificationReport verify_eq7(const CmmInstance& inst, const std::map<Weight, LaurentQ>& a,
                              MacdonaldCache& cache = default_cache());
// Deterministic pseudo-random map with at most three dominant support points.
std::map<Weight, LaurentQ> eq7_coefficients(const CmmInstance& inst, std::uint32_t seed = 0);

// cmm_rhs_eq8(lambda, mu) against cmm_rhs_eq8(mu, lambda).
VerificationReport verify_symmetry(const CmmInstance& inst, MacdonaldCache& cache = default_cache());
// Constant-term norm of P_lambda against the product formula.
VerificationReport verify_norm(const RootSystem& rs, const Weight& lambda, int k,
                               MacdonaldCache& cache = default_cache());

struct GridBlock {
  int n = 2;
  std::vector<int> ks;
  long max_coeff = 0;
};

// n = 2: k in {1,2,3}, coefficients <= 3; n = 3: k in {1,2}, coefficients <= 2.
std::vector<GridBlock> default_grid();
// Every (k, lambda, mu) with dominant weights whose fundamental
// coefficients are <= max_coeff, ordered by n, k, lambda, mu.
std::vector<CmmInstance> grid_instances(const std::vector<GridBlock>& grid);

using InstanceCheck = std::function<VerificationReport(const CmmInstance&)>;

// Runs the check on every instance; an exception becomes a failed report
// with identity `id` carrying the message. Output order follows the input.
std::vector<VerificationReport> run_grid_serial(const std::vector<CmmInstance>& instances, IdentityId id,
                                                const InstanceCheck& check);
// Same contract on `threads` OpenMP threads (0 = runtime default).
std::vector<VerificationReport> run_grid_parallel(const std::vector<CmmInstance>& instances, IdentityId id,
                                                  const InstanceCheck& check, int threads);

}  // namespace cmm
