#include "cmm/verifier.hpp"

#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cmm {

namespace {

ReportParams params_of(const CmmInstance& inst) {
  ReportParams p;
  p.n = inst.n;
  p.k = inst.k;
  p.lambda = inst.lambda;
  p.mu = inst.mu;
  return p;
}

LaurentQ q_pow(const Rational& e) { return LaurentQ::q_power(e); }

// All vectors in [0, bound]^len, lexicographic.
std::vector<std::vector<long>> coefficient_vectors(int len, long bound) {
  std::vector<std::vector<long>> out{{}};
  for (int i = 0; i < len; ++i) {
    std::vector<std::vector<long>> next;
    for (const auto& v : out) {
      for (long c = 0; c <= bound; ++c) {
        next.push_back(v);
        next.back().push_back(c);
      }
    }
    out = std::move(next);
  }
  return out;
}

VerificationReport error_report(const CmmInstance& inst, IdentityId id, const std::string& what) {
  VerificationReport r;
  r.id = id;
  r.params = params_of(inst);
  r.lhs = RationalQ();
  r.rhs = RationalQ();
  r.passed = false;
  r.details.emplace_back("error", what);
  return r;
}

VerificationReport guarded(const CmmInstance& inst, IdentityId id, const InstanceCheck& check) {
  try {
    return check(inst);
  } catch (const std::exception& e) {
    return error_report(inst, id, e.what());
  }
}

}  // namespace

void CmmInstance::validate() const {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  for (const Weight* w : {&lambda, &mu}) {
    if (w->rank() != n) throw std::invalid_argument("weight " + w->str() + " does not have rank " + std::to_string(n));
    if (!w->in_lattice() || !w->is_dominant()) {
      throw std::invalid_argument("weight " + w->str() + " is not dominant integral");
    }
  }
}

MacdonaldCache& default_cache() {
  static MacdonaldCache cache;
  return cache;
}

RationalQ cmm_lhs(const CmmInstance& inst, MacdonaldCache& cache) {
  inst.validate();
  const RootSystem rs(inst.n);
  const auto pl = cache.get(rs, inst.lambda, inst.k);
  const auto pm = cache.get(rs, inst.mu, inst.k);

  const WeightPoly p_form = wp_mul(wp_mul(macdonald_weight(rs, inst.k), pl->poly.num), pm->poly.num.bar());

  const RationalWeightPoly phi_l = phi(rs, *pl);
  const RationalWeightPoly phi_m = phi(rs, *pm);
  const WeightPoly phi_form = wp_mul(wp_mul(macdonald_weight(rs, 1), phi_l.num), phi_m.num.bar());
  if (!(p_form == phi_form)) throw std::logic_error("cmm_lhs: P-form and phi-form integrands differ");

  const LaurentQ den = pl->poly.den * pm->poly.den * Rational(rs.weyl_order());
  return RationalQ(gaussian_pairing(p_form), den).reduced();
}

RationalQ cmm_rhs_eq1(const CmmInstance& inst, MacdonaldCache& cache) {
  inst.validate();
  const RootSystem rs(inst.n);
  const int k = inst.k;
  const Weight krho = Rational(k) * rs.rho();
  const Weight shifted = inst.lambda + krho;
  const auto pm = cache.get(rs, inst.mu, k);

  LaurentQ mono = q_pow(norm2(inst.lambda) + inner(inst.mu, inst.mu + 2 * krho) -
                        Rational(2 * k * (k - 1) * rs.num_positive_roots()));
  for (const auto& alpha : rs.positive_roots()) {
    for (int i = 0; i < k; ++i) mono *= LaurentQ(1) - q_pow(2 * inner(alpha, shifted) + 2 * i);
  }
  return (RationalQ(mono) * pm->poly.eval(shifted, -2)).reduced();
}

RationalQ cmm_rhs_eq8(const CmmInstance& inst, MacdonaldCache& cache) {
  inst.validate();
  const RootSystem rs(inst.n);
  const int k = inst.k;
  const Weight krho = Rational(k) * rs.rho();
  const Weight shifted = inst.lambda + krho;
  const auto pl = cache.get(rs, inst.lambda, k);
  const auto pm = cache.get(rs, inst.mu, k);

  const RationalQ norm = norm_direct(rs, *pl);
  if (!(norm == norm_formula(rs, inst.lambda, k))) {
    throw std::logic_error("cmm_rhs_eq8: norm formula disagrees with the constant-term norm");
  }

  LaurentQ mono = q_pow(norm2(shifted) + norm2(inst.mu + krho) - 2 * norm2(rs.rho()));
  for (const auto& alpha : rs.positive_roots()) mono *= LaurentQ(1) - q_pow(2 * inner(alpha, rs.rho()));
  mono *= q_dimension(rs, inst.lambda + Rational(k - 1) * rs.rho());
  return (RationalQ(mono) * phi(rs, *pm).eval(shifted, -2) * norm).reduced();
}

VerificationReport verify_cmm(const CmmInstance& inst, IdentityId which, MacdonaldCache& cache) {
  if (which != IdentityId::kEq1 && which != IdentityId::kEq8) {
    throw std::invalid_argument("verify_cmm compares against eq1 or eq8 only");
  }
  Stopwatch clock;
  VerificationReport r;
  r.id = which;
  r.params = params_of(inst);
  const RationalQ lhs = cmm_lhs(inst, cache);
  const RationalQ eq1 = cmm_rhs_eq1(inst, cache);
  const RationalQ eq8 = cmm_rhs_eq8(inst, cache);
  const bool forms_agree = eq1 == eq8;
  settle(r, lhs, which == IdentityId::kEq1 ? eq1 : eq8);
  r.passed = r.passed && forms_agree;
  r.details.emplace_back(which == IdentityId::kEq1 ? "rhs_eq8" : "rhs_eq1",
                         (which == IdentityId::kEq1 ? eq8 : eq1).str());
  if (!forms_agree && !eq8.is_zero()) r.details.emplace_back("eq1_over_eq8", (eq1 / eq8).reduced().str());
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport verify_eq7(const CmmInstance& inst, const std::map<Weight, LaurentQ>& a, MacdonaldCache& cache) {
  inst.validate();
  Stopwatch clock;
  const RootSystem rs(inst.n);
  WeightPoly chi_sum;
  for (const auto& [nu, c] : a) {
    rs.check_rank(nu);
    if (!nu.in_lattice() || !nu.is_dominant()) {
      throw std::invalid_argument("eq7: support weight " + nu.str() + " is not dominant integral");
    }
    chi_sum += weyl_character(rs, nu) * c;
  }
  const RationalWeightPoly phi_l = phi(rs, *cache.get(rs, inst.lambda, inst.k));
  const RationalWeightPoly phi_m = phi(rs, *cache.get(rs, inst.mu, inst.k));
  const LaurentQ den = phi_l.den * phi_m.den;

  const WeightPoly product = wp_mul(phi_l.num, phi_m.num.bar());
  const LaurentQ ct = const_term_of_product(wp_mul(macdonald_weight(rs, 1), product), chi_sum);
  RationalQ lhs(ct * Rational(1, rs.weyl_order()), den);

  LaurentQ sum;
  const auto expansion = char_expand(rs, product);
  for (const auto& [nu, c] : expansion) {
    auto it = a.find(rs.star(nu));
    if (it != a.end()) sum += it->second * c;
  }
  RationalQ rhs(sum, den);

  VerificationReport r;
  r.id = IdentityId::kEq7;
  r.params = params_of(inst);
  settle(r, lhs.reduced(), rhs.reduced());
  std::string support;
  for (const auto& [nu, c] : a) support += (support.empty() ? "" : " + ") + ("(" + c.str() + ")*chi" + nu.str());
  r.details.emplace_back("a", support.empty() ? "0" : support);
  r.details.emplace_back("characters", std::to_string(expansion.size()));
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

std::map<Weight, LaurentQ> eq7_coefficients(const CmmInstance& inst, std::uint32_t seed) {
  inst.validate();
  const RootSystem rs(inst.n);
  std::vector<std::uint32_t> key{seed, static_cast<std::uint32_t>(inst.n), static_cast<std::uint32_t>(inst.k)};
  for (const Weight* w : {&inst.lambda, &inst.mu}) {
    for (const auto& c : rs.fundamental_coefficients(*w)) key.push_back(static_cast<std::uint32_t>(c.get_num().get_ui()));
  }
  std::seed_seq seq(key.begin(), key.end());
  std::mt19937 rng(seq);
  std::uniform_int_distribution<int> support(1, 3);
  std::uniform_int_distribution<long> coeff(0, 2);
  std::uniform_int_distribution<int> exp(-2, 2);
  std::uniform_int_distribution<int> val(-3, 3);
  std::map<Weight, LaurentQ> a;
  const int count = support(rng);
  for (int i = 0; i < count; ++i) {
    std::vector<long> fc(static_cast<std::size_t>(inst.n - 1));
    for (auto& c : fc) c = coeff(rng);
    LaurentQ c;
    while (c.is_zero()) c = LaurentQ::monomial(val(rng), exp(rng)) + LaurentQ::monomial(val(rng), exp(rng));
    a[rs.from_fundamental(fc)] = c;
  }
  return a;
}

VerificationReport verify_symmetry(const CmmInstance& inst, MacdonaldCache& cache) {
  Stopwatch clock;
  CmmInstance swapped = inst;
  std::swap(swapped.lambda, swapped.mu);
  VerificationReport r;
  r.id = IdentityId::kSymmetry;
  r.params = params_of(inst);
  settle(r, cmm_rhs_eq8(inst, cache), cmm_rhs_eq8(swapped, cache));
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport verify_norm(const RootSystem& rs, const Weight& lambda, int k, MacdonaldCache& cache) {
  Stopwatch clock;
  VerificationReport r;
  r.id = IdentityId::kNorm;
  r.params.n = rs.n();
  r.params.k = k;
  r.params.lambda = lambda;
  const auto p = cache.get(rs, lambda, k);
  settle(r, norm_direct(rs, *p).reduced(), norm_formula(rs, lambda, k).reduced());
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

std::vector<GridBlock> default_grid() { return {{2, {1, 2, 3}, 3}, {3, {1, 2}, 2}}; }

std::vector<CmmInstance> grid_instances(const std::vector<GridBlock>& grid) {
  std::vector<CmmInstance> out;
  for (const auto& block : grid) {
    const RootSystem rs(block.n);
    std::vector<Weight> weights;
    for (const auto& v : coefficient_vectors(block.n - 1, block.max_coeff)) weights.push_back(rs.from_fundamental(v));
    for (int k : block.ks) {
      for (const auto& l : weights) {
        for (const auto& m : weights) out.push_back({block.n, k, l, m});
      }
    }
  }
  return out;
}

std::vector<VerificationReport> run_grid_serial(const std::vector<CmmInstance>& instances, IdentityId id,
                                                const InstanceCheck& check) {
  std::vector<VerificationReport> out;
  out.reserve(instances.size());
  for (const auto& inst : instances) out.push_back(guarded(inst, id, check));
  return out;
}

std::vector<VerificationReport> run_grid_parallel(const std::vector<CmmInstance>& instances, IdentityId id,
                                                  const InstanceCheck& check, int threads) {
#ifdef _OPENMP
  std::vector<VerificationReport> out(instances.size());
  const long count = static_cast<long>(instances.size());
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for num_threads(nthreads) schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    out[idx] = guarded(instances[idx], id, check);
  }
  return out;
#else
  (void)threads;
  return run_grid_serial(instances, id, check);
#endif
}

}  // namespace cmm
