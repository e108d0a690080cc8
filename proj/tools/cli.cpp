#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <ostream>
#include <set>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cmm::cli {

namespace {

const std::vector<std::string> kIdentities{"eq1", "eq8", "eq7", "prop1", "eq5", "norms", "symmetry", "gauss-eval", "all"};

struct RawOptions {
  int n = 2;
  int k = 1;
  std::string lambda;
  std::string mu;
  std::string order;
  long max_coeff = 0;
  std::string format = "text";
  std::string out;
  int threads = 1;
  bool expand = false;
  std::string identity;
  std::map<std::string, CLI::Option*> opts;
};

void add_common(CLI::App* sub, RawOptions& raw) {
  raw.opts["n"] = sub->add_option("--n", raw.n, "Rank parameter n of A_{n-1} (n >= 2)");
  raw.opts["k"] = sub->add_option("--k", raw.k, "Positive integer k (t = q^{2k})");
  raw.opts["lambda"] = sub->add_option("--lambda", raw.lambda, "Fundamental coefficients a1,..,a_{n-1}");
  raw.opts["mu"] = sub->add_option("--mu", raw.mu, "Fundamental coefficients a1,..,a_{n-1}");
  raw.opts["order"] = sub->add_option("--order", raw.order, "Truncation order p/r for q-series checks");
  raw.opts["max-coeff"] = sub->add_option("--max-coeff", raw.max_coeff, "Grid bound on fundamental coefficients");
  raw.opts["format"] =
      sub->add_option("--format", raw.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  raw.opts["out"] = sub->add_option("--out", raw.out, "Write output to this file");
  raw.opts["threads"] = sub->add_option("--threads", raw.threads, "Worker threads (overrides CMM_THREADS)");
}

std::vector<long> parse_coeffs(const std::string& text) {
  std::vector<long> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (piece.empty() || used != piece.size()) throw std::invalid_argument("bad coefficient list '" + text + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int default_threads() {
  if (const char* env = std::getenv("CMM_THREADS")) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(env, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || env[used] != '\0' || v < 1) throw std::invalid_argument("CMM_THREADS must be a positive integer");
    return v;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

RunConfig to_config(const std::string& command, const RawOptions& raw) {
  RunConfig cfg;
  cfg.command = command;
  cfg.identity = raw.identity;
  auto given = [&](const char* name) {
    auto it = raw.opts.find(name);
    return it != raw.opts.end() && it->second->count() > 0;
  };
  if (given("n")) cfg.n = raw.n;
  if (given("k")) cfg.k = raw.k;
  if (given("lambda")) cfg.lambda = parse_coeffs(raw.lambda);
  if (given("mu")) cfg.mu = parse_coeffs(raw.mu);
  if (given("order")) cfg.order = parse_rational(raw.order);
  if (given("max-coeff")) cfg.max_coeff = raw.max_coeff;
  cfg.format = raw.format == "json" ? Format::kJson : Format::kText;
  if (given("out")) cfg.out = raw.out;
  cfg.threads = given("threads") ? raw.threads : default_threads();
  cfg.expand = raw.expand;

  if (cfg.n && *cfg.n < 2) throw std::invalid_argument("--n must be >= 2");
  if (cfg.k && *cfg.k < 1) throw std::invalid_argument("--k must be >= 1");
  if (cfg.order && *cfg.order < 0) throw std::invalid_argument("--order must be >= 0");
  if (cfg.max_coeff && *cfg.max_coeff < 0) throw std::invalid_argument("--max-coeff must be >= 0");
  if (cfg.threads < 1) throw std::invalid_argument("--threads must be >= 1");
  return cfg;
}

Weight weight_of(const RootSystem& rs, const std::vector<long>& coeffs) { return rs.from_fundamental(coeffs); }

std::vector<int> default_ks(int n) {
  if (n == 2) return {1, 2, 3};
  if (n == 3) return {1, 2};
  return {1};
}

long default_bound(int n) { return n == 2 ? 3 : n == 3 ? 2 : 1; }

std::vector<int> ranks(const RunConfig& cfg) { return cfg.n ? std::vector<int>{*cfg.n} : std::vector<int>{2, 3}; }

// Dominant weights with fundamental coefficients <= bound, in grid order.
std::vector<Weight> grid_weights(int n, long bound) {
  std::vector<Weight> out;
  for (const auto& inst : grid_instances({{n, {1}, bound}})) {
    if (inst.mu == RootSystem(n).zero()) out.push_back(inst.lambda);
  }
  return out;
}

std::vector<CmmInstance> cmm_instances(const RunConfig& cfg) {
  std::vector<CmmInstance> out;
  for (int n : ranks(cfg)) {
    const RootSystem rs(n);
    const std::vector<int> ks = cfg.k ? std::vector<int>{*cfg.k} : default_ks(n);
    const std::vector<Weight> all = grid_weights(n, cfg.max_coeff.value_or(default_bound(n)));
    const std::vector<Weight> lambdas = cfg.lambda ? std::vector<Weight>{weight_of(rs, *cfg.lambda)} : all;
    const std::vector<Weight> mus = cfg.mu ? std::vector<Weight>{weight_of(rs, *cfg.mu)} : all;
    for (int k : ks) {
      for (const auto& l : lambdas) {
        for (const auto& m : mus) out.push_back({n, k, l, m});
      }
    }
  }
  return out;
}

using Task = std::function<VerificationReport()>;

std::vector<VerificationReport> run_tasks(const std::vector<Task>& tasks, int threads) {
  std::vector<VerificationReport> out(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  const long count = static_cast<long>(tasks.size());
#pragma omp parallel for num_threads(threads) schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      out[idx] = tasks[idx]();
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<VerificationReport> check_one(const RunConfig& cfg, IdentityId id) {
  switch (id) {
    case IdentityId::kEq1:
    case IdentityId::kEq8:
      return run_grid_parallel(cmm_instances(cfg), id, [id](const CmmInstance& i) { return verify_cmm(i, id); },
                               cfg.threads);
    case IdentityId::kSymmetry:
      return run_grid_parallel(cmm_instances(cfg), id, [](const CmmInstance& i) { return verify_symmetry(i); },
                               cfg.threads);
    case IdentityId::kEq7:
      return run_grid_parallel(
          cmm_instances(cfg), id, [](const CmmInstance& i) { return verify_eq7(i, eq7_coefficients(i)); },
          cfg.threads);
    case IdentityId::kNorm: {
      std::vector<CmmInstance> distinct;
      std::set<std::tuple<int, int, Weight>> seen;
      for (const auto& inst : cmm_instances(cfg)) {
        if (seen.insert({inst.n, inst.k, inst.lambda}).second) distinct.push_back({inst.n, inst.k, inst.lambda, inst.lambda});
      }
      return run_grid_parallel(
          distinct, id, [](const CmmInstance& i) { return verify_norm(RootSystem(i.n), i.lambda, i.k); }, cfg.threads);
    }
    case IdentityId::kProp1: {
      const Rational order = cfg.order.value_or(12);
      std::vector<Task> tasks;
      for (int n : ranks(cfg)) {
        const RootSystem rs(n);
        auto checker = std::make_shared<const Prop1Checker>(rs, order);
        const std::vector<Weight> mus =
            cfg.mu ? std::vector<Weight>{weight_of(rs, *cfg.mu)} : rs.weights_in_ball(4);
        for (const auto& mu : mus) tasks.push_back([checker, mu] { return checker->check(mu); });
      }
      return run_tasks(tasks, cfg.threads);
    }
    case IdentityId::kEq5:
      if (cfg.n && *cfg.n != 2) throw std::invalid_argument("eq5 is the n = 2 identity");
      return {verify_eq5(cfg.order.value_or(20))};
    case IdentityId::kGaussEval: {
      const Rational order = cfg.order.value_or(40);
      std::vector<Task> tasks;
      for (int n : ranks(cfg)) {
        const RootSystem rs(n);
        const std::vector<Weight> lambdas = cfg.lambda ? std::vector<Weight>{weight_of(rs, *cfg.lambda)}
                                                       : std::vector<Weight>{rs.zero(), rs.fundamental_weights()[0]};
        for (const auto& l : lambdas) tasks.push_back([rs, l, order] { return gaussian_eval_property(rs, l, order); });
      }
      return run_tasks(tasks, cfg.threads);
    }
  }
  throw std::logic_error("unhandled identity");
}

void emit_reports(const std::vector<VerificationReport>& reports, Format format, std::ostream& os) {
  std::size_t failed = 0;
  for (const auto& r : reports) {
    if (!r.passed) ++failed;
    os << (format == Format::kJson ? r.to_json() : r.to_text()) << '\n';
  }
  if (format == Format::kText) {
    os << reports.size() << " checks, " << reports.size() - failed << " passed, " << failed << " failed\n";
  }
}

int with_output(const RunConfig& cfg, std::ostream& out, std::ostream& err, const std::function<int(std::ostream&)>& body) {
  if (!cfg.out) return body(out);
  std::ofstream file(*cfg.out);
  if (!file) {
    err << "error: cannot open " << *cfg.out << " for writing\n";
    return 2;
  }
  return body(file);
}

int cmd_mpoly(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.lambda) throw std::invalid_argument("mpoly needs --lambda");
  const RootSystem rs(cfg.n.value_or(2));
  const auto p = macdonald_poly(rs, weight_of(rs, *cfg.lambda), cfg.k.value_or(1));
  return with_output(cfg, out, err, [&](std::ostream& os) {
    if (cfg.format == Format::kJson) {
      nlohmann::ordered_json j;
      j["n"] = rs.n();
      j["k"] = p.k;
      j["lambda"] = p.lambda.str();
      j["polynomial"] = p.str();
      j["numerator"] = p.poly.num.str();
      j["denominator"] = p.poly.den.str();
      os << j.dump() << '\n';
    } else {
      os << p.str() << '\n';
      if (cfg.expand) {
        os << "  numerator: " << p.poly.num.str() << '\n';
        os << "  denominator: " << p.poly.den.str() << '\n';
      }
    }
    return 0;
  });
}

int cmd_norm(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.lambda) throw std::invalid_argument("norm needs --lambda");
  const RootSystem rs(cfg.n.value_or(2));
  const auto r = verify_norm(rs, weight_of(rs, *cfg.lambda), cfg.k.value_or(1));
  return with_output(cfg, out, err, [&](std::ostream& os) {
    if (cfg.format == Format::kJson) {
      os << r.to_json() << '\n';
    } else {
      os << "direct:  " << render_value(r.lhs) << '\n';
      os << "formula: " << render_value(r.rhs) << '\n';
      os << "agree:   " << (r.passed ? "true" : "false") << '\n';
    }
    return r.passed ? 0 : 1;
  });
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto reports = run_check(cfg);
  return with_output(cfg, out, err, [&](std::ostream& os) {
    emit_reports(reports, cfg.format, os);
    for (const auto& r : reports) {
      if (!r.passed) return 1;
    }
    return 0;
  });
}

}  // namespace

std::vector<VerificationReport> run_check(const RunConfig& cfg) {
  if (cfg.identity == "all") {
    std::vector<VerificationReport> all;
    for (const char* name : {"eq5", "prop1", "eq1", "eq8", "norms", "eq7", "symmetry", "gauss-eval"}) {
      RunConfig sub = cfg;
      sub.identity = name;
      if (sub.identity != "eq5" && sub.identity != "prop1" && sub.identity != "gauss-eval") sub.order.reset();
      auto part = run_check(sub);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  const auto id = parse_identity_name(cfg.identity);
  if (!id) throw std::invalid_argument("unknown identity '" + cfg.identity + "'");
  return check_one(cfg, *id);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks of constant-term identities for Macdonald polynomials of type A", "cmm"};
  app.require_subcommand(1);
  RawOptions mpoly_raw;
  RawOptions check_raw;
  RawOptions norm_raw;
  auto* mpoly = app.add_subcommand("mpoly", "Print the Macdonald polynomial P_lambda");
  add_common(mpoly, mpoly_raw);
  mpoly->add_flag("--expand", mpoly_raw.expand, "Also print the e[...] expansion");
  auto* check = app.add_subcommand("check", "Run exact identity checks over a parameter grid");
  check->add_option("identity", check_raw.identity, "Which identity to check")
      ->required()
      ->check(CLI::IsMember(kIdentities));
  add_common(check, check_raw);
  auto* norm = app.add_subcommand("norm", "Compare the constant-term norm of P_lambda with the product formula");
  add_common(norm, norm_raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (mpoly->parsed()) return cmd_mpoly(to_config("mpoly", mpoly_raw), out, err);
    if (norm->parsed()) return cmd_norm(to_config("norm", norm_raw), out, err);
    return cmd_check(to_config("check", check_raw), out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace cmm::cli
