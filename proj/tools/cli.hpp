#pragma once

#include "cmm/verifier.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cmm::cli {

enum class Format { kText, kJson };

struct RunConfig {
  std::string command;
  std::string identity;
  std::optional<int> n;
  std::optional<int> k;
  std::optional<std::vector<long>> lambda;
  std::optional<std::vector<long>> mu;
  std::optional<Rational> order;
  std::optional<long> max_coeff;
  Format format = Format::kText;
  std::optional<std::string> out;
  int threads = 1;
  bool expand = false;
};

// Exit codes: 0 everything passed, 1 some check failed, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Reports for `check <identity>` under cfg, in deterministic order.
// Throws std::invalid_argument for unusable parameters.
std::vector<VerificationReport> run_check(const RunConfig& cfg);

}  // namespace cmm::cli
