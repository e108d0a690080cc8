#pragma once

// Verification reports shared by the Gaussian checks and the identity
// verifier, with their text and line-delimited JSON renderings.

#include "cmm/weight_poly.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cmm {

enum class IdentityId { kEq1, kEq8, kEq7, kProp1, kEq5, kNorm, kSymmetry, kGaussEval };

// "eq1", "eq8", "eq7", "prop1", "eq5", "norms", "symmetry", "gauss-eval".
std::string identity_name(IdentityId id);
std::optional<IdentityId> parse_identity_name(std::string_view name);

struct ReportParams {
  int n = 2;
  std::optional<int> k;
  std::optional<Weight> lambda;
  std::optional<Weight> mu;
  std::optional<Rational> order;

  bool operator==(const ReportParams&) const = default;
};

// Scalar identities compare RationalQ values; the sl2 Gaussian identity
// compares whole x-series, stored as WeightPoly.
using ReportValue = std::variant<RationalQ, WeightPoly>;

std::string render_value(const ReportValue& v);
// A RationalQ unless the text has the "(c)*e[...]" shape.
ReportValue parse_value(std::string_view text);
ReportValue value_difference(const ReportValue& a, const ReportValue& b);
bool values_equal(const ReportValue& a, const ReportValue& b);

struct VerificationReport {
  IdentityId id = IdentityId::kEq1;
  ReportParams params;
  ReportValue lhs;
  ReportValue rhs;
  bool passed = false;
  double elapsed_ms = 0;
  // Secondary values, e.g. the other right-hand side or the complete order.
  std::vector<std::pair<std::string, std::string>> details;

  std::string to_json() const;
  std::string to_text() const;
};

// Sets lhs, rhs and passed from an exact comparison.
void settle(VerificationReport& r, ReportValue lhs, ReportValue rhs);

// Throws std::invalid_argument on malformed input.
VerificationReport parse_report_json(std::string_view line);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace cmm
