#include "cmm/report.hpp"

#include <json.hpp>

#include <array>
#include <stdexcept>

namespace cmm {

namespace {

using nlohmann::ordered_json;

constexpr std::array<std::pair<IdentityId, const char*>, 8> kNames{{
    {IdentityId::kEq1, "eq1"},
    {IdentityId::kEq8, "eq8"},
    {IdentityId::kEq7, "eq7"},
    {IdentityId::kProp1, "prop1"},
    {IdentityId::kEq5, "eq5"},
    {IdentityId::kNorm, "norms"},
    {IdentityId::kSymmetry, "symmetry"},
    {IdentityId::kGaussEval, "gauss-eval"},
}};

ordered_json params_json(const ReportParams& p) {
  ordered_json j;
  j["n"] = p.n;
  if (p.k) j["k"] = *p.k;
  if (p.lambda) j["lambda"] = p.lambda->str();
  if (p.mu) j["mu"] = p.mu->str();
  if (p.order) j["order"] = to_string(*p.order);
  return j;
}

std::string params_text(const ReportParams& p) {
  std::string out = "n=" + std::to_string(p.n);
  if (p.k) out += " k=" + std::to_string(*p.k);
  if (p.lambda) out += " lambda=" + p.lambda->str();
  if (p.mu) out += " mu=" + p.mu->str();
  if (p.order) out += " order=" + to_string(*p.order);
  return out;
}

}  // namespace

std::string identity_name(IdentityId id) {
  for (const auto& [k, name] : kNames) {
    if (k == id) return name;
  }
  throw std::logic_error("unknown identity id");
}

std::optional<IdentityId> parse_identity_name(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (name == n) return k;
  }
  return std::nullopt;
}

std::string render_value(const ReportValue& v) {
  return std::visit([](const auto& x) { return x.str(); }, v);
}

ReportValue parse_value(std::string_view text) {
  if (text.find(")*e[") != std::string_view::npos) return parse_weight_poly(text);
  return parse_rational_q(text);
}

ReportValue value_difference(const ReportValue& a, const ReportValue& b) {
  if (a.index() != b.index()) throw std::invalid_argument("comparing report values of different kinds");
  if (const auto* x = std::get_if<RationalQ>(&a)) return (*x - std::get<RationalQ>(b)).reduced();
  return std::get<WeightPoly>(a) - std::get<WeightPoly>(b);
}

bool values_equal(const ReportValue& a, const ReportValue& b) {
  if (a.index() != b.index()) return false;
  if (const auto* x = std::get_if<RationalQ>(&a)) return rational_eq(*x, std::get<RationalQ>(b));
  return std::get<WeightPoly>(a) == std::get<WeightPoly>(b);
}

void settle(VerificationReport& r, ReportValue lhs, ReportValue rhs) {
  r.passed = values_equal(lhs, rhs);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
}

std::string VerificationReport::to_json() const {
  ordered_json j;
  j["identity"] = identity_name(id);
  j["params"] = params_json(params);
  j["lhs"] = render_value(lhs);
  j["rhs"] = render_value(rhs);
  j["difference"] = render_value(value_difference(lhs, rhs));
  j["passed"] = passed;
  j["elapsed_ms"] = elapsed_ms;
  if (!details.empty()) {
    ordered_json d = ordered_json::object();
    for (const auto& [key, value] : details) d[key] = value;
    j["details"] = d;
  }
  return j.dump();
}

std::string VerificationReport::to_text() const {
  std::string out = (passed ? "PASS " : "FAIL ") + identity_name(id) + " " + params_text(params);
  out += "\n  lhs: " + render_value(lhs);
  out += "\n  rhs: " + render_value(rhs);
  if (!passed) out += "\n  difference: " + render_value(value_difference(lhs, rhs));
  for (const auto& [key, value] : details) out += "\n  " + key + ": " + value;
  return out;
}

VerificationReport parse_report_json(std::string_view line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("report is not valid JSON: ") + e.what());
  }
  try {
    VerificationReport r;
    const auto id = parse_identity_name(j.at("identity").get<std::string>());
    if (!id) throw std::invalid_argument("unknown identity in report");
    r.id = *id;
    const auto& p = j.at("params");
    r.params.n = p.at("n").get<int>();
    if (p.contains("k")) r.params.k = p["k"].get<int>();
    if (p.contains("lambda")) r.params.lambda = parse_weight(p["lambda"].get<std::string>());
    if (p.contains("mu")) r.params.mu = parse_weight(p["mu"].get<std::string>());
    if (p.contains("order")) r.params.order = parse_rational(p["order"].get<std::string>());
    r.lhs = parse_value(j.at("lhs").get<std::string>());
    r.rhs = parse_value(j.at("rhs").get<std::string>());
    r.passed = j.at("passed").get<bool>();
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    if (j.contains("details")) {
      for (const auto& [key, value] : j["details"].items()) r.details.emplace_back(key, value.get<std::string>());
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

}  // namespace cmm
