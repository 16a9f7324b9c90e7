#include "supersylow/report.hpp"

#include <json.hpp>

namespace supersylow {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json dims_json(const GradedSubspace& s) {
  return ordered_json::array({s.even_dim, s.odd_dim()});
}

}  // namespace

bool VerificationReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string report_to_json(const VerificationReport& r, int indent) {
  ordered_json j;
  j["version"] = "0.1.0";
  j["row"] = r.row;
  j["seed"] = r.seed;
  j["pass"] = r.pass();
  j["checks"] = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["expected"] = c.expected;
    cj["observed"] = c.observed;
    cj["source"] = c.source;
    j["checks"].push_back(std::move(cj));
  }
  return j.dump(indent) + "\n";
}

std::string reports_to_json(const std::vector<VerificationReport>& rs, int indent) {
  ordered_json j;
  j["version"] = "0.1.0";
  j["reports"] = ordered_json::array();
  for (const auto& r : rs)
    j["reports"].push_back(ordered_json::parse(report_to_json(r, indent)));
  return j.dump(indent) + "\n";
}

std::string report_to_markdown(const VerificationReport& r) {
  std::string out;
  out += "## " + r.row + "\n\n";
  out += "| check | expected | observed | source | result |\n";
  out += "|---|---|---|---|---|\n";
  for (const auto& c : r.checks)
    out += "| " + c.name + " | " + c.expected + " | " + c.observed + " | " + c.source +
           " | " + (c.pass ? "pass" : "FAIL") + " |\n";
  out += "\n**overall: " + std::string(r.pass() ? "pass" : "FAIL") + "** (seed " +
         std::to_string(r.seed) + ")\n";
  return out;
}

std::string reports_to_markdown(const std::vector<VerificationReport>& rs,
                                const std::string& title) {
  std::string out = "# " + title + "\n\n";
  int passed = 0;
  for (const auto& r : rs) passed += r.pass() ? 1 : 0;
  out += std::to_string(passed) + "/" + std::to_string(rs.size()) + " rows pass\n\n";
  for (const auto& r : rs) {
    out += report_to_markdown(r);
    out += "\n";
  }
  return out;
}

std::string zero_certificate_to_json(const ZeroCertificate& c, int indent) {
  ordered_json j;
  j["verdict"] = c.verdict;
  if (c.failure_reason)
    j["failure_reason"] = *c.failure_reason;
  else
    j["failure_reason"] = nullptr;
  j["center"] = dims_json(c.center);
  j["reduced"] = ordered_json::array({c.reduced.dim_even, c.reduced.dim_odd});
  j["takiff_part"] = c.takiff_part ? dims_json(*c.takiff_part) : ordered_json(nullptr);
  j["odd_abelian_part"] =
      c.odd_abelian_part ? dims_json(*c.odd_abelian_part) : ordered_json(nullptr);
  j["derivation_part"] =
      c.derivation_part ? dims_json(*c.derivation_part) : ordered_json(nullptr);
  return j.dump(indent) + "\n";
}

}  // namespace supersylow
