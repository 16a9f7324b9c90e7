#ifndef SUPERSYLOW_REPORT_HPP
#define SUPERSYLOW_REPORT_HPP

#include "supersylow/structure.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace supersylow {

// One verified fact.  source records where the expected value comes from:
// "table" for entries of the built-in verification tables, "derived" for
// values reduced from those entries, "computed" for facts established
// directly by computation.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string observed;
  std::string source;
};

struct VerificationReport {
  std::string row;  // e.g. "sylow sl(2|3)"
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool pass() const;
  const CheckResult* find(const std::string& name) const;
};

// Deterministic serializations: identical input gives identical bytes.
std::string report_to_json(const VerificationReport& r, int indent = 2);
std::string reports_to_json(const std::vector<VerificationReport>& rs, int indent = 2);
std::string report_to_markdown(const VerificationReport& r);
std::string reports_to_markdown(const std::vector<VerificationReport>& rs,
                                const std::string& title);
std::string zero_certificate_to_json(const ZeroCertificate& c, int indent = 2);

}  // namespace supersylow

#endif
