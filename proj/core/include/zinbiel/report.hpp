#pragma once

#include <string>
#include <vector>

#include "zinbiel/verdict.hpp"

namespace zinbiel {

/// Result of auditing one object: premises that the audited statements
/// assume, the statements themselves, and free-form findings.
struct AuditReport {
  std::string subject;
  std::string kind;
  std::string orientation;
  std::vector<Verdict> premises;
  std::vector<Verdict> claims;
  std::vector<std::string> findings;

  bool premises_hold() const;
  const Verdict* find_claim(const std::string& name) const;

  friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

std::string render_text(const Verdict& verdict);
std::string render_text(const AuditReport& report);
std::string render_json(const Verdict& verdict);
std::string render_json(const AuditReport& report);

}  // namespace zinbiel
