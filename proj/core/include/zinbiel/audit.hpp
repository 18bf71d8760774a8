#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zinbiel/algebra.hpp"
#include "zinbiel/report.hpp"

namespace zinbiel {

enum class Orientation { Left, Right };

std::string to_string(Orientation o);
Orientation parse_orientation(const std::string& text);

/// Names of the claims audit_claims can evaluate, in report order.
const std::vector<std::string>& algebra_claim_names();

/// Audits the basic-property statements about Zinbiel algebras on one table.
///
/// The premise is the Zinbiel law of the given orientation. Every claim is
/// evaluated regardless of the premise, and both orientation variants of
/// each relation are reported side by side; nothing is assumed from the
/// orientation labels. `only`, when given, restricts the claims evaluated.
AuditReport audit_claims(const AlgebraTable& a, Orientation orientation,
                         const std::string& subject = "algebra", unsigned workers = 1,
                         const std::optional<std::vector<std::string>>& only = std::nullopt);

}  // namespace zinbiel
