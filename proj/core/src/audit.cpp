#include "zinbiel/audit.hpp"

#include <algorithm>

#include "zinbiel/catalog.hpp"

namespace zinbiel {

std::string to_string(Orientation o) { return o == Orientation::Left ? "left" : "right"; }

Orientation parse_orientation(const std::string& text) {
  if (text == "left") return Orientation::Left;
  if (text == "right") return Orientation::Right;
  throw InputError("orientation must be 'left' or 'right', got '" + text + "'");
}

namespace {

struct ClaimSpec {
  std::string name;
  std::string identity;
  // Which table the identity is evaluated on.
  enum class Target { Self, Opposite, Symmetrized } target = Target::Self;
  std::string note;
};

const std::vector<ClaimSpec>& claim_specs() {
  using T = ClaimSpec::Target;
  static const std::vector<ClaimSpec> specs = {
      {"left_relation", "left_relation", T::Self, ""},
      {"eq10", "eq10", T::Self, ""},
      {"eq11", "eq11", T::Self, ""},
      {"right_relation", "right_relation", T::Self, ""},
      {"eq13", "eq13", T::Self, ""},
      {"eq14", "eq14", T::Self, ""},
      {"eq15", "eq15", T::Self, ""},
      {"eq16", "eq16", T::Self, ""},
      {"eq17", "eq17", T::Self, ""},
      {"eq18", "eq18", T::Self, ""},
      {"eq15_mirrored", "eq15", T::Opposite, "evaluated on the opposite algebra"},
      {"eq16_mirrored", "eq16", T::Opposite, "evaluated on the opposite algebra"},
      {"eq17_mirrored", "eq17", T::Opposite, "evaluated on the opposite algebra"},
      {"eq18_mirrored", "eq18", T::Opposite, "evaluated on the opposite algebra"},
      {"aguiar_commutative", "commutative", T::Symmetrized,
       "evaluated on the symmetrized product x*y + y*x"},
      {"aguiar_associative", "associative", T::Symmetrized,
       "evaluated on the symmetrized product x*y + y*x"},
      {"lie_admissible", "lie_admissible", T::Self,
       "Jacobi identity of the bracket x*y - y*x"},
      {"center_symmetric", "center_symmetric", T::Self, ""},
  };
  return specs;
}

}  // namespace

const std::vector<std::string>& algebra_claim_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n{"opposite_orientation"};
    for (const auto& s : claim_specs()) n.push_back(s.name);
    return n;
  }();
  return names;
}

AuditReport audit_claims(const AlgebraTable& a, Orientation orientation,
                         const std::string& subject, unsigned workers,
                         const std::optional<std::vector<std::string>>& only) {
  if (only) {
    for (const auto& name : *only) {
      const auto& all = algebra_claim_names();
      if (std::find(all.begin(), all.end(), name) == all.end()) {
        throw InputError("unknown claim '" + name + "'");
      }
    }
  }
  auto wanted = [&](const std::string& name) {
    return !only || std::find(only->begin(), only->end(), name) != only->end();
  };

  AuditReport report;
  report.subject = subject + " (dim " + std::to_string(a.dim()) + ")";
  report.kind = "algebra";
  report.orientation = to_string(orientation);

  const std::string premise_law =
      orientation == Orientation::Left ? "left_zinbiel" : "right_zinbiel";
  report.premises.push_back(check_identity(a, catalog_identity(premise_law), premise_law, workers));

  const AlgebraTable opp = opposite(a);
  const AlgebraTable sym = symmetrize(a);

  if (wanted("opposite_orientation")) {
    const std::string other = orientation == Orientation::Left ? "right_zinbiel" : "left_zinbiel";
    Verdict v = check_identity(opp, catalog_identity(other), "opposite_orientation", workers);
    v.statement = "opposite algebra satisfies " + other + ": " + v.statement;
    report.claims.push_back(std::move(v));
  }

  for (const auto& spec : claim_specs()) {
    if (!wanted(spec.name)) continue;
    const AlgebraTable& target = spec.target == ClaimSpec::Target::Self
                                     ? a
                                     : (spec.target == ClaimSpec::Target::Opposite ? opp : sym);
    Verdict v = check_identity(target, catalog_identity(spec.identity), spec.name, workers);
    if (!spec.note.empty()) v.statement += "  [" + spec.note + "]";
    report.claims.push_back(std::move(v));
  }

  if (report.premises_hold()) {
    for (const auto& c : report.claims) {
      if (!c.holds) {
        report.findings.push_back(c.name + " fails although " + premise_law +
                                  " holds: counterexample " +
                                  first_witness(c));
      }
    }
  } else {
    report.findings.push_back(premise_law + " does not hold; claims are reported without a premise");
  }
  return report;
}

}  // namespace zinbiel
