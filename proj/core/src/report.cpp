#include "zinbiel/report.hpp"

#include <json.hpp>

namespace zinbiel {

using nlohmann::ordered_json;

bool AuditReport::premises_hold() const {
  for (const auto& p : premises) {
    if (!p.holds) return false;
  }
  return true;
}

const Verdict* AuditReport::find_claim(const std::string& name) const {
  for (const auto& c : claims) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

std::string witness_line(const Witness& w, const std::string& slots) {
  return format_tuple(w.tuple, slots) + ": lhs " + format_vector(w.lhs) + " vs rhs " +
         format_vector(w.rhs) + ", residual " + format_vector(w.residual);
}

ordered_json vector_json(const Vector& v) {
  ordered_json out = ordered_json::array();
  for (const auto& [i, c] : v.entries()) out.push_back(ordered_json::array({i, c.str()}));
  return out;
}

ordered_json witness_json(const Witness& w) {
  ordered_json j;
  j["tuple"] = w.tuple;
  j["lhs"] = vector_json(w.lhs);
  j["rhs"] = vector_json(w.rhs);
  j["residual"] = vector_json(w.residual);
  return j;
}

ordered_json verdict_json(const Verdict& v) {
  ordered_json j;
  j["claim"] = v.name;
  j["statement"] = v.statement;
  j["verdict"] = v.holds ? "holds" : "fails";
  j["violations"] = v.violations;
  j["witness"] = v.witnesses.empty() ? ordered_json(nullptr) : witness_json(v.witnesses.front());
  ordered_json more = ordered_json::array();
  for (std::size_t i = 1; i < v.witnesses.size(); ++i) more.push_back(witness_json(v.witnesses[i]));
  j["more_witnesses"] = std::move(more);
  return j;
}

}  // namespace

std::string render_text(const Verdict& v) {
  std::string out = v.name + ": ";
  if (v.holds) {
    out += "HOLDS\n";
  } else {
    out += "FAILS (" + std::to_string(v.violations) +
           (v.violations == 1 ? " violation)\n" : " violations)\n");
  }
  out += "    statement: " + v.statement + "\n";
  for (std::size_t i = 0; i < v.witnesses.size(); ++i) {
    out += (i == 0 ? "    witness " : "    violation ") + witness_line(v.witnesses[i], v.slots) +
           "\n";
  }
  if (v.violations > v.witnesses.size()) {
    out += "    ... " + std::to_string(v.violations - v.witnesses.size()) + " more\n";
  }
  return out;
}

std::string render_text(const AuditReport& report) {
  std::string out = "audit of " + report.subject + " (" + report.kind + ")\n";
  if (!report.orientation.empty()) out += "orientation: " + report.orientation + "\n";
  out += "premises: ";
  out += report.premises.empty() ? "none\n"
                                 : (report.premises_hold() ? "all hold\n" : "NOT satisfied\n");
  for (const auto& p : report.premises) out += "  " + render_text(p);
  out += "claims:\n";
  for (const auto& c : report.claims) out += "  " + render_text(c);
  out += "findings:";
  if (report.findings.empty()) out += " none";
  out += "\n";
  for (const auto& f : report.findings) out += "  - " + f + "\n";
  return out;
}

std::string render_json(const Verdict& verdict) { return verdict_json(verdict).dump(2) + "\n"; }

std::string render_json(const AuditReport& report) {
  ordered_json j;
  j["subject"] = report.subject;
  j["kind"] = report.kind;
  j["orientation"] = report.orientation;
  j["premises_hold"] = report.premises_hold();
  ordered_json premises = ordered_json::array();
  for (const auto& p : report.premises) premises.push_back(verdict_json(p));
  j["premises"] = std::move(premises);
  ordered_json claims = ordered_json::array();
  for (const auto& c : report.claims) claims.push_back(verdict_json(c));
  j["claims"] = std::move(claims);
  j["findings"] = report.findings;
  return j.dump(2) + "\n";
}

}  // namespace zinbiel
