#include "zinbiel/verdict.hpp"

namespace zinbiel {

Verdict make_verdict(std::string name, std::string statement,
                     std::vector<Witness> violations, std::string slots) {
  Verdict v;
  v.name = std::move(name);
  v.statement = std::move(statement);
  v.holds = violations.empty();
  v.violations = violations.size();
  if (violations.size() > kMaxWitnesses) violations.resize(kMaxWitnesses);
  v.witnesses = std::move(violations);
  v.slots = std::move(slots);
  return v;
}

std::string format_tuple(const std::vector<std::size_t>& tuple, const std::string& slots) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i > 0) out += ",";
    out += i < slots.size() ? slots[i] : 'e';
    out += std::to_string(tuple[i]);
  }
  return out + ")";
}

std::string first_witness(const Verdict& v) {
  if (v.witnesses.empty()) return "(no witness)";
  return format_tuple(v.witnesses.front().tuple, v.slots);
}

}  // namespace zinbiel
