#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zinbiel/tensor.hpp"

namespace zinbiel {

/// How many violations a verdict keeps for display. The first one is the
/// lexicographically smallest and is the designated witness.
inline constexpr std::size_t kMaxWitnesses = 8;

/// One violating basis tuple: both sides of the checked equality and their
/// difference.
struct Witness {
  std::vector<std::size_t> tuple;
  Vector lhs;
  Vector rhs;
  Vector residual;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of one named check.
struct Verdict {
  std::string name;
  std::string statement;
  bool holds = true;
  std::size_t violations = 0;
  std::vector<Witness> witnesses;
  /// Basis-letter per tuple slot when rendering, e.g. "eev" for (x, y, v);
  /// empty means "e" everywhere.
  std::string slots;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Builds a verdict from an ordered list of violations, keeping the first
/// kMaxWitnesses.
Verdict make_verdict(std::string name, std::string statement,
                     std::vector<Witness> violations, std::string slots = {});

/// "(e0,e1,f2)"
std::string format_tuple(const std::vector<std::size_t>& tuple, const std::string& slots);

/// Tuple of the designated witness, or "(no witness)" for verdicts without one.
std::string first_witness(const Verdict& v);

}  // namespace zinbiel
