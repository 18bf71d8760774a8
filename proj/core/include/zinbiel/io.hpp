#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "zinbiel/algebra.hpp"
#include "zinbiel/bialgebra.hpp"
#include "zinbiel/bimodule.hpp"
#include "zinbiel/coalgebra.hpp"
#include "zinbiel/matched_pair.hpp"

namespace zinbiel {

// Canonical JSON: sorted keys, entries sorted by index, reduced rationals
// written as strings ("p" or "p/q"), zero entries omitted, one entry per
// line. Saving the result of a load reproduces the same bytes.
//
//   algebra:   {"kind":"algebra","dim":n,"basis":[...],"structure":[[i,j,k,"p/q"],...]}
//   coalgebra: {"kind":"coalgebra","dim":n,"coproduct":[[k,i,j,"p/q"],...]}
//   bimodule:  {"kind":"bimodule","algebra":{...},"v_dim":m,"l":[[i,row,col,"p/q"],...],"r":[...]}
//   matched_pair: {"kind":"matched_pair","A":{...},"B":{...},"lA":[...],"rA":[...],"lB":[...],"rB":[...]}
//   bialgebra_candidate: {"kind":"bialgebra_candidate","A":{...},"Astar":{...}}
//
// Loading accepts entries in any order, integer or string coefficients and
// an omitted "basis". Duplicate index tuples, out-of-range indices, bad
// rationals, missing fields and kind mismatches are InputErrors.

using AnyObject =
    std::variant<AlgebraTable, CoalgebraTable, Bimodule, MatchedPairData, BialgebraCandidate>;

std::string to_json(const AlgebraTable& a);
std::string to_json(const CoalgebraTable& c);
std::string to_json(const Bimodule& b);
std::string to_json(const MatchedPairData& mp);
std::string to_json(const BialgebraCandidate& bc);
std::string to_json(const AnyObject& object);

AlgebraTable algebra_from_json(std::string_view text);
CoalgebraTable coalgebra_from_json(std::string_view text);
Bimodule bimodule_from_json(std::string_view text);
MatchedPairData matched_pair_from_json(std::string_view text);
BialgebraCandidate candidate_from_json(std::string_view text);

/// Dispatches on the "kind" field.
AnyObject load_any(std::string_view text);

/// "algebra", "coalgebra", "bimodule", "matched_pair" or "bialgebra_candidate".
std::string kind_of(const AnyObject& object);

/// Whole file as text; InputError if it cannot be read.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace zinbiel
