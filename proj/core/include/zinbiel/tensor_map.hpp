#pragma once

// Point-free tensor-map expressions such as
//   mu . (id x mut) = mu . (mu x id) . (id x tau) + ...
// built from id, tau, mu (product), delta (coproduct) and the shorthands
// mut = mu . tau and deltat = tau . delta. Stages are written left to right
// and applied right to left, as ordinary composition.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "zinbiel/identity.hpp"
#include "zinbiel/scalar.hpp"

namespace zinbiel {

struct MapChain;

struct MapFactor {
  enum class Kind { Id, Tau, Mu, Delta, Composite };
  Kind kind = Kind::Id;
  std::shared_ptr<const MapChain> composite;

  std::size_t inputs() const;
  std::size_t outputs() const;
};

/// stages.front() is applied last.
struct MapChain {
  std::vector<std::vector<MapFactor>> stages;

  std::size_t inputs() const;
  std::size_t outputs() const;
  bool uses_product() const;
  bool uses_coproduct() const;
};

struct MapTerm {
  Scalar coefficient;
  MapChain chain;
};

struct MapEquation {
  std::vector<MapTerm> lhs;
  std::vector<MapTerm> rhs;

  std::size_t inputs() const;
  std::size_t outputs() const;
};

/// Parses "chain-sum [= chain-sum]" where
///   chain-sum := "0" | [sign] term { sign term }
///   term      := [ RATIONAL "*" ] chain
///   chain     := stage { "." stage }
///   stage     := factor { "x" factor }
///   factor    := id | tau | mu | mut | delta | deltat | "(" chain ")"
/// All terms must share the same input and output arity.
MapEquation parse_map_equation(std::string_view source);

/// Element form of a product-only equation with one output: variables are
/// named x, y, z (or v0, v1, ... beyond three) in input order.
Identity expand_to_identity(const MapEquation& equation);

}  // namespace zinbiel
