#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "zinbiel/algebra.hpp"
#include "zinbiel/bialgebra.hpp"
#include "zinbiel/bimodule.hpp"
#include "zinbiel/coalgebra.hpp"
#include "zinbiel/matched_pair.hpp"

namespace zinbiel {

/// Seeded single-entry perturbations. Each call picks one coordinate of the
/// object uniformly (zero coordinates included) and adds a small nonzero
/// rational to it. Objects of dimension 0 are returned unchanged.
class Perturber {
 public:
  explicit Perturber(std::uint64_t seed) : rng_(seed) {}

  Scalar delta();
  std::size_t index(std::size_t bound);

  AlgebraTable operator()(const AlgebraTable& a);
  CoalgebraTable operator()(const CoalgebraTable& c);
  Bimodule operator()(const Bimodule& b);
  MatchedPairData operator()(const MatchedPairData& mp);
  BialgebraCandidate operator()(const BialgebraCandidate& bc);

 private:
  void perturb_family(std::vector<Matrix>& family, std::size_t flat);
  std::mt19937_64 rng_;
};

inline constexpr std::uint64_t kDefaultFuzzSeed = 20240611;
inline constexpr std::size_t kDefaultFuzzCount = 200;

/// Unperturbed instances each family starts from.
std::vector<AlgebraTable> algebra_seeds();
std::vector<Bimodule> bimodule_seeds();
/// Double dimension at most 8.
std::vector<MatchedPairData> matched_pair_seeds();
std::vector<CoalgebraTable> coalgebra_seeds();
std::vector<BialgebraCandidate> candidate_seeds();

/// `count` perturbations, each of a seed chosen by the same generator.
std::vector<AlgebraTable> algebra_fuzz(std::uint64_t seed = kDefaultFuzzSeed,
                                       std::size_t count = kDefaultFuzzCount);
std::vector<Bimodule> bimodule_fuzz(std::uint64_t seed = kDefaultFuzzSeed,
                                    std::size_t count = kDefaultFuzzCount);
std::vector<MatchedPairData> matched_pair_fuzz(std::uint64_t seed = kDefaultFuzzSeed,
                                               std::size_t count = kDefaultFuzzCount);
std::vector<CoalgebraTable> coalgebra_fuzz(std::uint64_t seed = kDefaultFuzzSeed,
                                           std::size_t count = kDefaultFuzzCount);
std::vector<BialgebraCandidate> candidate_fuzz(std::uint64_t seed = kDefaultFuzzSeed,
                                               std::size_t count = 20);

}  // namespace zinbiel
