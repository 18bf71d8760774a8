#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zinbiel/algebra.hpp"
#include "zinbiel/audit.hpp"

namespace zinbiel {

/// Polynomials of degree <= n with one of the two integration products,
/// basis e_k <-> X^k, products of degree > n truncated to zero.
///   right: e_i * e_j = 1/(i+1) e_{i+j+1}       (a*b = b * integral of a)
///   left:  e_i * e_j = i/(i+j) e_{i+j}, i >= 1  (a*b = integral of b a')
AlgebraTable trunc_integration(std::size_t n, Orientation orientation);

/// Half-shuffle product on nonempty words over `letters` letters of length
/// <= max_len: u*v is the sum over shuffles of u with v minus its last
/// letter, each followed by that last letter. Longer words are set to zero.
/// Basis order: by length, then lexicographic.
AlgebraTable free_halfshuffle(std::size_t letters, std::size_t max_len);

/// Zero algebras of dimensions 0..3 followed by the one-dimensional algebra
/// e0*e0 = e0.
std::vector<AlgebraTable> trivial_models();

/// The one-dimensional algebra with e0*e0 = e0.
AlgebraTable unit_idempotent();

struct ModelSpec {
  std::string family;  // "trunc-int", "free", "zero"
  std::size_t a = 0;
  std::size_t b = 0;
  Orientation orientation = Orientation::Right;
  std::string text;
};

/// Parses "trunc-int:right:N", "trunc-int:left:N", "free:K:M" or "zero:N".
ModelSpec parse_model_spec(const std::string& text);
AlgebraTable build_model(const ModelSpec& spec);
inline AlgebraTable build_model(const std::string& text) {
  return build_model(parse_model_spec(text));
}

}  // namespace zinbiel
