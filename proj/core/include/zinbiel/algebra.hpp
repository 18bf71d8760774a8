#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zinbiel/tensor.hpp"

namespace zinbiel {

/// Finite-dimensional algebra given by structure constants:
///   e_i * e_j = sum_k c[i][j][k] e_k   (first index is the left factor).
/// Immutable once constructed; every derived product is a new table.
class AlgebraTable {
 public:
  AlgebraTable() = default;
  AlgebraTable(std::size_t dim, Tensor3 constants,
               std::vector<std::string> basis_labels = {});

  /// The algebra of dimension `dim` with identically zero product.
  static AlgebraTable zero(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const Tensor3& constants() const { return constants_; }

  /// e_i * e_j as a vector.
  const Vector& product(std::size_t i, std::size_t j) const {
    return products_[i * dim_ + j];
  }

  /// Matrix of v -> e_i * v.
  Matrix left_multiplication(std::size_t i) const;
  /// Matrix of v -> v * e_i.
  Matrix right_multiplication(std::size_t i) const;

  /// Tables compare by dimension and constants; labels are decorative.
  friend bool operator==(const AlgebraTable& a, const AlgebraTable& b) {
    return a.dim_ == b.dim_ && a.constants_ == b.constants_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  Tensor3 constants_;
  std::vector<Vector> products_;
};

/// Default labels "e0", "e1", ...
std::vector<std::string> default_labels(std::size_t dim);

Vector multiply(const AlgebraTable& a, const Vector& x, const Vector& y);
/// (x*y)*z - x*(y*z)
Vector associator(const AlgebraTable& a, const Vector& x, const Vector& y,
                  const Vector& z);

AlgebraTable opposite(const AlgebraTable& a);
/// {x,y} = x*y + y*x
AlgebraTable symmetrize(const AlgebraTable& a);
/// [x,y] = x*y - y*x
AlgebraTable commutator(const AlgebraTable& a);
/// Block-diagonal product on dim(a) + dim(b); b's basis follows a's.
AlgebraTable direct_sum(const AlgebraTable& a, const AlgebraTable& b);

/// Basis triple at which a hard-coded law fails, with the residual.
struct LawViolation {
  std::size_t x = 0, y = 0, z = 0;
  Vector residual;
};

// Hard-coded law checks on structure constants. These deliberately avoid the
// identity engine so the two routes can be compared against each other.
// Each returns the first violating basis tuple in lexicographic order.

/// (x*y)*z = x*(y*z) + x*(z*y)
std::optional<LawViolation> find_left_zinbiel_violation(const AlgebraTable& a);
/// x*(y*z) = (x*y)*z + (y*x)*z
std::optional<LawViolation> find_right_zinbiel_violation(const AlgebraTable& a);
std::optional<LawViolation> find_commutativity_violation(const AlgebraTable& a);
std::optional<LawViolation> find_associativity_violation(const AlgebraTable& a);

inline bool is_left_zinbiel(const AlgebraTable& a) {
  return !find_left_zinbiel_violation(a);
}
inline bool is_right_zinbiel(const AlgebraTable& a) {
  return !find_right_zinbiel_violation(a);
}
inline bool is_commutative(const AlgebraTable& a) {
  return !find_commutativity_violation(a);
}
inline bool is_associative(const AlgebraTable& a) {
  return !find_associativity_violation(a);
}

}  // namespace zinbiel
