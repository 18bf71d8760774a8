#include "zinbiel/algebra.hpp"

namespace zinbiel {

std::vector<std::string> default_labels(std::size_t dim) {
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}

AlgebraTable::AlgebraTable(std::size_t dim, Tensor3 constants,
                           std::vector<std::string> basis_labels)
    : dim_(dim), labels_(std::move(basis_labels)), constants_(std::move(constants)) {
  if (constants_.dims() != Tensor3::Key{dim, dim, dim}) {
    throw DimensionError("structure tensor dimensions do not match algebra dimension " +
                         std::to_string(dim));
  }
  if (labels_.empty()) labels_ = default_labels(dim);
  if (labels_.size() != dim) {
    throw DimensionError("expected " + std::to_string(dim) + " basis labels, got " +
                         std::to_string(labels_.size()));
  }
  products_.assign(dim * dim, Vector(dim));
  for (const auto& [key, v] : constants_.entries()) {
    products_[key[0] * dim + key[1]].set(key[2], v);
  }
}

AlgebraTable AlgebraTable::zero(std::size_t dim) {
  return AlgebraTable(dim, Tensor3(dim, dim, dim));
}

Matrix AlgebraTable::left_multiplication(std::size_t i) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    for (const auto& [k, v] : product(i, j).entries()) m.set(k, j, v);
  }
  return m;
}

Matrix AlgebraTable::right_multiplication(std::size_t i) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    for (const auto& [k, v] : product(j, i).entries()) m.set(k, j, v);
  }
  return m;
}

Vector multiply(const AlgebraTable& a, const Vector& x, const Vector& y) {
  if (x.dim() != a.dim() || y.dim() != a.dim()) {
    throw DimensionError("multiply: vector dimension does not match algebra");
  }
  Vector out(a.dim());
  for (const auto& [i, xi] : x.entries()) {
    for (const auto& [j, yj] : y.entries()) {
      const Scalar w = xi * yj;
      for (const auto& [k, c] : a.product(i, j).entries()) out.add_to(k, w * c);
    }
  }
  return out;
}

Vector associator(const AlgebraTable& a, const Vector& x, const Vector& y,
                  const Vector& z) {
  return multiply(a, multiply(a, x, y), z) - multiply(a, x, multiply(a, y, z));
}

namespace {

AlgebraTable combine_with_swap(const AlgebraTable& a, int self, int swapped) {
  const std::size_t n = a.dim();
  Tensor3 t(n, n, n);
  for (const auto& [key, v] : a.constants().entries()) {
    if (self != 0) t.add_to(key, Scalar(self) * v);
    if (swapped != 0) t.add_to({key[1], key[0], key[2]}, Scalar(swapped) * v);
  }
  return AlgebraTable(n, std::move(t), a.basis_labels());
}

}  // namespace

AlgebraTable opposite(const AlgebraTable& a) { return combine_with_swap(a, 0, 1); }
AlgebraTable symmetrize(const AlgebraTable& a) { return combine_with_swap(a, 1, 1); }
AlgebraTable commutator(const AlgebraTable& a) { return combine_with_swap(a, 1, -1); }

AlgebraTable direct_sum(const AlgebraTable& a, const AlgebraTable& b) {
  const std::size_t n = a.dim();
  const std::size_t d = n + b.dim();
  Tensor3 t(d, d, d);
  for (const auto& [key, v] : a.constants().entries()) t.set(key, v);
  for (const auto& [key, v] : b.constants().entries()) {
    t.set({key[0] + n, key[1] + n, key[2] + n}, v);
  }
  std::vector<std::string> labels = a.basis_labels();
  labels.insert(labels.end(), b.basis_labels().begin(), b.basis_labels().end());
  return AlgebraTable(d, std::move(t), std::move(labels));
}

namespace {

// Coefficient-level contractions: (e_i * e_j) * e_k and e_i * (e_j * e_k).
Vector left_nested(const AlgebraTable& a, std::size_t i, std::size_t j, std::size_t k) {
  Vector out(a.dim());
  for (const auto& [m, c] : a.product(i, j).entries()) {
    for (const auto& [l, d] : a.product(m, k).entries()) out.add_to(l, c * d);
  }
  return out;
}

Vector right_nested(const AlgebraTable& a, std::size_t i, std::size_t j, std::size_t k) {
  Vector out(a.dim());
  for (const auto& [m, c] : a.product(j, k).entries()) {
    for (const auto& [l, d] : a.product(i, m).entries()) out.add_to(l, c * d);
  }
  return out;
}

template <typename Residual>
std::optional<LawViolation> scan_triples(const AlgebraTable& a, Residual residual) {
  const std::size_t n = a.dim();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        Vector r = residual(x, y, z);
        if (!r.is_zero()) return LawViolation{x, y, z, std::move(r)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<LawViolation> find_left_zinbiel_violation(const AlgebraTable& a) {
  return scan_triples(a, [&](std::size_t x, std::size_t y, std::size_t z) {
    return left_nested(a, x, y, z) - right_nested(a, x, y, z) - right_nested(a, x, z, y);
  });
}

std::optional<LawViolation> find_right_zinbiel_violation(const AlgebraTable& a) {
  return scan_triples(a, [&](std::size_t x, std::size_t y, std::size_t z) {
    return right_nested(a, x, y, z) - left_nested(a, x, y, z) - left_nested(a, y, x, z);
  });
}

std::optional<LawViolation> find_commutativity_violation(const AlgebraTable& a) {
  const std::size_t n = a.dim();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Vector r = a.product(x, y) - a.product(y, x);
      if (!r.is_zero()) return LawViolation{x, y, 0, std::move(r)};
    }
  }
  return std::nullopt;
}

std::optional<LawViolation> find_associativity_violation(const AlgebraTable& a) {
  return scan_triples(a, [&](std::size_t x, std::size_t y, std::size_t z) {
    return left_nested(a, x, y, z) - right_nested(a, x, y, z);
  });
}

}  // namespace zinbiel
