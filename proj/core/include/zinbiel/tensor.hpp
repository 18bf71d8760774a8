#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zinbiel/scalar.hpp"

namespace zinbiel {

/// Sparse vector over the rationals. Zero entries are never stored, so two
/// vectors compare equal exactly when they represent the same element.
class Vector {
 public:
  using Entries = std::map<std::size_t, Scalar>;

  Vector() = default;
  explicit Vector(std::size_t dim) : dim_(dim) {}

  static Vector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return dim_; }
  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  Scalar at(std::size_t index) const;
  void set(std::size_t index, const Scalar& value);
  /// Adds `value` to the entry at `index`, dropping it if it cancels.
  void add_to(std::size_t index, const Scalar& value);

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(const Scalar& factor);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Scalar& s, Vector v) { return v *= s; }
  friend Vector operator-(Vector v) { return v *= Scalar(-1); }
  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::size_t dim_ = 0;
  Entries entries_;
};

/// Human-readable form such as "e1 - (1/30)e5"; "0" for the zero vector.
std::string format_vector(const Vector& v);

class Matrix {
 public:
  using Key = std::pair<std::size_t, std::size_t>;
  using Entries = std::map<Key, Scalar>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  Scalar at(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, const Scalar& value);
  void add_to(std::size_t row, std::size_t col, const Scalar& value);

  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  Vector column(std::size_t col) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Scalar& factor);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& s, Matrix m) { return m *= s; }
  /// Composition: (a * b) v = a (b v).
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Entries entries_;
};

/// Exact rank over the rationals (fraction-free Bareiss elimination).
std::size_t rank(const Matrix& m);

class Tensor3 {
 public:
  using Key = std::array<std::size_t, 3>;
  using Entries = std::map<Key, Scalar>;

  Tensor3() = default;
  Tensor3(std::size_t d0, std::size_t d1, std::size_t d2) : dims_{d0, d1, d2} {}

  const Key& dims() const { return dims_; }
  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  Scalar at(const Key& key) const;
  void set(const Key& key, const Scalar& value);
  void add_to(const Key& key, const Scalar& value);

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  void check(const Key& key) const;

  Key dims_{0, 0, 0};
  Entries entries_;
};

}  // namespace zinbiel
