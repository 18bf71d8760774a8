#include "zinbiel/tensor.hpp"

#include <algorithm>

namespace zinbiel {

namespace {

template <typename Map, typename Key>
void accumulate(Map& entries, const Key& key, const Scalar& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = entries.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries.erase(it);
  }
}

template <typename Map, typename Key>
void assign(Map& entries, const Key& key, const Scalar& value) {
  if (value.is_zero()) {
    entries.erase(key);
  } else {
    entries.insert_or_assign(key, value);
  }
}

std::string index_error(const char* what, std::size_t index, std::size_t dim) {
  return std::string(what) + " index " + std::to_string(index) +
         " out of range for dimension " + std::to_string(dim);
}

}  // namespace

// ---------------------------------------------------------------- Vector

Vector Vector::basis(std::size_t dim, std::size_t index) {
  Vector v(dim);
  v.set(index, Scalar(1));
  return v;
}

Scalar Vector::at(std::size_t index) const {
  auto it = entries_.find(index);
  return it == entries_.end() ? Scalar() : it->second;
}

void Vector::set(std::size_t index, const Scalar& value) {
  if (index >= dim_) throw DimensionError(index_error("vector", index, dim_));
  assign(entries_, index, value);
}

void Vector::add_to(std::size_t index, const Scalar& value) {
  if (index >= dim_) throw DimensionError(index_error("vector", index, dim_));
  accumulate(entries_, index, value);
}

Vector& Vector::operator+=(const Vector& other) {
  if (dim_ != other.dim_) throw DimensionError("vector dimension mismatch");
  for (const auto& [i, v] : other.entries_) accumulate(entries_, i, v);
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  if (dim_ != other.dim_) throw DimensionError("vector dimension mismatch");
  for (const auto& [i, v] : other.entries_) accumulate(entries_, i, -v);
  return *this;
}

Vector& Vector::operator*=(const Scalar& factor) {
  if (factor.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [i, v] : entries_) v *= factor;
  return *this;
}

std::string format_vector(const Vector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [i, c] : v.entries()) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Scalar mag = c.abs();
    if (!mag.is_one()) {
      out += mag.is_integer() ? mag.str() : "(" + mag.str() + ")";
    }
    out += "e" + std::to_string(i);
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------- Matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar(1));
  return m;
}

Scalar Matrix::at(std::size_t row, std::size_t col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Scalar() : it->second;
}

void Matrix::set(std::size_t row, std::size_t col, const Scalar& value) {
  if (row >= rows_) throw DimensionError(index_error("matrix row", row, rows_));
  if (col >= cols_) throw DimensionError(index_error("matrix column", col, cols_));
  assign(entries_, Key{row, col}, value);
}

void Matrix::add_to(std::size_t row, std::size_t col, const Scalar& value) {
  if (row >= rows_) throw DimensionError(index_error("matrix row", row, rows_));
  if (col >= cols_) throw DimensionError(index_error("matrix column", col, cols_));
  accumulate(entries_, Key{row, col}, value);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (const auto& [key, v] : entries_) t.entries_.emplace(Key{key.second, key.first}, v);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.dim() != cols_) throw DimensionError("matrix-vector dimension mismatch");
  Vector out(rows_);
  for (const auto& [key, m] : entries_) {
    auto it = v.entries().find(key.second);
    if (it != v.entries().end()) out.add_to(key.first, m * it->second);
  }
  return out;
}

Vector Matrix::column(std::size_t col) const {
  if (col >= cols_) throw DimensionError(index_error("matrix column", col, cols_));
  Vector out(rows_);
  for (const auto& [key, m] : entries_) {
    if (key.second == col) out.set(key.first, m);
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionError("matrix shape mismatch");
  }
  for (const auto& [key, v] : other.entries_) accumulate(entries_, key, v);
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionError("matrix shape mismatch");
  }
  for (const auto& [key, v] : other.entries_) accumulate(entries_, key, -v);
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& factor) {
  if (factor.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [key, v] : entries_) v *= factor;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  // Bucket b by row so the product is a sparse join on the inner index.
  std::vector<std::vector<std::pair<std::size_t, const Scalar*>>> rows(b.rows_);
  for (const auto& [key, v] : b.entries_) rows[key.first].emplace_back(key.second, &v);
  Matrix out(a.rows_, b.cols_);
  for (const auto& [key, v] : a.entries_) {
    for (const auto& [col, w] : rows[key.second]) {
      accumulate(out.entries_, Matrix::Key{key.first, col}, v * *w);
    }
  }
  return out;
}

std::size_t rank(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  // Clear denominators row by row; rank is unchanged by row scaling.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols, 0));
  std::vector<mpz_class> row_lcm(rows, 1);
  for (const auto& [key, v] : m.entries()) {
    mpz_lcm(row_lcm[key.first].get_mpz_t(), row_lcm[key.first].get_mpz_t(),
            v.raw().get_den_mpz_t());
  }
  for (const auto& [key, v] : m.entries()) {
    a[key.first][key.second] = v.numerator() * (row_lcm[key.first] / v.denominator());
  }

  std::size_t r = 0;
  mpz_class prev_pivot = 1;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class t = a[r][col] * a[i][j] - a[i][col] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev_pivot = a[r][col];
    ++r;
  }
  return r;
}

// ---------------------------------------------------------------- Tensor3

void Tensor3::check(const Key& key) const {
  for (std::size_t axis = 0; axis < 3; ++axis) {
    if (key[axis] >= dims_[axis]) {
      throw DimensionError(index_error("tensor", key[axis], dims_[axis]));
    }
  }
}

Scalar Tensor3::at(const Key& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? Scalar() : it->second;
}

void Tensor3::set(const Key& key, const Scalar& value) {
  check(key);
  assign(entries_, key, value);
}

void Tensor3::add_to(const Key& key, const Scalar& value) {
  check(key);
  accumulate(entries_, key, value);
}

}  // namespace zinbiel
