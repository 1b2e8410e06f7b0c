#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "grm/finite_field.hpp"

namespace grm {

using Vec = std::vector<Elem>;

// Dense row-major matrix over F_q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);
  // Matrix whose columns are the given vectors (all of equal length).
  static Matrix from_columns(const std::vector<Vec>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Vec column(std::size_t c) const;
  const Vec& data() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

Matrix mat_mul(const FieldTable& f, const Matrix& a, const Matrix& b);
Vec mat_vec(const FieldTable& f, const Matrix& a, const Vec& x);
std::size_t rank(const FieldTable& f, Matrix a);
// Basis of {x : A x = 0}, one vector per free column in increasing order.
std::vector<Vec> kernel(const FieldTable& f, const Matrix& a);
std::optional<Matrix> inverse(const FieldTable& f, const Matrix& a);
bool is_invertible(const FieldTable& f, const Matrix& a);

Vec vec_add(const FieldTable& f, const Vec& a, const Vec& b);
Vec vec_scale(const FieldTable& f, Elem s, const Vec& a);
bool is_zero(const Vec& v);

}  // namespace grm
