#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "halg/ring.hpp"

namespace halg {

// Dense row-major matrix over a Ring. Matrices act on column vectors, so the
// composite g∘f is G * F.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Ring ring, std::size_t rows, std::size_t cols);

  static Matrix identity(const Ring& ring, std::size_t n);
  static Matrix from_rows(const Ring& ring, const std::vector<std::vector<long>>& rows);
  // 1-column matrix
  static Matrix column(const Ring& ring, const std::vector<long>& entries);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  // Bounds-checked access (IndexError).
  const Scalar& at(std::size_t i, std::size_t j) const;
  // Stores ring().reduce(v).
  void set(std::size_t i, std::size_t j, const Scalar& v);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool operator==(const Matrix& o) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& c) const;

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix select_columns(const std::vector<std::size_t>& idx) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;

  // Elementary operations used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, const Scalar& c);  // row dst += c·row src
  void add_col_multiple(std::size_t dst, std::size_t src, const Scalar& c);  // col dst += c·col src
  void scale_row(std::size_t r, const Scalar& c);
  void scale_col(std::size_t c, const Scalar& s);

  std::string to_string() const;

 private:
  void require_same(const Matrix& o, const char* op) const;

  Ring ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const Ring& ring, std::size_t rows, const std::vector<Matrix>& parts);
Matrix vstack(const Ring& ring, std::size_t cols, const std::vector<Matrix>& parts);
Matrix direct_sum(const Matrix& a, const Matrix& b);
// kron(A, B)[i1·rB + i2][j1·cB + j2] = A[i1][j1]·B[i2][j2]
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace halg
