#include "halg/matrix.hpp"

#include <sstream>
#include <utility>

namespace halg {

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const Ring& ring, const std::vector<std::vector<long>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Matrix m(ring, rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw ShapeError("ragged rows");
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = ring.from_int(rows[i][j]);
  }
  return m;
}

Matrix Matrix::column(const Ring& ring, const std::vector<long>& entries) {
  Matrix m(ring, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = ring.from_int(entries[i]);
  return m;
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw IndexError("matrix index out of range");
  return (*this)(i, j);
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (i >= rows_ || j >= cols_) throw IndexError("matrix index out of range");
  (*this)(i, j) = ring_.reduce(v);
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

void Matrix::require_same(const Matrix& o, const char* op) const {
  if (!(ring_ == o.ring_)) throw RingError(std::string("ring mismatch in ") + op);
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same(o, "product");
  if (cols_ != o.rows_)
    throw ShapeError("cannot multiply " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                     " by " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  Matrix r(ring_, rows_, o.cols_);
  // i-k-j order so zero entries of the left factor skip a whole row pass.
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (sgn(b) != 0) ring_.add_mul(r(i, j), a, b);
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same(o, "sum");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("shape mismatch in sum");
  Matrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = ring_.add(data_[i], o.data_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
  Matrix r(*this);
  for (auto& x : r.data_) x = ring_.neg(x);
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r(*this);
  for (auto& x : r.data_) x = ring_.mul(x, c);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw IndexError("block out of range");
  Matrix r(ring_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
  return r;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  require_same(b, "set_block");
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw IndexError("block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
  Matrix r(ring_, rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) r(i, j) = at(i, idx[j]);
  return r;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix r(ring_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = at(idx[i], j);
  return r;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void Matrix::add_row_multiple(std::size_t dst, std::size_t src, const Scalar& c) {
  if (sgn(c) == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    const Scalar& s = (*this)(src, j);
    if (sgn(s) != 0) ring_.add_mul((*this)(dst, j), c, s);
  }
}

void Matrix::add_col_multiple(std::size_t dst, std::size_t src, const Scalar& c) {
  if (sgn(c) == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Scalar& s = (*this)(i, src);
    if (sgn(s) != 0) ring_.add_mul((*this)(i, dst), c, s);
  }
}

void Matrix::scale_row(std::size_t r, const Scalar& c) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = ring_.mul((*this)(r, j), c);
}

void Matrix::scale_col(std::size_t c, const Scalar& s) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = ring_.mul((*this)(i, c), s);
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "] (" << rows_ << "x" << cols_ << " over " << ring_.tag() << ")";
  return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("hstack row mismatch");
  Matrix r(a.ring(), a.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(0, a.cols(), b);
  return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw ShapeError("vstack column mismatch");
  Matrix r(a.ring(), a.rows() + b.rows(), a.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), 0, b);
  return r;
}

Matrix hstack(const Ring& ring, std::size_t rows, const std::vector<Matrix>& parts) {
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw ShapeError("hstack row mismatch");
    cols += p.cols();
  }
  Matrix r(ring, rows, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    r.set_block(0, c, p);
    c += p.cols();
  }
  return r;
}

Matrix vstack(const Ring& ring, std::size_t cols, const std::vector<Matrix>& parts) {
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw ShapeError("vstack column mismatch");
    rows += p.rows();
  }
  Matrix r(ring, rows, cols);
  std::size_t o = 0;
  for (const auto& p : parts) {
    r.set_block(o, 0, p);
    o += p.rows();
  }
  return r;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix r(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), a.cols(), b);
  return r;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (!(a.ring() == b.ring())) throw RingError("ring mismatch in kron");
  const Ring& R = a.ring();
  Matrix r(R, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Scalar& x = a(i1, j1);
      if (sgn(x) == 0) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
          const Scalar& y = b(i2, j2);
          if (sgn(y) != 0) r(i1 * b.rows() + i2, j1 * b.cols() + j2) = R.mul(x, y);
        }
    }
  return r;
}

}  // namespace halg
