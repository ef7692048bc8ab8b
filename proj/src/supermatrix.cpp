#include "sgq/supermatrix.hpp"

#include <sstream>

#include "sgq/errors.hpp"
#include "sgq/even_linalg.hpp"

namespace sgq {

namespace {

std::string at(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

std::size_t count_below(const std::vector<std::size_t>& index, std::size_t bound) {
  std::size_t n = 0;
  for (auto i : index)
    if (i < bound) ++n;
  return n;
}

void require_all_even(const SuperMatrix& x, const char* what) {
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (!x(i, j).has_parity(Parity::Even)) throw ParityPatternViolation(std::string(what) + ": odd entry at " + at(i, j));
}

}  // namespace

std::string SuperShape::to_string() const {
  std::ostringstream out;
  out << "(" << even_rows << "|" << odd_rows << ")x(" << even_cols << "|" << odd_cols << ")";
  return out.str();
}

SuperMatrix::SuperMatrix(SuperRingSpec ring, SuperShape shape)
    : ring_(std::move(ring)), shape_(shape), entries_(shape.rows() * shape.cols(), SuperElement(ring_)) {}

SuperMatrix SuperMatrix::identity(const SuperRingSpec& ring, std::size_t m, std::size_t n) {
  SuperMatrix out(ring, SuperShape::square(m, n));
  for (std::size_t i = 0; i < m + n; ++i) out.entries_[i * (m + n) + i] = SuperElement(ring, Gaussian(1));
  return out;
}

void SuperMatrix::set(std::size_t i, std::size_t j, SuperElement value) {
  if (i >= rows() || j >= cols()) throw ShapeMismatch("index " + at(i, j) + " outside " + shape_.to_string());
  if (!(value.ring() == ring_)) throw RingMismatch("entry " + at(i, j));
  if (!value.has_parity(shape_.entry_parity(i, j))) {
    throw ParityPatternViolation("entry " + at(i, j) + " = " + value.to_string() + " must be " +
                                 (shape_.entry_parity(i, j) == Parity::Even ? "even" : "odd"));
  }
  entries_[i * cols() + j] = std::move(value);
}

SuperMatrix SuperMatrix::block(std::size_t row_begin, std::size_t row_count, std::size_t col_begin,
                               std::size_t col_count) const {
  if (row_begin + row_count > rows() || col_begin + col_count > cols()) {
    throw ShapeMismatch("block outside " + shape_.to_string());
  }
  std::vector<std::size_t> ri(row_count), ci(col_count);
  for (std::size_t k = 0; k < row_count; ++k) ri[k] = row_begin + k;
  for (std::size_t k = 0; k < col_count; ++k) ci[k] = col_begin + k;
  return select(ri, ci);
}

SuperMatrix SuperMatrix::select(const std::vector<std::size_t>& row_index,
                                const std::vector<std::size_t>& col_index) const {
  for (std::size_t k = 1; k < row_index.size(); ++k)
    if (row_index[k] <= row_index[k - 1]) throw ShapeMismatch("row selection must be increasing");
  for (std::size_t k = 1; k < col_index.size(); ++k)
    if (col_index[k] <= col_index[k - 1]) throw ShapeMismatch("column selection must be increasing");
  if ((!row_index.empty() && row_index.back() >= rows()) || (!col_index.empty() && col_index.back() >= cols())) {
    throw ShapeMismatch("selection outside " + shape_.to_string());
  }
  SuperShape shape;
  shape.even_rows = count_below(row_index, shape_.even_rows);
  shape.odd_rows = row_index.size() - shape.even_rows;
  shape.even_cols = count_below(col_index, shape_.even_cols);
  shape.odd_cols = col_index.size() - shape.even_cols;
  SuperMatrix out(ring_, shape);
  for (std::size_t i = 0; i < row_index.size(); ++i)
    for (std::size_t j = 0; j < col_index.size(); ++j)
      out.entries_[i * out.cols() + j] = (*this)(row_index[i], col_index[j]);
  return out;
}

void SuperMatrix::set_block(std::size_t row_begin, std::size_t col_begin, const SuperMatrix& value) {
  if (row_begin + value.rows() > rows() || col_begin + value.cols() > cols()) {
    throw ShapeMismatch("set_block outside " + shape_.to_string());
  }
  for (std::size_t i = 0; i < value.rows(); ++i)
    for (std::size_t j = 0; j < value.cols(); ++j) set(row_begin + i, col_begin + j, value(i, j));
}

SuperMatrix SuperMatrix::body() const {
  SuperMatrix out(*this);
  for (auto& e : out.entries_) e = e.body();
  return out;
}

bool SuperMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

SuperMatrix SuperMatrix::operator-() const {
  SuperMatrix out(*this);
  for (auto& e : out.entries_) e = -e;
  return out;
}

SuperMatrix& SuperMatrix::operator+=(const SuperMatrix& other) {
  if (!(shape_ == other.shape_)) throw ShapeMismatch("add " + shape_.to_string() + " + " + other.shape_.to_string());
  if (!(ring_ == other.ring_)) throw RingMismatch("matrix add");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

SuperMatrix& SuperMatrix::operator-=(const SuperMatrix& other) {
  if (!(shape_ == other.shape_)) throw ShapeMismatch("subtract " + shape_.to_string() + " - " + other.shape_.to_string());
  if (!(ring_ == other.ring_)) throw RingMismatch("matrix subtract");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
  if (a.shape_.even_cols != b.shape_.even_rows || a.shape_.odd_cols != b.shape_.odd_rows) {
    throw ShapeMismatch("multiply " + a.shape_.to_string() + " * " + b.shape_.to_string());
  }
  if (!(a.ring_ == b.ring_)) throw RingMismatch("matrix multiply");
  SuperMatrix out(a.ring_, SuperShape{a.shape_.even_rows, a.shape_.odd_rows, b.shape_.even_cols, b.shape_.odd_cols});
  const std::size_t inner = a.cols();
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) {
      SuperElement acc(a.ring_);
      for (std::size_t k = 0; k < inner; ++k) {
        const auto& x = a(i, k);
        const auto& y = b(k, j);
        if (!x.is_zero() && !y.is_zero()) acc += x * y;
      }
      out.entries_[i * out.cols() + j] = std::move(acc);
    }
  }
  return out;
}

bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
  return a.shape_ == b.shape_ && a.ring_ == b.ring_ && a.entries_ == b.entries_;
}

std::string SuperMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows(); ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols(); ++j) out << (j ? ", " : "") << (*this)(i, j).to_string();
    out << "]";
  }
  out << "]";
  return out.str();
}

SuperMatrix sm_validate(const SuperRingSpec& ring, const SuperShape& shape,
                        const std::vector<std::vector<SuperElement>>& entries) {
  if (entries.size() != shape.rows()) {
    throw ShapeMismatch("expected " + std::to_string(shape.rows()) + " rows, got " + std::to_string(entries.size()));
  }
  SuperMatrix out(ring, shape);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].size() != shape.cols()) {
      throw ShapeMismatch("row " + std::to_string(i) + " has " + std::to_string(entries[i].size()) +
                          " entries, expected " + std::to_string(shape.cols()));
    }
    for (std::size_t j = 0; j < entries[i].size(); ++j) out.set(i, j, entries[i][j]);
  }
  return out;
}

SuperMatrix sm_mul(const SuperMatrix& x, const SuperMatrix& y) { return x * y; }

SuperElement even_block_determinant(const SuperMatrix& x) {
  if (x.rows() != x.cols()) throw ShapeMismatch("determinant of non-square " + x.shape().to_string());
  require_all_even(x, "determinant");
  auto flat = x.flat();
  return even::determinant(x.ring(), x.rows(), flat);
}

SuperMatrix even_block_inverse(const SuperMatrix& x) {
  if (x.rows() != x.cols() || !x.shape().is_square()) {
    throw ShapeMismatch("inverse of non-square " + x.shape().to_string());
  }
  require_all_even(x, "even_block_inverse");
  auto flat = x.flat();
  auto inv = even::inverse(x.ring(), x.rows(), flat);
  SuperMatrix out(x.ring(), x.shape());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out.set(i, j, std::move(inv[i * x.cols() + j]));
  return out;
}

bool sm_invertible(const SuperMatrix& x) {
  if (!x.shape().is_square()) return false;
  const std::size_t m = x.shape().even_rows;
  const std::size_t n = x.shape().odd_rows;
  auto a = x.block(0, m, 0, m).flat();
  auto d = x.block(m, n, m, n).flat();
  return even::body_invertible(x.ring(), m, a) && even::body_invertible(x.ring(), n, d);
}

SuperMatrix sm_inv(const SuperMatrix& x) {
  if (!x.shape().is_square()) throw ShapeMismatch("sm_inv of non-square " + x.shape().to_string());
  const std::size_t m = x.shape().even_rows;
  const std::size_t n = x.shape().odd_rows;
  SuperMatrix a = x.block(0, m, 0, m);
  SuperMatrix b = x.block(0, m, m, n);
  SuperMatrix c = x.block(m, n, 0, m);
  SuperMatrix d = x.block(m, n, m, n);

  auto a_flat = a.flat();
  if (!even::body_invertible(x.ring(), m, a_flat)) throw NotInvertible("body of block A is singular");
  auto d_flat = d.flat();
  if (!even::body_invertible(x.ring(), n, d_flat)) throw NotInvertible("body of block D is singular");

  SuperMatrix d_inv = even_block_inverse(d);
  SuperMatrix s_inv = even_block_inverse(a - b * d_inv * c);
  SuperMatrix top_right = -(s_inv * b * d_inv);
  SuperMatrix bottom_left = -(d_inv * c * s_inv);
  SuperMatrix bottom_right = d_inv - bottom_left * b * d_inv;

  SuperMatrix out(x.ring(), x.shape());
  out.set_block(0, 0, s_inv);
  out.set_block(0, m, top_right);
  out.set_block(m, 0, bottom_left);
  out.set_block(m, m, bottom_right);
  return out;
}

SuperElement berezinian(const SuperMatrix& x) {
  if (!x.shape().is_square()) throw ShapeMismatch("berezinian of non-square " + x.shape().to_string());
  const std::size_t m = x.shape().even_rows;
  const std::size_t n = x.shape().odd_rows;
  SuperMatrix d = x.block(m, n, m, n);
  auto d_flat = d.flat();
  if (!even::body_invertible(x.ring(), n, d_flat)) throw NotInvertible("body of block D is singular");
  SuperMatrix d_inv = even_block_inverse(d);
  SuperMatrix schur = x.block(0, m, 0, m) - x.block(0, m, m, n) * d_inv * x.block(m, n, 0, m);
  return even_block_determinant(schur) * se_inv(even_block_determinant(d));
}

}  // namespace sgq
