#pragma once

// Parity-patterned matrices over a free supercommutative ring.
//
// Rows and columns are graded with the even indices first. Only even
// morphisms are representable: the entry at (i, j) is even when row i and
// column j have the same parity and odd otherwise. Under this convention
// the product is the ordinary row-by-column product with no extra signs.

#include <cstddef>
#include <string>
#include <vector>

#include "sgq/super_element.hpp"

namespace sgq {

struct SuperShape {
  std::size_t even_rows = 0;
  std::size_t odd_rows = 0;
  std::size_t even_cols = 0;
  std::size_t odd_cols = 0;

  static SuperShape square(std::size_t m, std::size_t n) { return {m, n, m, n}; }

  std::size_t rows() const { return even_rows + odd_rows; }
  std::size_t cols() const { return even_cols + odd_cols; }
  bool is_square() const { return even_rows == even_cols && odd_rows == odd_cols; }
  Parity row_parity(std::size_t i) const { return i < even_rows ? Parity::Even : Parity::Odd; }
  Parity col_parity(std::size_t j) const { return j < even_cols ? Parity::Even : Parity::Odd; }
  Parity entry_parity(std::size_t i, std::size_t j) const { return row_parity(i) + col_parity(j); }

  std::string to_string() const;

  friend bool operator==(const SuperShape&, const SuperShape&) = default;
};

class SuperMatrix {
 public:
  /// Zero matrix.
  SuperMatrix(SuperRingSpec ring, SuperShape shape);

  static SuperMatrix identity(const SuperRingSpec& ring, std::size_t m, std::size_t n);

  const SuperRingSpec& ring() const { return ring_; }
  const SuperShape& shape() const { return shape_; }
  std::size_t rows() const { return shape_.rows(); }
  std::size_t cols() const { return shape_.cols(); }

  const SuperElement& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
  /// Throws ParityPatternViolation or RingMismatch.
  void set(std::size_t i, std::size_t j, SuperElement value);

  /// Contiguous sub-block; its grading is inherited from the parent.
  SuperMatrix block(std::size_t row_begin, std::size_t row_count, std::size_t col_begin,
                    std::size_t col_count) const;
  /// Rows and columns picked by increasing index.
  SuperMatrix select(const std::vector<std::size_t>& row_index, const std::vector<std::size_t>& col_index) const;
  void set_block(std::size_t row_begin, std::size_t col_begin, const SuperMatrix& value);

  /// Entrywise body.
  SuperMatrix body() const;
  bool is_zero() const;

  /// Row-major copy of the entries.
  std::vector<SuperElement> flat() const { return entries_; }

  SuperMatrix operator-() const;
  SuperMatrix& operator+=(const SuperMatrix& other);
  SuperMatrix& operator-=(const SuperMatrix& other);
  friend SuperMatrix operator+(SuperMatrix a, const SuperMatrix& b) { return a += b; }
  friend SuperMatrix operator-(SuperMatrix a, const SuperMatrix& b) { return a -= b; }
  friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
  friend bool operator==(const SuperMatrix& a, const SuperMatrix& b);

  std::string to_string() const;

 private:
  SuperRingSpec ring_;
  SuperShape shape_;
  std::vector<SuperElement> entries_;
};

/// Checks dimensions and the parity pattern of a raw row-major array.
/// Throws ShapeMismatch or ParityPatternViolation naming the first bad (i, j).
SuperMatrix sm_validate(const SuperRingSpec& ring, const SuperShape& shape,
                        const std::vector<std::vector<SuperElement>>& entries);

/// Throws ShapeMismatch or RingMismatch.
SuperMatrix sm_mul(const SuperMatrix& x, const SuperMatrix& y);

/// Schur-complement inverse of a square supermatrix. Throws NotInvertible
/// naming the singular body block (A = even-even, D = odd-odd).
SuperMatrix sm_inv(const SuperMatrix& x);

/// det(A - B D^-1 C) / det(D). Throws NotInvertible when D is not invertible.
SuperElement berezinian(const SuperMatrix& x);

/// True iff the bodies of the A and D blocks are invertible.
bool sm_invertible(const SuperMatrix& x);

/// Inverse of a square matrix whose entries are all even, e.g. a block of
/// shape (k|0) x (k|0) or (0|k) x (0|k). Throws NotInvertible.
SuperMatrix even_block_inverse(const SuperMatrix& x);
SuperElement even_block_determinant(const SuperMatrix& x);

}  // namespace sgq
