#pragma once

#include <cstddef>
#include <vector>

#include "frieze/rational.hpp"

namespace frieze {

// Dense matrix of exact rationals. Row-major storage.
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c);
  const Rational& at(std::size_t r, std::size_t c) const;

  bool operator==(const RatMatrix& other) const;
  bool operator!=(const RatMatrix& other) const { return !(*this == other); }

  RatMatrix operator*(const RatMatrix& other) const;
  RatMatrix transposed() const;

  Rational det() const;
  // Determinant of the submatrix on the given rows/columns. Index lists must
  // be strictly increasing and in bounds; empty lists give 1.
  Rational minor(const std::vector<std::size_t>& row_idx,
                 const std::vector<std::size_t>& col_idx) const;
  RatMatrix inverse() const;
  std::size_t rank() const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> entries_;
};

}  // namespace frieze
