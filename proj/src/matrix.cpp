#include "frieze/matrix.hpp"

#include <optional>
#include <utility>

#include "frieze/errors.hpp"

namespace frieze {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Rational& RatMatrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
  return entries_[r * cols_ + c];
}

const Rational& RatMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
  return entries_[r * cols_ + c];
}

bool RatMatrix::operator==(const RatMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows_) throw DimensionError("matrix product shape mismatch");
  RatMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t t = 0; t < cols_; ++t) {
      const Rational& x = at(i, t);
      if (x == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out.at(i, j) += x * other.at(t, j);
    }
  return out;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Rational RatMatrix::det() const {
  if (!is_square()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;  // empty-minor convention
  RatMatrix m = *this;
  Rational sign(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::optional<std::size_t> pivot;
    for (std::size_t r = c; r < n; ++r)
      if (m.at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (!pivot) return 0;
    if (*pivot != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m.at(c, j), m.at(*pivot, j));
      sign = -sign;
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m.at(r, c) == 0) continue;
      Rational f = m.at(r, c) / m.at(c, c);
      for (std::size_t j = c; j < n; ++j) m.at(r, j) -= f * m.at(c, j);
    }
  }
  Rational out = sign;
  for (std::size_t i = 0; i < n; ++i) out *= m.at(i, i);
  return out;
}

Rational RatMatrix::minor(const std::vector<std::size_t>& row_idx,
                          const std::vector<std::size_t>& col_idx) const {
  if (row_idx.size() != col_idx.size())
    throw DimensionError("minor index lists differ in length");
  auto check = [](const std::vector<std::size_t>& idx, std::size_t bound) {
    for (std::size_t t = 0; t < idx.size(); ++t) {
      if (idx[t] >= bound) throw DimensionError("minor index out of range");
      if (t > 0 && idx[t] <= idx[t - 1])
        throw DimensionError("minor indices must be strictly increasing");
    }
  };
  check(row_idx, rows_);
  check(col_idx, cols_);
  RatMatrix sub(row_idx.size(), col_idx.size());
  for (std::size_t r = 0; r < row_idx.size(); ++r)
    for (std::size_t c = 0; c < col_idx.size(); ++c)
      sub.at(r, c) = at(row_idx[r], col_idx[c]);
  return sub.det();
}

RatMatrix RatMatrix::inverse() const {
  if (!is_square()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = rows_;
  RatMatrix m = *this;
  RatMatrix inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::optional<std::size_t> pivot;
    for (std::size_t r = c; r < n; ++r)
      if (m.at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (!pivot) throw SingularMatrixError("matrix is singular");
    if (*pivot != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m.at(c, j), m.at(*pivot, j));
        std::swap(inv.at(c, j), inv.at(*pivot, j));
      }
    }
    Rational p = m.at(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m.at(c, j) /= p;
      inv.at(c, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m.at(r, c) == 0) continue;
      Rational f = m.at(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        m.at(r, j) -= f * m.at(c, j);
        inv.at(r, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

std::size_t RatMatrix::rank() const {
  RatMatrix m = *this;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::optional<std::size_t> pivot;
    for (std::size_t i = r; i < rows_; ++i)
      if (m.at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (!pivot) continue;
    if (*pivot != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(r, j), m.at(*pivot, j));
    for (std::size_t i = r + 1; i < rows_; ++i) {
      if (m.at(i, c) == 0) continue;
      Rational f = m.at(i, c) / m.at(r, c);
      for (std::size_t j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : entries_)
    if (x != 0) return false;
  return true;
}

}  // namespace frieze
