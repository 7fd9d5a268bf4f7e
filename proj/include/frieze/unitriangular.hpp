#pragma once

#include <cstddef>

#include "frieze/frieze_pattern.hpp"
#include "frieze/matrix.hpp"

namespace frieze {

// Upper unitriangular square matrix over the rationals.
class UnitriangularMatrix {
 public:
  explicit UnitriangularMatrix(RatMatrix m);

  std::size_t size() const { return m_.rows(); }
  const RatMatrix& matrix() const { return m_; }
  const Rational& at(std::size_t r, std::size_t c) const { return m_.at(r, c); }

  bool operator==(const UnitriangularMatrix& other) const { return m_ == other.m_; }

 private:
  RatMatrix m_;
};

// A_F: the n x n cut anchored at d_{1,1}, with w+2 nonzero diagonals:
// A[i][i] = 1, A[i][i+1+t] = d_{i+1,i+1+t} for t < w, A[i][i+w+1] = 1.
UnitriangularMatrix cut_matrix(const FriezePattern& f);

// x -> D x^{-1} D; an anti-involution of the unitriangular group.
UnitriangularMatrix iota(const UnitriangularMatrix& x);

// Entry (i,j) of iota(x) equals the minor of x on rows {i..j-1} and columns
// {i+1..j} (0-based, j > i).
bool minor_identity_check(const UnitriangularMatrix& x, std::size_t i, std::size_t j);

// Reads the SL_{w+1} frieze out of iota(cut_matrix(f)) by extending the
// strip with vanishing-minor windows. Involutive; equals
// shift_1(gale_on_frieze(horizontal_flip(f))).
FriezePattern iota_on_frieze(const FriezePattern& f);

}  // namespace frieze
