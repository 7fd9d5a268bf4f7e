#pragma once

#include <string>
#include <vector>

#include "frieze/difference_equation.hpp"
#include "frieze/matrix.hpp"
#include "frieze/rational.hpp"

namespace frieze {

struct WindowFailure {
  long i = 0;
  long j = 0;
  Rational value;
};

struct CheckReport {
  std::vector<WindowFailure> failures;
  bool ok() const { return failures.empty(); }
  std::string describe(const std::string& what) const;
};

// Closed SL_{k+1}-frieze pattern of width w, period n = k+w+2, stored on one
// fundamental domain: band[i][t] = d_{i,i+t} for t = 0..w-1. The bounding
// rows (1 at offsets -1 and w, zeros for the k rows beyond) are implicit.
class FriezePattern {
 public:
  FriezePattern(int k, int w, std::vector<std::vector<Rational>> band);

  int k() const { return k_; }
  int w() const { return w_; }
  int n() const { return k_ + w_ + 2; }

  // Total accessor: horizontal n-periodicity plus the vertical continuation
  // d_{i,j+n} = (-1)^k d_{i,j} of the diagonals beyond the strip.
  Rational entry(long i, long j) const;

  // alpha_i^j = d_{i+1, w+i-j+1}, 1 <= j <= w
  Rational alpha(long i, int j) const;

  // frieze with entries e_{i,j} = d_{i+t, j+t}
  FriezePattern shifted(long t) const;

  bool operator==(const FriezePattern& other) const;
  bool operator!=(const FriezePattern& other) const { return !(*this == other); }

  const std::vector<std::vector<Rational>>& band() const { return band_; }

  // rows[j-1][i] = alpha_i^j  (the coefficient-row layout used by the JSON
  // schema and by the Gale transform)
  std::vector<std::vector<Rational>> alpha_rows() const;
  static FriezePattern from_alpha_rows(int k,
                                       const std::vector<std::vector<Rational>>& rows);

 private:
  int k_, w_;
  std::vector<std::vector<Rational>> band_;
};

// North-East diagonal construction: mu_i solves the equation with initial
// window (0,...,0,1) at indices i-k-1..i-1 and fills d_{i,*}.
FriezePattern frieze_from_equation(const DifferenceEquation& eq,
                                   bool require_superperiodic = true);

// Reads the order-(k+1) equation satisfied by the South-East diagonals;
// validates SL/tameness first and checks the trailing coefficient is 1.
DifferenceEquation equation_from_frieze(const FriezePattern& f);

// Adjacent (k+1)x(k+1) windows equal 1; failures are reported, not thrown.
CheckReport sl_check(const FriezePattern& f);

// Adjacent (k+2)x(k+2) windows (including those overlapping the bounding
// rows) vanish.
CheckReport tame_check(const FriezePattern& f);

// M^(i): (k+1) x n with M[r][c] = d_{i+r, i+c-1}
RatMatrix matrix_form(const FriezePattern& f, long i);

// Minor of m on the cyclic column interval {start, ..., start+len-1} mod n,
// columns taken in sorted order.
Rational interval_minor(const RatMatrix& m, long start, int len);

// Reflection about the median horizontal axis: e_{i,j} = d_{j+k+1, i+w+k}.
// Realizes projective duality: horizontal_flip(frieze(eq)) == frieze(dual(eq)).
FriezePattern horizontal_flip(const FriezePattern& f);

}  // namespace frieze
