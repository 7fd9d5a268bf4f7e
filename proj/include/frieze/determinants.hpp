#pragma once

#include <vector>

#include "frieze/difference_equation.hpp"
#include "frieze/frieze_pattern.hpp"
#include "frieze/rational.hpp"

namespace frieze {

// Tridiagonal determinant with diagonal a and ones off the diagonal.
// U() = 1, U(a) = a, U(a_1..a_m) = a_m U(a_1..a_{m-1}) - U(a_1..a_{m-2}).
Rational continuant_U(const std::vector<Rational>& a);

// Banded determinant with diagonal `diag`, first superdiagonal `sup`, second
// superdiagonal 1 and first subdiagonal 1. Requires |sup| == |diag| - 1
// (both empty allowed, giving 1).
Rational pentadiagonal_V(const std::vector<Rational>& diag,
                         const std::vector<Rational>& sup);

// Closed-form frieze entry d_{i,i+j} as a (j+1)x(j+1) banded determinant in
// the coefficients a_{i}..a_{i+j}.
Rational entry_determinant(const DifferenceEquation& eq, long i, int j);

// The alternative (w-j)x(w-j) determinant in the coefficients
// a_{i-w+j-1}..a_{i-2}; agrees with entry_determinant on the whole band.
Rational entry_determinant_alt(const DifferenceEquation& eq, long i, int j);

// Coefficient a_{i-1}^{k-j} as a (j+1)x(j+1) determinant in frieze entries,
// 0 <= j < k.
Rational coefficient_from_frieze(const FriezePattern& f, long i, int j);

struct CramerValue {
  Rational value;
  Rational denominator;
};

// alpha_i^j of eq recovered by Cramer's rule on the dual frieze; the
// denominator is an SL window and must evaluate to exactly 1.
CramerValue cramer_alpha(const DifferenceEquation& eq, long i, int j);

}  // namespace frieze
