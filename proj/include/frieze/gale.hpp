#pragma once

#include "frieze/difference_equation.hpp"
#include "frieze/frieze_pattern.hpp"
#include "frieze/matrix.hpp"

namespace frieze {

// diag(1, -1, 1, ..., (-1)^{n-1})
RatMatrix signature_matrix(int n);

// Combinatorial Gale transform: the order-(w+1) equation whose coefficients
// are the alpha-rows of the frieze of eq. Involutive: gale(gale(eq)) == eq.
DifferenceEquation gale_transform(const DifferenceEquation& eq);

// Frieze-level Gale duality: SL_{k+1} frieze of width w -> SL_{w+1} frieze of
// width k.
FriezePattern gale_on_frieze(const FriezePattern& f);

// Projective dual: b_i^j = a_{i+k-j}^{k+1-j}. Squares to the coefficient
// shift i -> i+k-1 (the identity for k = 1).
DifferenceEquation projective_dual(const DifferenceEquation& eq);

// M^(i)_F * D * transpose(M^(j)_{G(F)}) with j = i-(w+1) mod n; the contract
// is that this is the zero (k+1) x (w+1)-shaped product.
RatMatrix orthogonality_certificate(const FriezePattern& f, long i);

// Self-duality: the flip image equals the frieze up to a horizontal shift
// (the notion is then independent of the fundamental-domain phase).
bool is_self_dual(const FriezePattern& f);
bool is_self_dual(const DifferenceEquation& eq);

// Cross-module consistency: iota(A_F) equals the cut matrix of the frieze of
// shift_1(gale(projective_dual(eq))). The unit shift is the fixed phase
// between the anchored cut and the equation-level composition.
bool iota_equals_gale_star(const DifferenceEquation& eq);

}  // namespace frieze
