#include "frieze/gale.hpp"

#include <utility>

#include "frieze/errors.hpp"
#include "frieze/unitriangular.hpp"

namespace frieze {

RatMatrix signature_matrix(int n) {
  RatMatrix d(n, n);
  for (int i = 0; i < n; ++i) d.at(i, i) = (i % 2 == 0) ? 1 : -1;
  return d;
}

DifferenceEquation gale_transform(const DifferenceEquation& eq) {
  if (eq.width() < 1) throw DomainError("gale transform needs width >= 1");
  FriezePattern f = frieze_from_equation(eq, /*require_superperiodic=*/true);
  const int n = eq.n(), w = eq.width();
  std::vector<std::vector<Rational>> coeffs(n, std::vector<Rational>(w));
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= w; ++j) coeffs[i][j - 1] = f.alpha(i, j);
  return DifferenceEquation(w, n, std::move(coeffs));
}

FriezePattern gale_on_frieze(const FriezePattern& f) {
  return frieze_from_equation(gale_transform(equation_from_frieze(f)));
}

DifferenceEquation projective_dual(const DifferenceEquation& eq) {
  const int k = eq.k(), n = eq.n();
  std::vector<std::vector<Rational>> coeffs(n, std::vector<Rational>(k));
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= k; ++j) coeffs[i][j - 1] = eq.coef(i + k - j, k + 1 - j);
  return DifferenceEquation(k, n, std::move(coeffs));
}

RatMatrix orthogonality_certificate(const FriezePattern& f, long i) {
  const int n = f.n(), w = f.w();
  FriezePattern g = gale_on_frieze(f);
  long j = mod_index(i - (w + 1), n);
  return matrix_form(f, i) * signature_matrix(n) * matrix_form(g, j).transposed();
}

bool is_self_dual(const FriezePattern& f) {
  FriezePattern flipped = horizontal_flip(f);
  for (long t = 0; t < f.n(); ++t)
    if (flipped == f.shifted(t)) return true;
  return false;
}

bool is_self_dual(const DifferenceEquation& eq) {
  return is_self_dual(frieze_from_equation(eq));
}

bool iota_equals_gale_star(const DifferenceEquation& eq) {
  if (!eq.is_superperiodic()) throw DomainError("input equation is not superperiodic");
  FriezePattern f = frieze_from_equation(eq);
  UnitriangularMatrix lhs = iota(cut_matrix(f));
  DifferenceEquation target = gale_transform(projective_dual(eq)).shifted(1);
  UnitriangularMatrix rhs = cut_matrix(frieze_from_equation(target));
  return lhs.matrix() == rhs.matrix();
}

}  // namespace frieze
