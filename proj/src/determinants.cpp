#include "frieze/determinants.hpp"

#include "frieze/errors.hpp"
#include "frieze/gale.hpp"

namespace frieze {

Rational continuant_U(const std::vector<Rational>& a) {
  Rational prev(1), cur = a.empty() ? Rational(1) : a[0];
  if (a.empty()) return cur;
  for (std::size_t i = 1; i < a.size(); ++i) {
    Rational next = a[i] * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Rational pentadiagonal_V(const std::vector<Rational>& diag,
                         const std::vector<Rational>& sup) {
  if (diag.empty()) {
    if (!sup.empty()) throw ArgumentError("superdiagonal longer than diagonal");
    return 1;
  }
  if (sup.size() + 1 != diag.size())
    throw ArgumentError("pentadiagonal_V needs |sup| = |diag| - 1");
  // D_m = a_m D_{m-1} - b_{m-1} D_{m-2} + D_{m-3}
  Rational d3(0), d2(1), d1 = diag[0];
  for (std::size_t m = 1; m < diag.size(); ++m) {
    Rational next = diag[m] * d1 - sup[m - 1] * d2 + d3;
    d3 = d2;
    d2 = d1;
    d1 = next;
  }
  return d1;
}

Rational entry_determinant(const DifferenceEquation& eq, long i, int j) {
  const int k = eq.k();
  if (j < 0 || j >= eq.width()) throw ArgumentError("band offset out of range");
  const int sz = j + 1;
  RatMatrix m(sz, sz);
  for (int r = 0; r < sz; ++r)
    for (int c = 0; c < sz; ++c) {
      int s = r - c + 1;
      if (s == 0 || s == k + 1)
        m.at(r, c) = 1;
      else if (s >= 1 && s <= k)
        m.at(r, c) = eq.coef(i + r, s);
    }
  return m.det();
}

Rational entry_determinant_alt(const DifferenceEquation& eq, long i, int j) {
  const int k = eq.k(), w = eq.width();
  if (j < 0 || j > w) throw ArgumentError("band offset out of range");
  const int sz = w - j;
  RatMatrix m(sz, sz);
  for (int r = 0; r < sz; ++r)
    for (int c = 0; c < sz; ++c) {
      int t = c - r;
      if (t == -1 || t == k)
        m.at(r, c) = 1;
      else if (t >= 0 && t <= k - 1)
        m.at(r, c) = eq.coef(i - w + j - 1 + r, k - t);
    }
  return m.det();
}

Rational coefficient_from_frieze(const FriezePattern& f, long i, int j) {
  const int k = f.k(), w = f.w();
  if (j < 0 || j >= k) throw ArgumentError("need 0 <= j < k");
  const int sz = j + 1;
  RatMatrix m(sz, sz);
  for (int r = 0; r < sz; ++r)
    for (int c = 0; c < sz; ++c) {
      if (c <= r)
        m.at(r, c) = f.entry(i + 1 + r, i + w + c);
      else if (c == r + 1)
        m.at(r, c) = 1;
    }
  return m.det();
}

CramerValue cramer_alpha(const DifferenceEquation& eq, long i, int j) {
  const int w = eq.width();
  if (j < 1 || j > w) throw ArgumentError("alpha superscript out of range");
  FriezePattern g = frieze_from_equation(gale_transform(eq));
  // eta'_i as a combination of eta'_{i-w-1}..eta'_{i-1} over rows i-w..i
  RatMatrix a(w + 1, w + 1);
  std::vector<Rational> rhs(w + 1);
  for (int r = 0; r <= w; ++r) {
    for (int s = 0; s <= w; ++s) a.at(r, s) = g.entry(i - w + r, i - w - 1 + s);
    rhs[r] = g.entry(i - w + r, i);
  }
  Rational denom = a.det();
  RatMatrix rep = a;
  const int m = w + 1 - j;
  for (int r = 0; r <= w; ++r) rep.at(r, m) = rhs[r];
  Rational sign = (j % 2 == 1) ? Rational(1) : Rational(-1);
  return {sign * rep.det() / denom, denom};
}

}  // namespace frieze
