#include "frieze/unitriangular.hpp"

#include <map>
#include <utility>

#include "frieze/errors.hpp"
#include "frieze/gale.hpp"

namespace frieze {

UnitriangularMatrix::UnitriangularMatrix(RatMatrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw DimensionError("unitriangular matrix must be square");
  for (std::size_t r = 0; r < m_.rows(); ++r) {
    if (m_.at(r, r) != 1) throw ArgumentError("diagonal entries must be 1");
    for (std::size_t c = 0; c < r; ++c)
      if (m_.at(r, c) != 0) throw ArgumentError("entries below the diagonal must be 0");
  }
}

UnitriangularMatrix cut_matrix(const FriezePattern& f) {
  const int n = f.n(), w = f.w();
  RatMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    a.at(i, i) = 1;
    for (int t = 0; t < w && i + 1 + t < n; ++t) a.at(i, i + 1 + t) = f.entry(i, i + t);
    if (i + w + 1 < n) a.at(i, i + w + 1) = 1;
  }
  return UnitriangularMatrix(std::move(a));
}

UnitriangularMatrix iota(const UnitriangularMatrix& x) {
  const int n = static_cast<int>(x.size());
  RatMatrix d = signature_matrix(n);
  return UnitriangularMatrix(d * x.matrix().inverse() * d);
}

bool minor_identity_check(const UnitriangularMatrix& x, std::size_t i, std::size_t j) {
  if (j <= i || j >= x.size()) throw ArgumentError("need i < j < n");
  std::vector<std::size_t> rows, cols;
  for (std::size_t r = i; r < j; ++r) rows.push_back(r);
  for (std::size_t c = i + 1; c <= j; ++c) cols.push_back(c);
  return iota(x).at(i, j) == x.matrix().minor(rows, cols);
}

FriezePattern iota_on_frieze(const FriezePattern& f) {
  const int n = f.n();
  const int k_t = f.w();      // result is an SL_{w+1} pattern
  const int w_t = f.k();      // of width k
  const RatMatrix b = iota(cut_matrix(f)).matrix();

  // the image must have the A-matrix band shape
  for (int i = 0; i < n; ++i) {
    if (i + w_t + 1 < n && b.at(i, i + w_t + 1) != 1)
      throw ValidationError("iota image lacks the unit band edge");
    for (int c = i + w_t + 2; c < n; ++c)
      if (b.at(i, c) != 0) throw ValidationError("iota image exceeds the band width");
  }

  // known entries d_{i, j} = B[i][j+1]; extend with vanishing (k_t+2)-windows
  std::map<std::pair<long, long>, Rational> d;
  for (int i = 0; i < n; ++i)
    for (int c = i + 1; c < n; ++c) d[{i, c - 1}] = b.at(i, c);
  auto get = [&](long i, long j) -> Rational {
    long o = j - i;
    if (o < -1 || o > w_t) return Rational(0);
    if (o == -1 || o == w_t) return Rational(1);
    auto it = d.find({i, j});
    if (it == d.end()) throw ValidationError("iota frieze read touched an unknown entry");
    return it->second;
  };
  for (long i = 1; i <= n - 1; ++i)
    for (int t = 0; t < w_t; ++t) {
      long j = i + t;
      if (j <= n - 2) continue;
      RatMatrix m(k_t + 2, k_t + 2);
      for (int r = 0; r <= k_t + 1; ++r)
        for (int c = 0; c <= k_t + 1; ++c) {
          long ri = i - k_t - 1 + r, cj = j - k_t - 1 + c;
          if (ri == i && cj == j) continue;  // the unknown, left at 0
          m.at(r, c) = get(ri, cj);
        }
      std::vector<std::size_t> head(k_t + 1);
      for (int t2 = 0; t2 <= k_t; ++t2) head[t2] = t2;
      Rational cof = m.minor(head, head);
      if (cof == 0) throw ValidationError("iota frieze read hit a singular window");
      d[{i, j}] = -m.det() / cof;
    }

  std::vector<std::vector<Rational>> band(n, std::vector<Rational>(w_t));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < w_t; ++t) band[i][t] = d.at({i, i + t});
  FriezePattern out(k_t, w_t, std::move(band));
  if (!sl_check(out).ok() || !tame_check(out).ok())
    throw ValidationError("iota image did not read back as a tame SL frieze");
  return out;
}

}  // namespace frieze
