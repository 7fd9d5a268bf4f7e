#include "frieze/frieze_pattern.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "frieze/errors.hpp"

namespace frieze {

std::string CheckReport::describe(const std::string& what) const {
  std::ostringstream os;
  if (ok()) {
    os << what << ": pass";
    return os.str();
  }
  os << what << ": " << failures.size() << " failing window(s); first at (i,j)=("
     << failures[0].i << "," << failures[0].j << ") value " << rat_str(failures[0].value);
  return os.str();
}

FriezePattern::FriezePattern(int k, int w, std::vector<std::vector<Rational>> band)
    : k_(k), w_(w), band_(std::move(band)) {
  if (k_ < 1 || w_ < 1) throw ArgumentError("frieze needs k >= 1 and width >= 1");
  if (static_cast<int>(band_.size()) != n())
    throw ArgumentError("frieze band must have n rows");
  for (const auto& row : band_)
    if (static_cast<int>(row.size()) != w_)
      throw ArgumentError("each band row must have w entries");
}

Rational FriezePattern::entry(long i, long j) const {
  const long nn = n();
  long offset = j - i;
  long wraps = 0;
  while (offset > w_) {
    offset -= nn;
    ++wraps;
  }
  while (offset < -k_ - 1) {
    offset += nn;
    --wraps;
  }
  Rational sign = ((k_ * wraps) % 2 == 0) ? Rational(1) : Rational(-1);
  if (offset == -1 || offset == w_) return sign;
  if (offset >= 0 && offset < w_) return sign * band_[mod_index(i, nn)][offset];
  return Rational(0);
}

Rational FriezePattern::alpha(long i, int j) const {
  if (j < 1 || j > w_) throw ArgumentError("alpha superscript out of range");
  return entry(i + 1, w_ + i - j + 1);
}

FriezePattern FriezePattern::shifted(long t) const {
  const long nn = n();
  std::vector<std::vector<Rational>> band(nn);
  for (long i = 0; i < nn; ++i) band[i] = band_[mod_index(i + t, nn)];
  return FriezePattern(k_, w_, std::move(band));
}

bool FriezePattern::operator==(const FriezePattern& other) const {
  return k_ == other.k_ && w_ == other.w_ && band_ == other.band_;
}

std::vector<std::vector<Rational>> FriezePattern::alpha_rows() const {
  std::vector<std::vector<Rational>> rows(w_);
  for (int j = 1; j <= w_; ++j) {
    rows[j - 1].reserve(n());
    for (int i = 0; i < n(); ++i) rows[j - 1].push_back(alpha(i, j));
  }
  return rows;
}

FriezePattern FriezePattern::from_alpha_rows(
    int k, const std::vector<std::vector<Rational>>& rows) {
  const int w = static_cast<int>(rows.size());
  if (w < 1) throw ArgumentError("alpha layout needs at least one row");
  const int n = static_cast<int>(rows[0].size());
  if (n != k + w + 2) throw ArgumentError("alpha rows must have n = k+w+2 entries");
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != n)
      throw ArgumentError("alpha rows must all have n entries");
  // invert alpha_i^j = d_{i+1, w+i-j+1}: d_{i,i+t} = alpha_{i-1}^{w-t}
  std::vector<std::vector<Rational>> band(n, std::vector<Rational>(w));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < w; ++t) band[i][t] = rows[w - t - 1][mod_index(i - 1, n)];
  return FriezePattern(k, w, std::move(band));
}

FriezePattern frieze_from_equation(const DifferenceEquation& eq,
                                   bool require_superperiodic) {
  if (eq.width() < 1) throw DomainError("equation has width 0 (n = k+2)");
  if (require_superperiodic && !eq.is_superperiodic()) {
    std::ostringstream os;
    os << "equation is not superperiodic; monodromy differs from "
       << (eq.k() % 2 == 0 ? "+" : "-") << "Id:";
    RatMatrix t = eq.monodromy();
    for (int r = 0; r <= eq.k(); ++r) {
      os << " [";
      for (int c = 0; c <= eq.k(); ++c) os << (c ? "," : "") << rat_str(t.at(r, c));
      os << "]";
    }
    throw DomainError(os.str());
  }
  const int n = eq.n(), k = eq.k(), w = eq.width();
  std::vector<std::vector<Rational>> band(n);
  std::vector<Rational> initial(k + 1, Rational(0));
  initial[k] = 1;
  for (int i = 0; i < n; ++i) band[i] = eq.evolve(i, initial, w);
  return FriezePattern(k, w, std::move(band));
}

DifferenceEquation equation_from_frieze(const FriezePattern& f) {
  if (auto rep = sl_check(f); !rep.ok())
    throw ValidationError(rep.describe("SL check failed"));
  if (auto rep = tame_check(f); !rep.ok())
    throw ValidationError(rep.describe("tameness check failed"));
  const int k = f.k(), n = f.n();
  std::vector<std::vector<Rational>> coeffs(n);
  for (long j = 0; j < n; ++j) {
    // eta_j as a combination of eta_{j-k-1}..eta_{j-1} on rows j-k..j; the
    // left block is an SL window, hence invertible.
    RatMatrix a(k + 1, k + 1);
    RatMatrix rhs(k + 1, 1);
    for (int r = 0; r <= k; ++r) {
      for (int s = 0; s <= k; ++s) a.at(r, s) = f.entry(j - k + r, j - k - 1 + s);
      rhs.at(r, 0) = f.entry(j - k + r, j);
    }
    RatMatrix x = a.inverse() * rhs;
    const Rational lead = (k % 2 == 0) ? Rational(1) : Rational(-1);
    if (x.at(0, 0) != lead)
      throw ValidationError("trailing coefficient is not 1 at diagonal " +
                            std::to_string(j));
    std::vector<Rational> row(k);
    Rational sign(1);
    for (int s = 1; s <= k; ++s) {
      row[s - 1] = sign * x.at(k + 1 - s, 0);
      sign = -sign;
    }
    coeffs[j] = std::move(row);
  }
  return DifferenceEquation(k, n, std::move(coeffs));
}

CheckReport sl_check(const FriezePattern& f) {
  CheckReport rep;
  const int k = f.k(), w = f.w(), n = f.n();
  for (long i = 0; i < n; ++i)
    for (long j = i - 1; j <= i + w; ++j) {
      RatMatrix m(k + 1, k + 1);
      for (int r = 0; r <= k; ++r)
        for (int c = 0; c <= k; ++c) m.at(r, c) = f.entry(i + r, j + c);
      Rational d = m.det();
      if (d != 1) rep.failures.push_back({i, j, d});
    }
  return rep;
}

CheckReport tame_check(const FriezePattern& f) {
  CheckReport rep;
  const int k = f.k(), w = f.w(), n = f.n();
  for (long i = 0; i < n; ++i)
    for (long j = i; j <= i + w - 1; ++j) {
      RatMatrix m(k + 2, k + 2);
      for (int r = 0; r <= k + 1; ++r)
        for (int c = 0; c <= k + 1; ++c) m.at(r, c) = f.entry(i + r, j + c);
      Rational d = m.det();
      if (d != 0) rep.failures.push_back({i, j, d});
    }
  return rep;
}

RatMatrix matrix_form(const FriezePattern& f, long i) {
  RatMatrix m(f.k() + 1, f.n());
  for (int r = 0; r <= f.k(); ++r)
    for (int c = 0; c < f.n(); ++c) m.at(r, c) = f.entry(i + r, i + c - 1);
  return m;
}

Rational interval_minor(const RatMatrix& m, long start, int len) {
  const long n = static_cast<long>(m.cols());
  std::vector<std::size_t> cols;
  for (int t = 0; t < len; ++t) cols.push_back(mod_index(start + t, n));
  std::sort(cols.begin(), cols.end());
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(r);
  return m.minor(rows, cols);
}

FriezePattern horizontal_flip(const FriezePattern& f) {
  const int k = f.k(), w = f.w(), n = f.n();
  std::vector<std::vector<Rational>> band(n, std::vector<Rational>(w));
  for (long i = 0; i < n; ++i)
    for (int t = 0; t < w; ++t) band[i][t] = f.entry(i + t + k + 1, i + w + k);
  return FriezePattern(k, w, std::move(band));
}

}  // namespace frieze
