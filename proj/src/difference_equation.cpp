#include "frieze/difference_equation.hpp"

#include <utility>

#include "frieze/errors.hpp"

namespace frieze {

long mod_index(long i, long n) {
  long r = i % n;
  return r < 0 ? r + n : r;
}

DifferenceEquation::DifferenceEquation(int k, int n,
                                       std::vector<std::vector<Rational>> coeffs)
    : k_(k), n_(n), coeffs_(std::move(coeffs)) {
  if (k_ < 1) throw ArgumentError("order parameter k must be >= 1");
  if (n_ < k_ + 2) throw ArgumentError("period n must be >= k+2");
  if (static_cast<int>(coeffs_.size()) != n_)
    throw ArgumentError("coefficient table must have n rows");
  for (const auto& row : coeffs_)
    if (static_cast<int>(row.size()) != k_)
      throw ArgumentError("each coefficient row must have k entries");
}

const Rational& DifferenceEquation::coef(long i, int j) const {
  if (j < 1 || j > k_) throw ArgumentError("coefficient superscript out of range");
  return coeffs_[mod_index(i, n_)][j - 1];
}

DifferenceEquation DifferenceEquation::shifted(long t) const {
  std::vector<std::vector<Rational>> rows(n_);
  for (int i = 0; i < n_; ++i) rows[i] = coeffs_[mod_index(i + t, n_)];
  return DifferenceEquation(k_, n_, std::move(rows));
}

bool DifferenceEquation::operator==(const DifferenceEquation& other) const {
  return k_ == other.k_ && n_ == other.n_ && coeffs_ == other.coeffs_;
}

std::vector<Rational> DifferenceEquation::evolve(long i0,
                                                 const std::vector<Rational>& initial,
                                                 int steps) const {
  if (static_cast<int>(initial.size()) != k_ + 1)
    throw ArgumentError("initial window must have k+1 values");
  std::vector<Rational> window = initial;
  std::vector<Rational> out;
  out.reserve(steps);
  const Rational lead = (k_ % 2 == 0) ? Rational(1) : Rational(-1);
  for (int s = 0; s < steps; ++s) {
    long i = i0 + s;
    Rational v = lead * window[0];
    Rational sign(1);
    for (int j = 1; j <= k_; ++j) {
      v += sign * coef(i, j) * window[k_ + 1 - j];
      sign = -sign;
    }
    out.push_back(v);
    window.erase(window.begin());
    window.push_back(v);
  }
  return out;
}

RatMatrix DifferenceEquation::fundamental_solutions() const {
  RatMatrix m(k_ + 1, n_);
  for (int r = 0; r <= k_; ++r) {
    std::vector<Rational> initial(k_ + 1, Rational(0));
    initial[r] = 1;
    for (int i = 0; i <= k_ && i < n_; ++i) m.at(r, i) = initial[i];
    auto tail = evolve(k_ + 1, initial, n_ - k_ - 1);
    for (int i = k_ + 1; i < n_; ++i) m.at(r, i) = tail[i - k_ - 1];
  }
  return m;
}

RatMatrix DifferenceEquation::monodromy() const {
  // With the identity initial window at indices 0..k, T is the window at n..n+k.
  RatMatrix t(k_ + 1, k_ + 1);
  for (int r = 0; r <= k_; ++r) {
    std::vector<Rational> initial(k_ + 1, Rational(0));
    initial[r] = 1;
    auto seq = evolve(k_ + 1, initial, n_ + k_);
    for (int c = 0; c <= k_; ++c) t.at(r, c) = seq[n_ + c - k_ - 1];
  }
  return t;
}

bool DifferenceEquation::is_superperiodic() const {
  RatMatrix t = monodromy();
  const Rational s = (k_ % 2 == 0) ? Rational(1) : Rational(-1);
  for (int r = 0; r <= k_; ++r)
    for (int c = 0; c <= k_; ++c)
      if (t.at(r, c) != (r == c ? s : Rational(0))) return false;
  return true;
}

SolutionSequence::SolutionSequence(const DifferenceEquation& eq, long start,
                                   const std::vector<Rational>& initial)
    : k_(eq.k()), n_(eq.n()), start_(start) {
  auto ext = eq.evolve(start, initial, n_ + k_ + 1);
  values_.assign(ext.begin(), ext.begin() + n_);
  const Rational s = (k_ % 2 == 0) ? Rational(1) : Rational(-1);
  antiperiodic_ = true;
  // V_{i+n} = (-1)^k V_i on the window that includes the initial values
  for (int t = 0; t < k_ + 1; ++t)
    antiperiodic_ &= ext[n_ - k_ - 1 + t] == s * initial[t];
}

Rational SolutionSequence::at(long i) const {
  long off = i - start_;
  long wraps = 0;
  while (off < 0) {
    off += n_;
    --wraps;
  }
  while (off >= n_) {
    off -= n_;
    ++wraps;
  }
  if (wraps != 0 && !antiperiodic_)
    throw ArgumentError("index outside the stored window of a non-periodic solution");
  Rational s = ((k_ * wraps) % 2 == 0) ? Rational(1) : Rational(-1);
  return s * values_[off];
}

}  // namespace frieze
