#pragma once

#include <vector>

#include "frieze/matrix.hpp"
#include "frieze/rational.hpp"

namespace frieze {

// n-periodic linear difference equation of order k+1:
//   V_i = a_i^1 V_{i-1} - a_i^2 V_{i-2} + ... + (-1)^{k-1} a_i^k V_{i-k}
//         + (-1)^k V_{i-k-1}
// Only the a_i^j (1 <= j <= k) are stored; the leading/trailing coefficients
// are implicit. Coefficient rows are indexed 0..n-1 and accessed cyclically.
class DifferenceEquation {
 public:
  DifferenceEquation(int k, int n, std::vector<std::vector<Rational>> coeffs);

  int k() const { return k_; }
  int n() const { return n_; }
  int width() const { return n_ - k_ - 2; }

  // a_i^j for any integer i (reduced mod n), 1 <= j <= k
  const Rational& coef(long i, int j) const;
  const std::vector<std::vector<Rational>>& coeffs() const { return coeffs_; }

  // equation with coefficient rows b_i = a_{i+t}
  DifferenceEquation shifted(long t) const;

  bool operator==(const DifferenceEquation& other) const;
  bool operator!=(const DifferenceEquation& other) const { return !(*this == other); }

  // Evolve a scalar solution: `initial` holds V_{i0-k-1},...,V_{i0-1}; the
  // returned values are V_{i0},...,V_{i0+steps-1}.
  std::vector<Rational> evolve(long i0, const std::vector<Rational>& initial,
                               int steps) const;

  // (k+1) x n matrix whose rows are the solutions with standard-basis initial
  // values at indices 0..k; column i is the vector V_i.
  RatMatrix fundamental_solutions() const;

  // T with V_{i+n} = T V_i on the solution space.
  RatMatrix monodromy() const;

  // true iff monodromy == (-1)^k Id
  bool is_superperiodic() const;

 private:
  int k_, n_;
  std::vector<std::vector<Rational>> coeffs_;
};

long mod_index(long i, long n);

// A scalar solution held on a window of one period. When every solution of
// the equation is (anti)periodic the window determines the value at every
// integer index through the sign rule V_{i+n} = (-1)^k V_i.
class SolutionSequence {
 public:
  // initial: V_{start-k-1}, ..., V_{start-1}
  SolutionSequence(const DifferenceEquation& eq, long start,
                   const std::vector<Rational>& initial);

  bool antiperiodic() const { return antiperiodic_; }
  long start() const { return start_; }

  // total when antiperiodic(); otherwise restricted to the stored window
  Rational at(long i) const;

 private:
  int k_, n_;
  long start_;
  bool antiperiodic_;
  std::vector<Rational> values_;  // V_{start}, ..., V_{start+n-1}
};

}  // namespace frieze
