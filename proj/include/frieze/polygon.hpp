#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "frieze/difference_equation.hpp"
#include "frieze/rational.hpp"

namespace frieze {

// Point of projective k-space, canonicalized so the first nonzero homogeneous
// coordinate is 1.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(std::vector<Rational> homogeneous);

  int dim() const { return static_cast<int>(coords_.size()) - 1; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool operator==(const ProjectivePoint& other) const { return coords_ == other.coords_; }
  bool operator!=(const ProjectivePoint& other) const { return !(*this == other); }

 private:
  std::vector<Rational> coords_;
};

// Cyclic sequence of lifted vertices: n columns of k+1 rationals. The cyclic
// extension carries the sign V_{i+n} = (-1)^k V_i.
struct PolygonLift {
  int k = 1;
  std::vector<std::vector<Rational>> vertices;

  int n() const { return static_cast<int>(vertices.size()); }
};

struct Obstruction {
  std::optional<int> fiber_dimension;        // gcd(n, k+1) - 1 when gcd > 1
  std::optional<Rational> root_certificate;  // the rational whose root is missing
  int root_degree = 0;
};

using PolygonResult = std::variant<DifferenceEquation, Obstruction>;

// Columns of the fundamental solutions as a lift / as projective points.
PolygonLift lift_from_equation(const DifferenceEquation& eq);
std::vector<ProjectivePoint> polygon_from_equation(const DifferenceEquation& eq);

// |V_i, ..., V_{i+k}| with the signed cyclic extension.
Rational window_determinant(const PolygonLift& p, long i);

// Inverse of the projection: rescales the lift so all window determinants are
// 1 and reads the equation off the recurrence. Returns an Obstruction when
// gcd(n, k+1) > 1 (carrying the fiber dimension) or when the closing
// (k+1)-th root is irrational (carrying the certificate).
PolygonResult equation_from_polygon(const PolygonLift& p);

// Exact r with r^degree == value, when it exists.
std::optional<Rational> rational_root(const Rational& value, int degree);

// 0/1 circulant with k+1 ones per row, and its corank = gcd(n, k+1) - 1.
RatMatrix circulant_matrix(int n, int k);
int circulant_corank(int n, int k);

// [p1,p2,p3,p4] = (p1-p3)(p2-p4) / ((p1-p2)(p3-p4)) on the projective line,
// computed from lift determinants.
Rational cross_ratio(const ProjectivePoint& p1, const ProjectivePoint& p2,
                     const ProjectivePoint& p3, const ProjectivePoint& p4);

// The other convention: (a-b)(c-d) / ((a-c)(b-d)); reciprocal of cross_ratio.
Rational inverse_cross_ratio(const ProjectivePoint& p1, const ProjectivePoint& p2,
                             const ProjectivePoint& p3, const ProjectivePoint& p4);

// For an even cycle of points on the line: the products of the cross-ratios
// x_i = [v_{i-1}, v_i, v_{i+1}, v_{i+2}] over odd and even i agree.
bool alternating_cross_ratio_check(const std::vector<ProjectivePoint>& points);

// Vertex i of the dual polygon: the hyperplane through v_i..v_{i+k-1},
// computed from the k x k minors of the lift.
std::vector<ProjectivePoint> dual_polygon(const PolygonLift& p);

// Whether some projective transformation matches the two vertex lists
// pointwise (requires the first k+2 points of each in general position).
bool projectively_equivalent(int k, const std::vector<ProjectivePoint>& a,
                             const std::vector<ProjectivePoint>& b);

}  // namespace frieze
