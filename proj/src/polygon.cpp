#include "frieze/polygon.hpp"

#include <numeric>
#include <utility>

#include "frieze/errors.hpp"
#include "frieze/matrix.hpp"

namespace frieze {

ProjectivePoint::ProjectivePoint(std::vector<Rational> homogeneous)
    : coords_(std::move(homogeneous)) {
  if (coords_.empty()) throw ArgumentError("projective point needs coordinates");
  std::size_t pivot = coords_.size();
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] != 0) {
      pivot = i;
      break;
    }
  if (pivot == coords_.size())
    throw ArgumentError("projective point cannot be the zero vector");
  Rational scale = coords_[pivot];
  for (auto& c : coords_) c /= scale;
}

PolygonLift lift_from_equation(const DifferenceEquation& eq) {
  if (!eq.is_superperiodic())
    throw DomainError("polygon projection needs a superperiodic equation");
  RatMatrix m = eq.fundamental_solutions();
  PolygonLift p;
  p.k = eq.k();
  p.vertices.assign(eq.n(), std::vector<Rational>(eq.k() + 1));
  for (int i = 0; i < eq.n(); ++i)
    for (int r = 0; r <= eq.k(); ++r) p.vertices[i][r] = m.at(r, i);
  return p;
}

std::vector<ProjectivePoint> polygon_from_equation(const DifferenceEquation& eq) {
  PolygonLift lift = lift_from_equation(eq);
  std::vector<ProjectivePoint> pts;
  pts.reserve(lift.n());
  for (auto& v : lift.vertices) pts.emplace_back(v);
  return pts;
}

namespace {

// lifted vertex with the signed cyclic extension
std::vector<Rational> extended_vertex(const PolygonLift& p, long i) {
  const long n = p.n();
  long wraps = 0;
  while (i >= n) {
    i -= n;
    ++wraps;
  }
  while (i < 0) {
    i += n;
    --wraps;
  }
  std::vector<Rational> v = p.vertices[i];
  if ((p.k % 2) != 0 && (wraps % 2) != 0)
    for (auto& x : v) x = -x;
  return v;
}

}  // namespace

Rational window_determinant(const PolygonLift& p, long i) {
  const int k = p.k;
  RatMatrix m(k + 1, k + 1);
  for (int c = 0; c <= k; ++c) {
    auto v = extended_vertex(p, i + c);
    for (int r = 0; r <= k; ++r) m.at(r, c) = v[r];
  }
  return m.det();
}

std::optional<Rational> rational_root(const Rational& value, int degree) {
  if (degree < 1) throw ArgumentError("root degree must be positive");
  if (value == 0) return Rational(0);
  if (degree % 2 == 0 && value < 0) return std::nullopt;
  Integer num = abs(value.get_num()), den = value.get_den();
  Integer rn, rd;
  bool exact_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), degree) != 0;
  bool exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), degree) != 0;
  if (!exact_n || !exact_d) return std::nullopt;
  Rational r(rn, rd);
  r.canonicalize();
  if (value < 0) r = -r;  // degree is odd here
  return r;
}

PolygonResult equation_from_polygon(const PolygonLift& p) {
  const int k = p.k, n = p.n();
  if (n < k + 2) throw ArgumentError("polygon needs at least k+2 vertices");
  std::vector<Rational> c(n);
  for (int i = 0; i < n; ++i) {
    c[i] = window_determinant(p, i);
    if (c[i] == 0) throw ValidationError("degenerate polygon: window " +
                                         std::to_string(i) + " vanishes");
  }
  const int q = std::gcd(n, k + 1);
  if (q != 1) {
    Obstruction ob;
    ob.fiber_dimension = q - 1;
    return ob;
  }
  // chain t_{i+k+1} = t_i c_i / c_{i+1}, then one closing (k+1)-th root
  std::vector<Rational> rho(n);
  rho[0] = 1;
  long idx = 0;
  for (int s = 1; s < n; ++s) {
    long next = mod_index(idx + k + 1, n);
    rho[next] = rho[idx] * c[idx] / c[mod_index(idx + 1, n)];
    idx = next;
  }
  Rational prod(1);
  for (int t = 0; t <= k; ++t) prod *= rho[t];
  Rational target = 1 / (prod * c[0]);
  auto tau = rational_root(target, k + 1);
  if (!tau) {
    Obstruction ob;
    ob.root_certificate = target;
    ob.root_degree = k + 1;
    return ob;
  }
  PolygonLift scaled = p;
  for (int i = 0; i < n; ++i) {
    Rational t = *tau * rho[i];
    for (auto& x : scaled.vertices[i]) x *= t;
  }
  for (int i = 0; i < n; ++i)
    if (window_determinant(scaled, i) != 1)
      throw ValidationError("normalization failed to reach unit windows");
  // read the recurrence: V_i = sum_j (-1)^{j-1} a_i^j V_{i-j} + (-1)^k V_{i-k-1}
  std::vector<std::vector<Rational>> coeffs(n, std::vector<Rational>(k));
  for (int i = 0; i < n; ++i) {
    RatMatrix a(k + 1, k + 1);
    RatMatrix rhs(k + 1, 1);
    for (int j = 1; j <= k + 1; ++j) {
      auto v = extended_vertex(scaled, i - j);
      for (int r = 0; r <= k; ++r) a.at(r, j - 1) = v[r];
    }
    auto vi = extended_vertex(scaled, i);
    for (int r = 0; r <= k; ++r) rhs.at(r, 0) = vi[r];
    RatMatrix x = a.inverse() * rhs;
    const Rational lead = (k % 2 == 0) ? Rational(1) : Rational(-1);
    if (x.at(k, 0) != lead)
      throw ValidationError("recurrence read-off lost the unit trailing coefficient");
    Rational sign(1);
    for (int j = 1; j <= k; ++j) {
      coeffs[i][j - 1] = sign * x.at(j - 1, 0);
      sign = -sign;
    }
  }
  return DifferenceEquation(k, n, std::move(coeffs));
}

RatMatrix circulant_matrix(int n, int k) {
  RatMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (mod_index(c - r, n) <= k) m.at(r, c) = 1;
  return m;
}

int circulant_corank(int n, int k) {
  if (n < k + 2) throw ArgumentError("need n >= k+2");
  int count = 0;
  for (int j = 1; j < n; ++j)
    if ((static_cast<long>(j) * (k + 1)) % n == 0) ++count;
  return count;
}

namespace {

Rational pair_det(const ProjectivePoint& a, const ProjectivePoint& b) {
  if (a.dim() != 1 || b.dim() != 1)
    throw ArgumentError("cross-ratio needs points on the projective line");
  return a.coords()[0] * b.coords()[1] - a.coords()[1] * b.coords()[0];
}

}  // namespace

Rational cross_ratio(const ProjectivePoint& p1, const ProjectivePoint& p2,
                     const ProjectivePoint& p3, const ProjectivePoint& p4) {
  Rational den = pair_det(p1, p2) * pair_det(p3, p4);
  if (den == 0) throw ArgumentError("cross-ratio undefined: coincident points");
  return pair_det(p1, p3) * pair_det(p2, p4) / den;
}

Rational inverse_cross_ratio(const ProjectivePoint& p1, const ProjectivePoint& p2,
                             const ProjectivePoint& p3, const ProjectivePoint& p4) {
  Rational den = pair_det(p1, p3) * pair_det(p2, p4);
  if (den == 0) throw ArgumentError("cross-ratio undefined: coincident points");
  return pair_det(p1, p2) * pair_det(p3, p4) / den;
}

bool alternating_cross_ratio_check(const std::vector<ProjectivePoint>& points) {
  const long n = static_cast<long>(points.size());
  if (n < 4 || n % 2 != 0)
    throw ArgumentError("alternating product needs an even cycle of >= 4 points");
  for (long i = 0; i < n; ++i)
    if (points[i] == points[(i + 1) % n])
      throw ArgumentError("consecutive points coincide");
  Rational odd(1), even(1);
  for (long i = 0; i < n; ++i) {
    Rational x = cross_ratio(points[mod_index(i - 1, n)], points[i],
                             points[(i + 1) % n], points[(i + 2) % n]);
    (i % 2 ? odd : even) *= x;
  }
  return odd == even;
}

std::vector<ProjectivePoint> dual_polygon(const PolygonLift& p) {
  const int k = p.k, n = p.n();
  std::vector<ProjectivePoint> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    // coordinates of the hyperplane through V_i..V_{i+k-1}: signed k x k minors
    RatMatrix m(k, k + 1);
    for (int c = 0; c < k; ++c) {
      auto v = extended_vertex(p, i + c);
      for (int r = 0; r <= k; ++r) m.at(c, r) = v[r];
    }
    std::vector<Rational> h(k + 1);
    std::vector<std::size_t> rows(k);
    for (int t = 0; t < k; ++t) rows[t] = t;
    Rational sign(1);
    for (int drop = 0; drop <= k; ++drop) {
      std::vector<std::size_t> cols;
      for (int c = 0; c <= k; ++c)
        if (c != drop) cols.push_back(c);
      h[drop] = sign * m.minor(rows, cols);
      sign = -sign;
    }
    out.emplace_back(std::move(h));
  }
  return out;
}

bool projectively_equivalent(int k, const std::vector<ProjectivePoint>& a,
                             const std::vector<ProjectivePoint>& b) {
  if (a.size() != b.size() || static_cast<int>(a.size()) < k + 2)
    throw ArgumentError("need matching lists of at least k+2 points");
  auto frame = [&](const std::vector<ProjectivePoint>& pts) -> std::optional<RatMatrix> {
    RatMatrix m(k + 1, k + 1);
    for (int c = 0; c <= k; ++c)
      for (int r = 0; r <= k; ++r) m.at(r, c) = pts[c].coords()[r];
    RatMatrix rhs(k + 1, 1);
    for (int r = 0; r <= k; ++r) rhs.at(r, 0) = pts[k + 1].coords()[r];
    RatMatrix lam(k + 1, 1);
    try {
      lam = m.inverse() * rhs;
    } catch (const SingularMatrixError&) {
      return std::nullopt;
    }
    for (int c = 0; c <= k; ++c) {
      if (lam.at(c, 0) == 0) return std::nullopt;
      for (int r = 0; r <= k; ++r) m.at(r, c) *= lam.at(c, 0);
    }
    return m;
  };
  auto fa = frame(a), fb = frame(b);
  if (!fa || !fb)
    throw ArgumentError("leading k+2 points are not in general position");
  RatMatrix g = *fb * fa->inverse();
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<Rational> image(k + 1, Rational(0));
    for (int r = 0; r <= k; ++r)
      for (int c = 0; c <= k; ++c) image[r] += g.at(r, c) * a[i].coords()[c];
    bool zero = true;
    for (const auto& x : image)
      if (x != 0) zero = false;
    if (zero) return false;
    if (ProjectivePoint(std::move(image)) != b[i]) return false;
  }
  return true;
}

}  // namespace frieze
