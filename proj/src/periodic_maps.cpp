#include "frieze/periodic_maps.hpp"

#include <map>
#include <utility>

#include "frieze/determinants.hpp"
#include "frieze/errors.hpp"

namespace frieze {

namespace {

// V over interleaved slots (a_1, b_1, ..., a_m) taken from `vals`; a run of
// negative length gives 0, an empty run gives 1.
Rational v_run(const std::vector<Rational>& diag, const std::vector<Rational>& sup,
               int lo, int hi) {
  if (hi < lo - 1) return 0;
  if (hi == lo - 1) return 1;
  std::vector<Rational> d, s;
  for (int i = lo; i <= hi; ++i) {
    d.push_back(diag[i - 1]);
    if (i < hi) s.push_back(sup[i - 1]);
  }
  return pentadiagonal_V(d, s);
}

}  // namespace

RationalMap map_F(int n) {
  if (n < 5) throw ArgumentError("map_F needs n >= 5");
  RationalMap m;
  m.name = "F";
  m.arity = n - 3;
  m.claimed_period = n;
  m.step = [](const MapState& s) -> std::optional<MapState> {
    Rational den = continuant_U(s);
    if (den == 0) return std::nullopt;
    std::vector<Rational> head(s.begin(), s.end() - 1);
    MapState out(s.begin() + 1, s.end());
    out.push_back((1 + continuant_U(head)) / den);
    return out;
  };
  return m;
}

RationalMap map_Phi(int n) {
  if (n < 5) throw ArgumentError("map_Phi needs n >= 5");
  const int m = n - 4;
  RationalMap mp;
  mp.name = "Phi";
  mp.arity = 2 * m;
  mp.claimed_period = 2 * n;
  mp.step = [m](const MapState& s) -> std::optional<MapState> {
    std::vector<Rational> a(m), b(m);
    for (int i = 0; i < m; ++i) {
      a[i] = s[2 * i];
      b[i] = s[2 * i + 1];
    }
    Rational den = v_run(a, b, 1, m);
    if (den == 0) return std::nullopt;
    Rational num = 1 + b[m - 1] * v_run(a, b, 1, m - 1) - v_run(a, b, 1, m - 2);
    MapState out(s.begin() + 1, s.end());
    out.push_back(num / den);
    return out;
  };
  return mp;
}

namespace {

RationalMap map_G_impl(int n, bool odd) {
  const int m = odd ? (n + 1) / 2 : n / 2;
  RationalMap mp;
  mp.name = odd ? "Go" : "Ge";
  mp.arity = 2 * (m - 2);
  mp.claimed_period = n;
  mp.step = [m, odd](const MapState& s) -> std::optional<MapState> {
    std::vector<Rational> a(m - 2), b(m - 2);
    for (int i = 0; i < m - 2; ++i) {
      a[i] = s[2 * i];
      b[i] = s[2 * i + 1];
    }
    Rational den = v_run(a, b, 1, m - 2);
    if (den == 0) return std::nullopt;
    Rational lead;
    if (odd) {
      // V over (a_2, b_2, ..., a_{m-2})
      std::vector<Rational> d, sp;
      for (int i = 2; i <= m - 2; ++i) {
        d.push_back(a[i - 1]);
        if (i < m - 2) sp.push_back(b[i - 1]);
      }
      lead = (m - 2 >= 2) ? pentadiagonal_V(d, sp) : Rational(1);
    } else {
      // V with diagonal (b_1, ..., b_{m-2}) and superdiagonal (a_2, ..., a_{m-2})
      std::vector<Rational> d, sp;
      for (int i = 1; i <= m - 2; ++i) {
        d.push_back(b[i - 1]);
        if (i < m - 2) sp.push_back(a[i]);
      }
      lead = pentadiagonal_V(d, sp);
    }
    Rational num = lead + b[m - 3] * v_run(a, b, 1, m - 3) - v_run(a, b, 1, m - 4);
    MapState out(s.begin() + 1, s.end());
    out.push_back(num / den);
    return out;
  };
  return mp;
}

}  // namespace

RationalMap map_Go(int n) {
  if (n < 7 || n % 2 == 0) throw ArgumentError("map_Go needs odd n >= 7");
  return map_G_impl(n, true);
}

RationalMap map_Ge(int n) {
  if (n < 6 || n % 2 == 1) throw ArgumentError("map_Ge needs even n >= 6");
  return map_G_impl(n, false);
}

namespace {

Rational big_o_rec(const std::function<Rational(long)>& x, long a, long b,
                   std::map<long, Rational>& memo) {
  if (b <= a - 2) return 0;
  if (b == a || b == a + 2) return 1;
  if (auto it = memo.find(b); it != memo.end()) return it->second;
  Rational v = big_o_rec(x, a, b - 2, memo);
  Rational t2 = big_o_rec(x, a, b - 4, memo);
  if (t2 != 0) v -= x(b - 2) * t2;
  Rational t3 = big_o_rec(x, a, b - 6, memo);
  if (t3 != 0) v += x(b - 2) * x(b - 3) * x(b - 4) * t3;
  memo[b] = v;
  return v;
}

}  // namespace

Rational big_O(const std::vector<Rational>& x, long a, long b) {
  if ((b - a) % 2 != 0) throw ArgumentError("big_O needs b - a even");
  if (b < a - 2) throw ArgumentError("big_O needs b >= a - 2");
  auto xv = [&x](long j) -> Rational {
    if (j < 1 || j > static_cast<long>(x.size()))
      throw ArgumentError("big_O index outside the x list");
    return x[j - 1];
  };
  std::map<long, Rational> memo;
  return big_o_rec(xv, a, b, memo);
}

RationalMap corner_map(int n) {
  if (n < 5) throw ArgumentError("corner_map needs n >= 5");
  const int m = 2 * n - 8;
  RationalMap mp;
  mp.name = "corner";
  mp.arity = m;
  mp.claimed_period = 2 * n;
  mp.step = [n, m](const MapState& s) -> std::optional<MapState> {
    auto xv = [&s](long j) -> Rational {
      if (j < 1 || j > static_cast<long>(s.size()))
        throw ArgumentError("corner map internal index error");
      return s[j - 1];
    };
    std::map<long, Rational> memo;
    Rational num = big_o_rec(xv, -1, 2 * n - 7, memo);
    Rational den = big_o_rec(xv, -1, 2 * n - 9, memo) -
                   s[m - 1] * s[m - 2] * big_o_rec(xv, -1, 2 * n - 11, memo);
    if (den == 0) return std::nullopt;
    MapState out(s.begin() + 1, s.end());
    out.push_back(num / den);
    return out;
  };
  return mp;
}

OrbitResult iterate(const RationalMap& map, const MapState& seed, int max_steps) {
  if (static_cast<int>(seed.size()) != map.arity)
    throw ArgumentError("seed arity does not match the map");
  OrbitResult res;
  res.states.push_back(seed);
  MapState cur = seed;
  for (int step = 1; step <= max_steps; ++step) {
    auto next = map.step(cur);
    if (!next) {
      res.singular_at = step;
      return res;
    }
    cur = *next;
    res.states.push_back(cur);
    if (cur == seed) {
      res.minimal_period = step;
      if (map.claimed_period % step != 0)
        throw Error(map.name + ": minimal period " + std::to_string(step) +
                    " does not divide the claimed period " +
                    std::to_string(map.claimed_period));
      return res;
    }
  }
  return res;
}

DifferenceEquation hill_from_orbit(int n, const MapState& seed) {
  RationalMap f = map_F(n);
  OrbitResult orbit = iterate(f, seed, n);
  if (orbit.singular_at)
    throw DomainError("orbit hit a singularity at step " +
                      std::to_string(*orbit.singular_at));
  if (!orbit.minimal_period || n % *orbit.minimal_period != 0)
    throw DomainError("orbit did not close with period dividing n");
  const int p = *orbit.minimal_period;
  std::vector<std::vector<Rational>> coeffs;
  coeffs.reserve(n);
  for (const Rational& v : seed) coeffs.push_back({v});
  for (int s = 1; coeffs.size() < static_cast<std::size_t>(n); ++s)
    coeffs.push_back({orbit.states[s % p].back()});
  return DifferenceEquation(1, n, std::move(coeffs));
}

DifferenceEquation third_order_from_orbit(int n, const MapState& seed) {
  RationalMap phi = map_Phi(n);
  OrbitResult orbit = iterate(phi, seed, 2 * n);
  if (orbit.singular_at)
    throw DomainError("orbit hit a singularity at step " +
                      std::to_string(*orbit.singular_at));
  if (!orbit.minimal_period || (2 * n) % *orbit.minimal_period != 0)
    throw DomainError("orbit did not close with period dividing 2n");
  const int p = *orbit.minimal_period;
  auto state = [&](int t) -> const MapState& { return orbit.states[t % p]; };
  // state at step 2j carries (a_j, b_{j+1}) in the leading pair
  std::vector<std::vector<Rational>> coeffs(n, std::vector<Rational>(2));
  for (int j = 0; j < n; ++j) {
    coeffs[j][0] = state(2 * j)[0];
    coeffs[mod_index(j + 1, n)][1] = state(2 * j)[1];
  }
  return DifferenceEquation(2, n, std::move(coeffs));
}

DifferenceEquation third_order_from_g_orbit(int n, const MapState& seed) {
  RationalMap g = (n % 2 == 0) ? map_Ge(n) : map_Go(n);
  OrbitResult orbit = iterate(g, seed, n);
  if (orbit.singular_at)
    throw DomainError("orbit hit a singularity at step " +
                      std::to_string(*orbit.singular_at));
  if (!orbit.minimal_period || n % *orbit.minimal_period != 0)
    throw DomainError("orbit did not close with period dividing n");
  const int p = *orbit.minimal_period;
  // interleaved sequence c_1, c_2, ... = (a_1, b_2, a_2, b_3, ...), n-periodic
  auto c = [&](long pos) -> Rational {
    return orbit.states[mod_index(pos - 1, p) % p][0];
  };
  std::vector<std::vector<Rational>> coeffs(n, std::vector<Rational>(2));
  for (int i = 1; i <= n; ++i) {
    coeffs[i - 1][0] = c(2 * i - 1);
    coeffs[i - 1][1] = c(2 * i - 2);
  }
  return DifferenceEquation(2, n, std::move(coeffs));
}

}  // namespace frieze
