#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "frieze/difference_equation.hpp"
#include "frieze/rational.hpp"

namespace frieze {

using MapState = std::vector<Rational>;

// Rational self-map of a fixed-arity state. step returns nullopt exactly when
// a denominator vanishes.
struct RationalMap {
  std::string name;
  int arity = 0;
  int claimed_period = 0;
  std::function<std::optional<MapState>(const MapState&)> step;
};

RationalMap map_F(int n);       // arity n-3, claimed period n; n >= 5
RationalMap map_Phi(int n);     // arity 2(n-4), claimed period 2n; n >= 5
RationalMap map_Go(int n);      // odd n >= 7; arity 2((n+1)/2 - 2), period n
RationalMap map_Ge(int n);      // even n >= 6; arity 2(n/2 - 2), period n
RationalMap corner_map(int n);  // arity 2n-8, claimed period 2n; n >= 5

// O_a^b over the 1-based list x, with O_a^a = O_a^{a+2} = 1 and O_a^b = 0 for
// b <= a-2; requires b-a even, b >= a-2. x-values whose O-coefficient
// vanishes are never read.
Rational big_O(const std::vector<Rational>& x, long a, long b);

struct OrbitResult {
  std::vector<MapState> states;          // visited states, seed first
  std::optional<int> minimal_period;     // exact first return to the seed
  std::optional<int> singular_at;        // step index of a vanishing denominator
};

// Iterates until exact return to the seed, a singularity, or max_steps.
OrbitResult iterate(const RationalMap& map, const MapState& seed, int max_steps);

// Reads an n-periodic Hill coefficient sequence off a map_F orbit.
DifferenceEquation hill_from_orbit(int n, const MapState& seed);

// Reads a third-order coefficient table off a map_Phi orbit (states at even
// steps carry the pairs (a_i, b_{i+1})).
DifferenceEquation third_order_from_orbit(int n, const MapState& seed);

// Reads a third-order coefficient table off a map_Go / map_Ge orbit.
DifferenceEquation third_order_from_g_orbit(int n, const MapState& seed);

}  // namespace frieze
