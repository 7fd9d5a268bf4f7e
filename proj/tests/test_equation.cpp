#include <doctest.h>

#include <random>

#include "frieze/difference_equation.hpp"
#include "frieze/errors.hpp"
#include "test_helpers.hpp"

using namespace frieze;
using namespace frieze::testing;

TEST_CASE("evolution follows the recurrence") {
  // Hill equation, all coefficients 1: from (0,1) the sequence is 6-periodic
  DifferenceEquation hill(1, 6, std::vector<std::vector<Rational>>(6, {rat(1)}));
  auto seq = hill.evolve(0, {rat(0), rat(1)}, 8);
  CHECK(seq == std::vector<Rational>{rat(1), rat(0), rat(-1), rat(-1), rat(0), rat(1),
                                     rat(1), rat(0)});

  auto eq = quiddity_example();
  auto vals = eq.evolve(0, {rat(0), rat(1)}, 10);
  // V_{i+5} = -V_i for the window that includes the initial values
  CHECK(vals[3] == -rat(0));
  CHECK(vals[4] == -rat(1));
  for (int s = 0; s < 5; ++s) CHECK(vals[5 + s] == -vals[s]);

  CHECK_THROWS_AS(eq.evolve(0, {rat(1)}, 3), ArgumentError);
}

TEST_CASE("zero initial data stays zero") {
  auto eq = all_two_example();
  auto vals = eq.evolve(0, {rat(0), rat(0), rat(0)}, 12);
  for (const auto& v : vals) CHECK(v == 0);
}

TEST_CASE("monodromy examples") {
  auto eq = quiddity_example();
  RatMatrix t = eq.monodromy();
  RatMatrix expect(2, 2);
  expect.at(0, 0) = -1;
  expect.at(1, 1) = -1;
  CHECK(t == expect);
  CHECK(eq.is_superperiodic());

  auto a2 = all_two_example();
  CHECK(a2.monodromy() == RatMatrix::identity(3));
  CHECK(a2.is_superperiodic());

  DifferenceEquation ones(1, 5, std::vector<std::vector<Rational>>(5, {rat(1)}));
  CHECK_FALSE(ones.is_superperiodic());
}

TEST_CASE("monodromy is volume preserving") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 20; ++t) {
    int k = 1 + t % 3;
    int n = k + 2 + 1 + t % 4;
    std::vector<std::vector<Rational>> rows(n);
    for (auto& row : rows)
      for (int j = 0; j < k; ++j) row.push_back(rat(d(rng)));
    DifferenceEquation eq(k, n, rows);
    CHECK(eq.monodromy().det() == 1);
  }
}

TEST_CASE("fundamental solutions") {
  auto eq = quiddity_example();
  RatMatrix m = eq.fundamental_solutions();
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 5);
  CHECK(m.rank() == 2);
  // initial block is the identity, so |V_0, V_1| = 1
  CHECK(m.minor({0, 1}, {0, 1}) == 1);
}

TEST_CASE("cyclic window determinant is constant for superperiodic equations") {
  for (const auto& eq : instance_pool(2, 7, 3)) {
    RatMatrix m = eq.fundamental_solutions();
    const int k = eq.k(), n = eq.n();
    // recompute the extended columns by evolving each basis row
    std::vector<std::vector<Rational>> ext(n + k);
    for (int i = 0; i < n; ++i) {
      ext[i].resize(k + 1);
      for (int r = 0; r <= k; ++r) ext[i][r] = m.at(r, i);
    }
    const Rational sign = (k % 2 == 0) ? rat(1) : rat(-1);
    for (int i = n; i < n + k; ++i) {
      ext[i].resize(k + 1);
      for (int r = 0; r <= k; ++r) ext[i][r] = sign * ext[i - n][r];
    }
    RatMatrix w0(k + 1, k + 1);
    std::optional<Rational> common;
    for (int i = 0; i < n; ++i) {
      for (int c = 0; c <= k; ++c)
        for (int r = 0; r <= k; ++r) w0.at(r, c) = ext[i + c][r];
      Rational det = w0.det();
      CHECK(det != 0);
      if (!common) common = det;
      CHECK(det == *common);
    }
  }
}

TEST_CASE("consecutive window determinants agree for arbitrary equations") {
  // |V_i,...,V_{i+k}| = |V_{i+1},...,V_{i+k+1}| along the sequence, with no
  // periodicity assumption
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 10; ++t) {
    int k = 1 + t % 2, n = k + 3;
    std::vector<std::vector<Rational>> rows(n);
    for (auto& row : rows)
      for (int j = 0; j < k; ++j) row.push_back(rat(d(rng)));
    DifferenceEquation eq(k, n, rows);
    std::vector<std::vector<Rational>> cols;
    for (int r = 0; r <= k; ++r) {
      std::vector<Rational> init(k + 1, rat(0));
      init[r] = 1;
      auto seq = eq.evolve(0, init, 3 * n);
      for (int i = 0; i < 3 * n; ++i) {
        if (static_cast<int>(cols.size()) <= i) cols.emplace_back();
        cols[i].push_back(seq[i]);
      }
    }
    std::optional<Rational> common;
    for (std::size_t i = 0; i + k < cols.size(); ++i) {
      RatMatrix w(k + 1, k + 1);
      for (int c = 0; c <= k; ++c)
        for (int r = 0; r <= k; ++r) w.at(r, c) = cols[i + c][r];
      if (!common) common = w.det();
      CHECK(w.det() == *common);
    }
  }
}

TEST_CASE("solution sequences carry the sign rule") {
  auto eq = quiddity_example();
  SolutionSequence mu(eq, 0, {rat(0), rat(1)});
  CHECK(mu.antiperiodic());
  CHECK(mu.at(0) == 1);   // d_{0,0}
  CHECK(mu.at(1) == 2);   // d_{0,1}
  CHECK(mu.at(2) == 1);
  CHECK(mu.at(4) == -1);
  CHECK(mu.at(5) == -mu.at(0));
  CHECK(mu.at(-1) == -mu.at(4));

  DifferenceEquation ones(1, 5, std::vector<std::vector<Rational>>(5, {rat(1)}));
  SolutionSequence s(ones, 0, {rat(0), rat(1)});
  CHECK_FALSE(s.antiperiodic());
  CHECK_THROWS_AS(s.at(17), ArgumentError);
}

TEST_CASE("linearity of evolution") {
  auto eq = all_two_example();
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int t = 0; t < 10; ++t) {
    std::vector<Rational> u, v;
    for (int i = 0; i < 3; ++i) {
      u.push_back(rat(d(rng)));
      v.push_back(rat(d(rng)));
    }
    Rational c = rat(d(rng), 3);
    std::vector<Rational> mix(3);
    for (int i = 0; i < 3; ++i) mix[i] = c * u[i] + v[i];
    auto eu = eq.evolve(0, u, 9), ev = eq.evolve(0, v, 9), em = eq.evolve(0, mix, 9);
    for (int i = 0; i < 9; ++i) CHECK(em[i] == c * eu[i] + ev[i]);
  }
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(DifferenceEquation(1, 2, {{rat(1)}, {rat(1)}}), ArgumentError);
  CHECK_THROWS_AS(DifferenceEquation(1, 5, {{rat(1)}}), ArgumentError);
  CHECK_THROWS_AS(DifferenceEquation(2, 6, std::vector<std::vector<Rational>>(6, {rat(1)})),
                  ArgumentError);
}
