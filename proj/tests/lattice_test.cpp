#include <doctest.h>

#include <cstdlib>
#include <random>

#include "ramcov/lattice.hpp"
#include "ramcov/rational.hpp"

using namespace ramcov;
using local::LatticeSubgroup;
using local::LocalCoverType;

namespace {

// Membership by Cramer's rule: v = c1 g1 + c2 g2 with integral c.
bool cramer_contains(const LatticeSubgroup& g, std::int64_t x, std::int64_t y) {
  const std::int64_t det = g.g1[0] * g.g2[1] - g.g1[1] * g.g2[0];
  const std::int64_t c1 = x * g.g2[1] - y * g.g2[0];
  const std::int64_t c2 = g.g1[0] * y - g.g1[1] * x;
  return c1 % det == 0 && c2 % det == 0;
}

// n' = least x > 0 with (x,0) in Gamma, m2 = least y > 0 occurring as a
// second coordinate, q' = least x >= 0 with (x, m2) in Gamma.
local::CanonicalBasis brute_basis(const LatticeSubgroup& g) {
  const std::int64_t index = std::llabs(g.g1[0] * g.g2[1] - g.g1[1] * g.g2[0]);
  local::CanonicalBasis out{0, 0, 0};
  for (std::int64_t x = 1; out.n_prime == 0; ++x)
    if (cramer_contains(g, x, 0)) out.n_prime = x;
  for (std::int64_t y = 1; out.m2 == 0 && y <= index; ++y)
    for (std::int64_t x = 0; x < out.n_prime; ++x)
      if (cramer_contains(g, x, y)) {
        out.m2 = y;
        out.q_prime = x;
        break;
      }
  return out;
}

// Random unimodular change of generators.
LatticeSubgroup scramble(LatticeSubgroup g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> op(0, 3), k(-3, 3);
  for (int step = 0; step < 6; ++step) {
    const int t = k(rng);
    switch (op(rng)) {
      case 0: g.g1 = {g.g1[0] + t * g.g2[0], g.g1[1] + t * g.g2[1]}; break;
      case 1: g.g2 = {g.g2[0] + t * g.g1[0], g.g2[1] + t * g.g1[1]}; break;
      case 2: std::swap(g.g1, g.g2); break;
      default: g.g1 = {-g.g1[0], -g.g1[1]}; break;
    }
  }
  return g;
}

}  // namespace

TEST_CASE("canonical_basis examples") {
  CHECK(local::canonical_basis({{1, 0}, {0, 1}}) == local::CanonicalBasis{1, 0, 1});
  CHECK(local::canonical_basis({{2, 0}, {1, 1}}) == local::CanonicalBasis{2, 1, 1});
  CHECK(local::canonical_basis({{4, 0}, {2, 1}}) == local::CanonicalBasis{4, 2, 1});
  CHECK(local::canonical_basis({{1, 1}, {2, 0}}) == local::CanonicalBasis{2, 1, 1});
  CHECK_THROWS_AS(local::canonical_basis({{2, 0}, {4, 0}}), InvalidInput);
  CHECK_THROWS_AS(local::canonical_basis({{1, 2}, {2, 4}}), InvalidInput);
}

TEST_CASE("local_type examples") {
  CHECK(local::local_type({{1, 0}, {0, 1}}) == LocalCoverType{1, 0, 1, 1, 1, 1, 1, false});
  CHECK(local::local_type({{2, 0}, {1, 1}}) == LocalCoverType{2, 1, 1, 1, 2, 2, 2, true});
  CHECK(local::local_type({{2, 0}, {0, 2}}) == LocalCoverType{1, 0, 2, 2, 4, 2, 2, false});
  CHECK(local::local_type({{4, 0}, {2, 1}}) == LocalCoverType{2, 1, 2, 1, 4, 4, 2, true});
  CHECK_THROWS_AS(local::local_type({{2, 0}, {4, 0}}), InvalidInput);
}

TEST_CASE("local type parameters are validated") {
  CHECK_FALSE(local::local_type_problem(1, 0, 1, 1));
  CHECK_FALSE(local::local_type_problem(5, 2, 3, 1));
  CHECK(local::local_type_problem(0, 0, 1, 1));
  CHECK(local::local_type_problem(4, 2, 1, 1));
  CHECK(local::local_type_problem(3, 0, 1, 1));
  CHECK(local::local_type_problem(3, 3, 1, 1));
  CHECK(local::local_type_problem(3, 1, 0, 1));
  CHECK(local::local_type_problem(3, 1, 1, -2));
  CHECK_THROWS_AS(LocalCoverType::from_parameters(4, 2, 1, 1), InvalidInput);
  const auto t = LocalCoverType::from_parameters(3, 2, 2, 5);
  CHECK(t.e1 == 6);
  CHECK(t.e2 == 15);
  CHECK(t.d_y == 30);
  CHECK(t.singular);
}

TEST_CASE("enumerate_subgroups counts") {
  CHECK(local::enumerate_subgroups(1).size() == 1);
  CHECK(local::enumerate_subgroups(2).size() == 4);
  CHECK(local::enumerate_subgroups(6).size() == 33);
  CHECK(local::enumerate_subgroups(60).size() == 3014);
  CHECK_THROWS_AS(local::enumerate_subgroups(0), InvalidInput);
  CHECK_THROWS_AS(local::enumerate_subgroups(11, 10), ResourceLimit);
}

TEST_CASE("enumeration cap reads RAMCOV_MAX_ENUM") {
  ::setenv("RAMCOV_MAX_ENUM", "17", 1);
  CHECK(local::enumeration_cap_from_env() == 17);
  ::setenv("RAMCOV_MAX_ENUM", "junk", 1);
  CHECK(local::enumeration_cap_from_env() == local::kDefaultEnumerationCap);
  ::unsetenv("RAMCOV_MAX_ENUM");
  CHECK(local::enumeration_cap_from_env() == local::kDefaultEnumerationCap);
}

TEST_CASE("canonical basis matches the brute-force search on scrambled generators") {
  std::mt19937_64 rng(20261015);
  for (const auto& g : local::enumerate_subgroups(24)) {
    for (int trial = 0; trial < 4; ++trial) {
      const LatticeSubgroup s = scramble(g, rng);
      CAPTURE(s.g1[0]);
      CAPTURE(s.g1[1]);
      CAPTURE(s.g2[0]);
      CAPTURE(s.g2[1]);
      CHECK(local::canonical_basis(s) == brute_basis(s));
      CHECK(local::local_type(s) == local::local_type(g));
    }
  }
}

TEST_CASE("membership agrees with Cramer's rule") {
  for (const auto& g : local::enumerate_subgroups(12))
    for (std::int64_t x = -6; x <= 6; ++x)
      for (std::int64_t y = -6; y <= 6; ++y) CHECK(local::contains(g, {x, y}) == cramer_contains(g, x, y));
}

TEST_CASE("axis swap exchanges m1 and m2 and inverts q") {
  for (const auto& g : local::enumerate_subgroups(30)) {
    const auto t = local::local_type(g);
    const auto s = local::local_type(g.swapped());
    CHECK(s.n == t.n);
    CHECK(s.m1 == t.m2);
    CHECK(s.m2 == t.m1);
    if (t.n > 1) CHECK((t.q * s.q) % t.n == 1);
  }
}
