#pragma once

// Cyclic quotient singularities A_{n,q}: Hirzebruch-Jung chains of the
// minimal resolution and the discrepancies of the exceptional curves.

#include <cstdint>
#include <span>
#include <vector>

#include "ramcov/rational.hpp"

namespace ramcov::hj {

/// Type A_{n,q} of a singular point: n >= 2, 1 <= q < n, gcd(n, q) = 1.
/// Smooth points (n = 1) are not representable here; see local::LocalCoverType.
class SingularityType {
 public:
  SingularityType(std::int64_t n, std::int64_t q);

  std::int64_t n() const { return n_; }
  std::int64_t q() const { return q_; }

  bool operator==(const SingularityType&) const = default;

 private:
  std::int64_t n_;
  std::int64_t q_;
};

/// Negated self-intersections -(E_i, E_i) of the exceptional chain, in the
/// order produced by the expansion of n/q.
struct HJChain {
  std::vector<std::int64_t> b;

  std::size_t lambda() const { return b.size(); }
  bool operator==(const HJChain&) const = default;
};

struct Discrepancies {
  std::vector<Rational> a;  // coefficient of E_i in K_{Y'} - rho^* K_Y
  Rational correction;      // sum a_i (b_i - 2)
};

struct ResolutionData {
  SingularityType sing;
  HJChain chain;
  std::vector<Rational> a;
  Rational correction;
};

/// Expands n/q = b_1 - 1/(b_2 - ...) with every b_i >= 2.
HJChain hj_expand(const SingularityType& sing);

/// Value of [b_1, ..., b_lambda], evaluated right to left.
/// Throws InvalidInput on an empty chain or an entry below 2.
Rational hj_evaluate(std::span<const std::int64_t> b);
inline Rational hj_evaluate(const HJChain& chain) { return hj_evaluate(chain.b); }

/// Solves b_i a_i - a_{i-1} - a_{i+1} = 2 - b_i with a_0 = a_{lambda+1} = 0.
Discrepancies discrepancies(const HJChain& chain);

ResolutionData resolve(const SingularityType& sing);

/// b_i a_i - a_{i-1} - a_{i+1} - (2 - b_i) at 0-based index i, out-of-range a
/// read as 0. Zero everywhere for the output of discrepancies().
Rational recursion_residual(const HJChain& chain, std::span<const Rational> a,
                            std::size_t i);

}  // namespace ramcov::hj
