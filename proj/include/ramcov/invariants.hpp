#pragma once

// Global invariants of the minimal resolution Y' of the normalisation Y of
// X in a cover of U = X - D, computed from the declared local data.

#include <string>
#include <vector>

#include "ramcov/cover_model.hpp"
#include "ramcov/rational.hpp"

namespace ramcov::inv {

struct ComponentValue {
  std::string id;
  Integer value;

  bool operator==(const ComponentValue&) const = default;
};

/// Multiplicity of each D_i in B = pi_* R, in component order.
std::vector<ComponentValue> branch_divisor(const model::BaseGeometry& base,
                                           const model::CoverDescription& cover);

struct SelfIntersection {
  Rational diagonal;  // sum over components
  Rational cross;     // sum over ordered pairs (each crossing counted twice)

  Rational total() const { return diagonal + cross; }
};

SelfIntersection r_self_intersection(const model::BaseGeometry& base,
                                     const model::CoverDescription& cover);

struct K2Chain {
  Rational KY_sq;
  Rational correction_total;
  Rational KYprime_sq;
};

K2Chain k2_chain(const model::BaseGeometry& base, const model::CoverDescription& cover);

struct EulerChain {
  Integer euler_Y;
  Integer exceptional_s;
  Integer euler_Yprime;
  Integer preimage_points;  // #pi^{-1} D^sing
};

EulerChain euler_chain(const model::BaseGeometry& base, const model::CoverDescription& cover);

Rational deg_det(const model::BaseGeometry& base, const model::CoverDescription& cover);

struct InvariantReport {
  std::vector<ComponentValue> B_mult;
  Integer KX_dot_B;
  Integer B_dot_F;
  Rational RR_diagonal;
  Rational RR_cross;
  Rational RR;
  Rational KY_sq;
  Rational correction_total;
  Rational KYprime_sq;
  Integer euler_U;
  Integer euler_Y;
  Integer preimage_points;
  Integer exceptional_s;
  Integer euler_Yprime;
  Rational chi;
  Rational deg_det;
  bool chi_integral = false;
  bool deg_det_integral = false;

  bool operator==(const InvariantReport&) const = default;
};

/// Full pipeline. Throws InvalidInput if the input does not validate.
InvariantReport compute_invariants(const model::BaseGeometry& base,
                                   const model::CoverDescription& cover);

}  // namespace ramcov::inv
