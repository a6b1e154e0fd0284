#pragma once

// Explicit bounds: the per-term estimates behind the linear bound on
// deg det R f_* O_{Y'}, the Esnault-Viehweg bound for semistable fibrations,
// and the Bilu-Strambi height bound for covers of the projective line.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramcov/cover_model.hpp"
#include "ramcov/invariants.hpp"
#include "ramcov/rational.hpp"

namespace ramcov::bounds {

/// One estimate: lower <(=) value <(=) upper, where upper <= coefficient * d.
struct BoundTerm {
  std::string name;
  Rational value;
  Rational lower;
  bool lower_strict = false;
  Rational upper;
  bool upper_strict = false;
  Rational coefficient;

  bool holds() const;
  bool operator==(const BoundTerm&) const = default;
};

struct EvInputs {
  std::int64_t gF = 0;          // genus of a smooth fibre
  std::int64_t Dhor_dot_F = 0;  // (D^hor, F)
  std::int64_t gC = 0;          // genus of C
  std::int64_t nDC = 0;         // #D_C
  std::int64_t nS = 0;          // number of singular fibres

  bool operator==(const EvInputs&) const = default;
};

struct BoundCertificate {
  std::vector<BoundTerm> terms;
  Rational theorem1_c;
  Rational deg_det;
  std::int64_t degree = 1;
  std::optional<Rational> ev_bound;
  std::optional<bool> ev_satisfied;  // deg_det <= ev_bound
  bool satisfied = false;            // every term holds

  bool operator==(const BoundCertificate&) const = default;
};

/// Linear-in-d constant c with |deg det| <= c * d, depending only on the base.
Rational theorem1_constant(const model::BaseGeometry& base);

BoundCertificate theorem1_certificate(const model::BaseGeometry& base,
                                      const model::CoverDescription& cover,
                                      const inv::InvariantReport& report);
BoundCertificate theorem1_certificate(const model::BaseGeometry& base,
                                      const model::CoverDescription& cover);

/// (g(F) + (D^hor,F)/2) (g(C) + 2 #D_C + (1 + #S)/2) d.
/// Throws InvalidInput on negative arguments or d < 1.
Rational ev_bound(const EvInputs& in, std::int64_t d);

/// Fixed-precision natural log of (h+1)(d^3 nB)^(5 d^2 nB + 12 d).
struct LogBound {
  std::string decimal;  // 40 significant digits
  double value = 0.0;
  int precision_bits = 0;
};

inline constexpr int kLogPrecisionBits = 256;

/// Throws InvalidInput unless d >= 2, nB >= 1 and h >= 0.
LogBound bs_height_log(std::int64_t d, std::int64_t nB, const Rational& h);

}  // namespace ramcov::bounds
