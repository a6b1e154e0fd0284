#pragma once

// Declarative description of the base (X, D, h: X -> C) and of a finite
// cover branched along the simple normal crossings divisor D.

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "ramcov/lattice.hpp"

namespace ramcov::model {

struct BranchComponent {
  std::string id;
  std::int64_t genus = 0;      // g(D_i)
  std::int64_t self_int = 0;   // (D_i, D_i)
  std::int64_t KX_dot = 0;     // (K_X, D_i)
  std::int64_t fiber_deg = 0;  // (D_i, F)

  bool operator==(const BranchComponent&) const = default;
};

/// A transversal intersection point of two distinct components. `first` is
/// the branch whose loop is the first lattice coordinate of every point above.
struct Crossing {
  std::int64_t index = 0;
  std::string first;
  std::string second;

  bool operator==(const Crossing&) const = default;
};

/// Declared number of crossings between two components, checked against the
/// crossing list.
struct PairCount {
  std::string first;
  std::string second;
  std::int64_t count = 0;

  bool operator==(const PairCount&) const = default;
};

struct BaseGeometry {
  std::int64_t genus_C = 0;
  std::int64_t KX_sq = 0;
  std::int64_t euler_X = 0;
  std::int64_t KX_dot_F = 0;
  std::vector<BranchComponent> components;
  std::vector<Crossing> crossings;
  std::vector<PairCount> intersections;

  const BranchComponent* find_component(const std::string& id) const;
  std::size_t crossings_on(const std::string& id) const;

  bool operator==(const BaseGeometry&) const = default;
};

struct RamSheet {
  std::int64_t e = 1;  // ramification index along D_ij
  std::int64_t f = 1;  // degree of D_ij over D_i

  bool operator==(const RamSheet&) const = default;
};

struct LocalParameters {
  std::int64_t n = 1;
  std::int64_t q = 0;
  std::int64_t m1 = 1;
  std::int64_t m2 = 1;

  bool operator==(const LocalParameters&) const = default;
};

using LocalSpec = std::variant<local::LatticeSubgroup, LocalParameters>;

/// A point y above a crossing x of (first, second). `j` indexes the sheets of
/// `first`, `jp` the sheets of `second`.
struct PointAbove {
  std::int64_t j = 0;
  std::int64_t jp = 0;
  LocalSpec local;

  bool operator==(const PointAbove&) const = default;
};

struct CoverDescription {
  std::int64_t degree = 1;
  std::map<std::string, std::vector<RamSheet>> ramification;
  std::map<std::int64_t, std::vector<PointAbove>> points_above;

  bool operator==(const CoverDescription&) const = default;
};

/// Local type of a point, from its lattice or its declared parameters.
/// Throws InvalidInput for a degenerate lattice or invalid parameters.
local::LocalCoverType resolve_local(const LocalSpec& spec);

enum class Rule {
  Structure,         // S: references, ranges, missing entries
  SheetSum,          // V1: sum_j e_ij f_ij = d
  LocalDegreeSum,    // V2: sum over y above x of d_y = d
  RamificationMatch, // V3: e1, e2 of y equal the e of its sheets
  SheetIncidence,    // V4: per-sheet local degrees add up to f_ij
  LocalType,         // V5: validity of each local type
};

std::string rule_code(Rule rule);

struct Violation {
  Rule rule;
  std::vector<std::string> where;  // offending ids / indices
  std::string message;

  auto operator<=>(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;  // sorted

  bool ok() const { return violations.empty(); }
  bool has(Rule rule) const;
  bool operator==(const ValidationReport&) const = default;
};

struct ValidateOptions {
  bool strict = false;  // also check V4
};

ValidationReport validate(const BaseGeometry& base, const CoverDescription& cover,
                          const ValidateOptions& options = {});

struct EulerData {
  std::int64_t euler_U = 0;
  std::int64_t euler_D = 0;
  std::vector<std::int64_t> open_euler;  // e_c(D_i - D^sing), in component order
  std::int64_t singular_points = 0;      // #D^sing
};

EulerData derived_euler_data(const BaseGeometry& base);

}  // namespace ramcov::model
