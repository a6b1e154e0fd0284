#pragma once

// Local structure of a cover above a crossing of two branch components,
// read off from the finite-index subgroup Gamma of pi_1 of the punctured
// bidisk, Z x Z. The first coordinate is the loop around the first branch.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ramcov::local {

using Vec2 = std::array<std::int64_t, 2>;

struct LatticeSubgroup {
  Vec2 g1;
  Vec2 g2;

  /// g1.x * g2.y - g1.y * g2.x; Gamma has finite index iff this is nonzero.
  std::int64_t determinant() const;
  /// Same subgroup with the two coordinates of every generator exchanged.
  LatticeSubgroup swapped() const;

  bool operator==(const LatticeSubgroup&) const = default;
};

/// Gamma = Z(n', 0) + Z(q', m2) with 0 <= q' < n' and m2 > 0.
struct CanonicalBasis {
  std::int64_t n_prime;
  std::int64_t q_prime;
  std::int64_t m2;

  bool operator==(const CanonicalBasis&) const = default;
};

struct LocalCoverType {
  std::int64_t n;
  std::int64_t q;
  std::int64_t m1;
  std::int64_t m2;
  std::int64_t d_y;
  std::int64_t e1;
  std::int64_t e2;
  bool singular;

  /// Builds the type from (n, q, m1, m2); throws InvalidInput when
  /// local_type_problem() reports one.
  static LocalCoverType from_parameters(std::int64_t n, std::int64_t q, std::int64_t m1,
                                        std::int64_t m2);

  bool operator==(const LocalCoverType&) const = default;
};

/// Describes why (n, q, m1, m2) is not a valid local type, if it is not.
std::optional<std::string> local_type_problem(std::int64_t n, std::int64_t q,
                                              std::int64_t m1, std::int64_t m2);

CanonicalBasis canonical_basis(const LatticeSubgroup& gamma);
LocalCoverType local_type(const LatticeSubgroup& gamma);

/// True iff v lies in Gamma.
bool contains(const LatticeSubgroup& gamma, const Vec2& v);

inline constexpr std::int64_t kDefaultEnumerationCap = 2000;

/// Cap from RAMCOV_MAX_ENUM when set to a positive integer, else the default.
std::int64_t enumeration_cap_from_env();

/// One Hermite-form representative (a,0),(c,m) per subgroup of index at most
/// max_index, ordered by index, then a, then c. Throws ResourceLimit when
/// max_index exceeds cap, InvalidInput when max_index < 1.
std::vector<LatticeSubgroup> enumerate_subgroups(std::int64_t max_index,
                                                 std::int64_t cap = kDefaultEnumerationCap);

}  // namespace ramcov::local
