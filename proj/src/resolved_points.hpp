#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramcov/cover_model.hpp"
#include "ramcov/rational.hpp"

namespace ramcov::inv::detail {

struct ResolvedPoint {
  std::int64_t crossing;
  local::LocalCoverType type;
  std::int64_t e_first;   // e of the sheet of the first branch through y
  std::int64_t e_second;  // e of the sheet of the second branch through y
};

/// Every point above every crossing, in crossing order. Requires validated input.
inline std::vector<ResolvedPoint> resolved_points(const model::BaseGeometry& base,
                                                  const model::CoverDescription& cover) {
  std::vector<ResolvedPoint> out;
  for (const auto& x : base.crossings) {
    const auto& first = cover.ramification.at(x.first);
    const auto& second = cover.ramification.at(x.second);
    for (const auto& p : cover.points_above.at(x.index))
      out.push_back({x.index, model::resolve_local(p.local),
                     first.at(static_cast<std::size_t>(p.j)).e,
                     second.at(static_cast<std::size_t>(p.jp)).e});
  }
  return out;
}

/// sum_j (e_ij - 1)^2 f_ij / e_ij
inline Rational diagonal_factor(const std::vector<model::RamSheet>& sheets) {
  Rational out = 0;
  for (const auto& s : sheets) out += ratio(Integer(s.e - 1) * (s.e - 1) * s.f, s.e);
  out.canonicalize();
  return out;
}

}  // namespace ramcov::inv::detail
