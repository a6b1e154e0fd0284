#pragma once

// Reference covers of P^1 x P^1, fibred over P^1 by the first projection,
// branched along the four lines {0}xP^1, {inf}xP^1, P^1x{0}, P^1x{inf}.

#include <cstdint>

#include "ramcov/cover_io.hpp"

namespace ramcov::golden {

/// P^1 x P^1 with the four lines: D1, D2 are fibres, D3, D4 are sections.
model::BaseGeometry four_lines_base();

/// Degree-one cover.
io::CoverDocument identity_cover();

/// (u, v) -> (u^a, v^b); degree ab, every crossing has one smooth point above.
/// Throws InvalidInput unless a, b >= 1.
io::CoverDocument kummer_cover(std::int64_t a, std::int64_t b);

/// Double cover branched along all four lines; one A_{2,1} point above
/// each crossing.
io::CoverDocument bidouble_cover();

}  // namespace ramcov::golden
