#include "ramcov/golden.hpp"

#include "ramcov/rational.hpp"

namespace ramcov::golden {

model::BaseGeometry four_lines_base() {
  model::BaseGeometry base;
  base.genus_C = 0;
  base.KX_sq = 8;
  base.euler_X = 4;
  base.KX_dot_F = -2;
  base.components = {{"D1", 0, 0, -2, 0},
                     {"D2", 0, 0, -2, 0},
                     {"D3", 0, 0, -2, 1},
                     {"D4", 0, 0, -2, 1}};
  base.crossings = {{0, "D1", "D3"}, {1, "D1", "D4"}, {2, "D2", "D3"}, {3, "D2", "D4"}};
  base.intersections = {{"D1", "D2", 0}, {"D1", "D3", 1}, {"D1", "D4", 1},
                        {"D2", "D3", 1}, {"D2", "D4", 1}, {"D3", "D4", 0}};
  return base;
}

namespace {

io::CoverDocument uniform_cover(std::int64_t degree, model::RamSheet fibre_sheet,
                                model::RamSheet section_sheet, local::LatticeSubgroup lattice) {
  io::CoverDocument doc{four_lines_base(), {}};
  doc.cover.degree = degree;
  for (const char* id : {"D1", "D2"}) doc.cover.ramification[id] = {fibre_sheet};
  for (const char* id : {"D3", "D4"}) doc.cover.ramification[id] = {section_sheet};
  for (const auto& x : doc.base.crossings) doc.cover.points_above[x.index] = {{0, 0, lattice}};
  return doc;
}

}  // namespace

io::CoverDocument identity_cover() { return uniform_cover(1, {1, 1}, {1, 1}, {{1, 0}, {0, 1}}); }

io::CoverDocument kummer_cover(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw InvalidInput("Kummer cover exponents must be positive");
  return uniform_cover(a * b, {a, b}, {b, a}, {{a, 0}, {0, b}});
}

io::CoverDocument bidouble_cover() { return uniform_cover(2, {2, 1}, {2, 1}, {{2, 0}, {1, 1}}); }

}  // namespace ramcov::golden
