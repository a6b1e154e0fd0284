#include <doctest.h>

#include <algorithm>
#include <random>

#include "ramcov/cover_model.hpp"
#include "ramcov/golden.hpp"
#include "test_covers.hpp"

using namespace ramcov;
using model::Rule;

namespace {

std::vector<Rule> rules(const model::ValidationReport& r) {
  std::vector<Rule> out;
  for (const auto& v : r.violations) out.push_back(v.rule);
  return out;
}

}  // namespace

TEST_CASE("golden covers validate in strict mode") {
  CHECK(model::validate(golden::identity_cover().base, golden::identity_cover().cover, {true}).ok());
  const auto bi = golden::bidouble_cover();
  CHECK(model::validate(bi.base, bi.cover, {true}).ok());
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b) {
      const auto k = golden::kummer_cover(a, b);
      CHECK(model::validate(k.base, k.cover, {true}).ok());
    }
  const auto grid = testing::grid_double_cover(4, 6);
  CHECK(model::validate(grid.base, grid.cover, {true}).ok());
}

TEST_CASE("V1: a single sheet with e*f != d") {
  auto doc = golden::bidouble_cover();
  doc.cover.ramification["D1"] = {{2, 2}};
  const auto r = model::validate(doc.base, doc.cover);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].rule == Rule::SheetSum);
  CHECK(r.violations[0].where == std::vector<std::string>{"D1"});
}

TEST_CASE("V2: local degrees over a crossing do not add up to d") {
  auto doc = golden::bidouble_cover();
  doc.cover.points_above[2].push_back({0, 0, local::LatticeSubgroup{{2, 0}, {1, 1}}});
  const auto r = model::validate(doc.base, doc.cover);
  CHECK(rules(r) == std::vector<Rule>{Rule::LocalDegreeSum});
  CHECK(r.violations[0].where == std::vector<std::string>{"crossing 2"});
}

TEST_CASE("V3: ramification index of the point disagrees with its sheet") {
  auto doc = golden::bidouble_cover();
  doc.cover.points_above[0] = {{0, 0, model::LocalParameters{1, 0, 1, 2}}};
  CHECK(rules(model::validate(doc.base, doc.cover)) == std::vector<Rule>{Rule::RamificationMatch});
}

TEST_CASE("V4 only fires in strict mode") {
  // Degree 4, two sheets per component and two A_{2,1} points per crossing.
  // Moving both points of crossing 1 onto sheet 0 keeps V1-V3 but breaks V4.
  auto doc = golden::bidouble_cover();
  doc.cover.degree = 4;
  for (auto& [id, sheets] : doc.cover.ramification) sheets = {{2, 1}, {2, 1}};
  for (auto& [index, points] : doc.cover.points_above)
    points = {{0, 0, local::LatticeSubgroup{{2, 0}, {1, 1}}},
              {1, 1, local::LatticeSubgroup{{2, 0}, {1, 1}}}};
  CHECK(model::validate(doc.base, doc.cover, {true}).ok());
  doc.cover.points_above[1] = {{0, 0, local::LatticeSubgroup{{2, 0}, {1, 1}}},
                               {0, 0, local::LatticeSubgroup{{2, 0}, {1, 1}}}};
  CHECK(model::validate(doc.base, doc.cover, {false}).ok());
  const auto strict = model::validate(doc.base, doc.cover, {true});
  CHECK(strict.has(Rule::SheetIncidence));
  CHECK(std::all_of(strict.violations.begin(), strict.violations.end(),
                    [](const auto& v) { return v.rule == Rule::SheetIncidence; }));
}

TEST_CASE("V5: invalid local data") {
  auto doc = golden::bidouble_cover();
  doc.cover.points_above[3] = {{0, 0, model::LocalParameters{4, 2, 1, 1}}};
  doc.cover.points_above[1] = {{0, 0, local::LatticeSubgroup{{2, 0}, {4, 0}}}};
  const auto r = model::validate(doc.base, doc.cover);
  CHECK(rules(r) == std::vector<Rule>{Rule::LocalType, Rule::LocalType});
}

TEST_CASE("structural problems") {
  SUBCASE("unknown component in a crossing") {
    auto doc = golden::identity_cover();
    doc.base.crossings[0].second = "D9";
    CHECK(model::validate(doc.base, doc.cover).has(Rule::Structure));
  }
  SUBCASE("self-crossing component") {
    auto doc = golden::identity_cover();
    doc.base.crossings[0].second = "D1";
    CHECK(model::validate(doc.base, doc.cover).has(Rule::Structure));
  }
  SUBCASE("missing ramification means unspecified, not unramified") {
    auto doc = golden::identity_cover();
    doc.cover.ramification.erase("D4");
    CHECK(model::validate(doc.base, doc.cover).has(Rule::Structure));
  }
  SUBCASE("missing points above a crossing") {
    auto doc = golden::identity_cover();
    doc.cover.points_above.erase(2);
    CHECK(model::validate(doc.base, doc.cover).has(Rule::Structure));
  }
  SUBCASE("sheet index out of range") {
    auto doc = golden::identity_cover();
    doc.cover.points_above[0][0].jp = 3;
    CHECK(model::validate(doc.base, doc.cover).has(Rule::Structure));
  }
  SUBCASE("declared intersection count disagrees") {
    auto doc = golden::identity_cover();
    doc.base.intersections.push_back({"D3", "D1", 2});
    const auto r = model::validate(doc.base, doc.cover);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].where == std::vector<std::string>{"D1", "D3"});
  }
  SUBCASE("non-positive degree and bad sheets") {
    auto doc = golden::identity_cover();
    doc.cover.degree = 0;
    doc.cover.ramification["D2"] = {{0, 1}};
    CHECK(model::validate(doc.base, doc.cover).has(Rule::Structure));
  }
}

TEST_CASE("verdict is independent of input order") {
  std::mt19937_64 rng(7);
  auto doc = golden::bidouble_cover();
  doc.cover.ramification["D2"] = {{2, 2}};
  doc.cover.points_above[3] = {{0, 0, model::LocalParameters{4, 2, 1, 1}}};
  const auto reference = model::validate(doc.base, doc.cover, {true});
  CHECK(reference.violations.size() >= 2);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(doc.base.components.begin(), doc.base.components.end(), rng);
    std::shuffle(doc.base.crossings.begin(), doc.base.crossings.end(), rng);
    std::shuffle(doc.base.intersections.begin(), doc.base.intersections.end(), rng);
    CHECK(model::validate(doc.base, doc.cover, {true}) == reference);
  }
}

TEST_CASE("derived Euler data") {
  const auto e = model::derived_euler_data(golden::four_lines_base());
  CHECK(e.open_euler == std::vector<std::int64_t>{0, 0, 0, 0});
  CHECK(e.euler_D == 4);
  CHECK(e.euler_U == 0);
  CHECK(e.singular_points == 4);

  model::BaseGeometry empty;
  empty.euler_X = 7;
  CHECK(model::derived_euler_data(empty).euler_U == 7);

  model::BaseGeometry torus;
  torus.euler_X = 12;
  torus.components = {{"E", 1, 0, 0, 0}};
  const auto t = model::derived_euler_data(torus);
  CHECK(t.open_euler == std::vector<std::int64_t>{0});
  CHECK(t.euler_U == 12);
}

TEST_CASE("generated covers: per-sheet incidence implies the local degree sum") {
  // Random local types at a single crossing, each point on its own pair of
  // sheets, so V1, V3, V4 hold by construction.
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> n_dist(1, 7), m_dist(1, 4), count(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    model::BaseGeometry base;
    base.euler_X = 4;
    base.components = {{"A", 0, 0, 0, 0}, {"B", 0, 0, 0, 0}};
    base.crossings = {{0, "A", "B"}};
    model::CoverDescription cover;
    std::int64_t degree = 0;
    const int points = count(rng);
    for (int k = 0; k < points; ++k) {
      const std::int64_t n = n_dist(rng), m1 = m_dist(rng), m2 = m_dist(rng);
      std::int64_t q = n == 1 ? 0 : 1 + static_cast<std::int64_t>(rng() % (n - 1));
      while (n > 1 && std::gcd(n, q) != 1) q = 1 + static_cast<std::int64_t>(rng() % (n - 1));
      const auto t = local::LocalCoverType::from_parameters(n, q, m1, m2);
      cover.ramification["A"].push_back({t.e1, t.m2});
      cover.ramification["B"].push_back({t.e2, t.m1});
      cover.points_above[0].push_back({k, k, model::LocalParameters{n, q, m1, m2}});
      degree += t.d_y;
    }
    cover.degree = degree;
    const auto r = model::validate(base, cover, {true});
    CHECK(r.ok());

    // Sum of f over sheets is at most d, with equality iff unramified.
    for (const auto& [id, sheets] : cover.ramification) {
      std::int64_t f_sum = 0;
      bool unramified = true;
      for (const auto& s : sheets) {
        f_sum += s.f;
        unramified = unramified && s.e == 1;
      }
      CHECK(f_sum <= degree);
      CHECK((f_sum == degree) == unramified);
    }
  }
}
