#include <doctest.h>

#include <cmath>

#include "ramcov/bounds.hpp"
#include "ramcov/golden.hpp"
#include "test_covers.hpp"

using namespace ramcov;
using bounds::EvInputs;

namespace {

// Reference values evaluated with mpmath at 60 significant digits.
constexpr double k84Log24 = 266.9565217492274320503430945089526543454;
constexpr double k44Log8 = 91.49542783391278084307464003247930698597;
constexpr double kOnePlus81Log27 = 267.9627861463506550090445925721737462293;

}  // namespace

TEST_CASE("ev_bound examples") {
  CHECK(bounds::ev_bound({0, 2, 0, 2, 0}, 2) == 9);
  CHECK(bounds::ev_bound({0, 0, 0, 0, 0}, 1) == 0);
  CHECK(bounds::ev_bound({2, 4, 1, 3, 5}, 7) == 280);
  CHECK(bounds::ev_bound({0, 1, 0, 0, 0}, 1) == ratio(1, 4));
  CHECK_THROWS_AS(bounds::ev_bound({-1, 0, 0, 0, 0}, 1), InvalidInput);
  CHECK_THROWS_AS(bounds::ev_bound({0, 0, 0, 0, 0}, 0), InvalidInput);
}

TEST_CASE("ev_bound is weakly increasing in every argument") {
  const EvInputs start{1, 2, 0, 1, 3};
  const Rational at = bounds::ev_bound(start, 3);
  for (int arg = 0; arg < 5; ++arg) {
    EvInputs up = start;
    std::int64_t* fields[] = {&up.gF, &up.Dhor_dot_F, &up.gC, &up.nDC, &up.nS};
    *fields[arg] += 1;
    CHECK(bounds::ev_bound(up, 3) >= at);
  }
  CHECK(bounds::ev_bound(start, 4) >= at);
  // zero first factor
  for (int d = 1; d <= 5; ++d) CHECK(bounds::ev_bound({0, 0, 4, 4, 4}, d) == 0);
}

TEST_CASE("bs_height_log examples") {
  const auto a = bounds::bs_height_log(2, 3, 0);
  CHECK(std::abs(a.value - k84Log24) <= 1e-12 * k84Log24);
  CHECK(a.decimal.rfind("266.95652174922743205034309450895265434", 0) == 0);
  CHECK(a.precision_bits == bounds::kLogPrecisionBits);

  const auto b = bounds::bs_height_log(2, 1, 0);
  CHECK(std::abs(b.value - k44Log8) <= 1e-12 * k44Log8);

  // h = e - 1 to 45 digits, so log(h + 1) = 1 to well below the tolerance
  const Rational e_minus_1 = parse_rational(
      "171828182845904523536028747135266249775724709/100000000000000000000000000000000000000000000");
  const auto c = bounds::bs_height_log(3, 1, e_minus_1);
  CHECK(std::abs(c.value - kOnePlus81Log27) <= 1e-12 * kOnePlus81Log27);
}

TEST_CASE("bs_height_log preconditions") {
  CHECK_THROWS_AS(bounds::bs_height_log(1, 3, 0), InvalidInput);
  CHECK_THROWS_AS(bounds::bs_height_log(2, 0, 0), InvalidInput);
  CHECK_THROWS_AS(bounds::bs_height_log(2, 1, ratio(-1, 2)), InvalidInput);
}

TEST_CASE("linear-bound constant of the four-line configuration") {
  // (8 + 2*8 + 0 + 6*4 + 0 + 0)/12 + (2 + 2)/2
  CHECK(bounds::theorem1_constant(golden::four_lines_base()) == 6);
}

TEST_CASE("certificate of the identity cover") {
  const auto id = golden::identity_cover();
  const auto cert = bounds::theorem1_certificate(id.base, id.cover);
  CHECK(cert.satisfied);
  for (const auto& t : cert.terms) {
    if (t.name.rfind("preimage_points", 0) == 0)
      CHECK(t.value == 1);
    else
      CHECK(t.value == 0);
  }
}

TEST_CASE("certificate of the double cover") {
  const auto bi = golden::bidouble_cover();
  const auto cert = bounds::theorem1_certificate(bi.base, bi.cover);
  CHECK(cert.satisfied);
  Rational cross = 0, correction = 0;
  for (const auto& t : cert.terms) {
    if (t.name.rfind("RR_cross", 0) == 0) cross += t.value;
    if (t.name.rfind("correction", 0) == 0) {
      correction += t.value;
      CHECK(t.lower == -2);
      CHECK(t.lower_strict);
      CHECK(t.upper == 2);
    }
  }
  CHECK(cross == 4);
  CHECK(cross <= 2 * 2 * 4);
  CHECK(correction == 0);
}

TEST_CASE("certificates hold on generated families") {
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b) {
      const auto doc = golden::kummer_cover(a, b);
      const auto cert = bounds::theorem1_certificate(doc.base, doc.cover);
      CHECK(cert.satisfied);
      CHECK(abs(cert.deg_det) <= cert.theorem1_c * (a * b));
    }
  for (int p = 2; p <= 6; p += 2)
    for (int r = 2; r <= 6; r += 2) {
      const auto doc = testing::grid_double_cover(p, r);
      CHECK(bounds::theorem1_certificate(doc.base, doc.cover).satisfied);
    }
}

TEST_CASE("a term outside its range fails the certificate") {
  bounds::BoundTerm t{"x", 2, 0, false, 2, true, 1};
  CHECK_FALSE(t.holds());
  t.upper_strict = false;
  CHECK(t.holds());
  t.value = 0;
  t.lower_strict = true;
  CHECK_FALSE(t.holds());
}
