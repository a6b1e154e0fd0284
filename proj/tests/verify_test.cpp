#include <doctest.h>

#include "ramcov/verify.hpp"

using namespace ramcov;

namespace {

hj::Discrepancies zero_discrepancies(const hj::HJChain& chain) {
  return {std::vector<Rational>(chain.lambda(), Rational(0)), Rational(0)};
}

}  // namespace

TEST_CASE("divisor sums") {
  CHECK(verify::divisor_sum(1) == 1);
  CHECK(verify::divisor_sum(6) == 12);
  CHECK(verify::divisor_sum(60) == 168);
}

TEST_CASE("sweeps pass on the real implementation") {
  CHECK(verify::verify_hj(2).ok());
  CHECK(verify::verify_hj(80, 3).ok());
  CHECK(verify::verify_lattices(20, 100).ok());
}

TEST_CASE("worker count does not change the result") {
  const auto one = verify::verify_hj(50, 1);
  const auto four = verify::verify_hj(50, 4);
  REQUIRE(one.results.size() == four.results.size());
  for (std::size_t i = 0; i < one.results.size(); ++i) {
    CHECK(one.results[i].name == four.results[i].name);
    CHECK(one.results[i].checked == four.results[i].checked);
  }
}

TEST_CASE("a broken discrepancy solver is caught with a counterexample") {
  verify::HjImplementation broken;
  broken.solve = &zero_discrepancies;
  const auto s = verify::verify_hj(10, 2, broken);
  CHECK_FALSE(s.ok());
  bool residual_failed = false;
  for (const auto& r : s.results)
    if (r.name == "hj.recursion_residual") {
      residual_failed = !r.ok();
      // the first counterexample in sweep order is A_{3,1}
      CHECK(r.counterexample->find("A_{3,1}") != std::string::npos);
    }
  CHECK(residual_failed);
}

TEST_CASE("lattice sweep respects the enumeration cap") {
  CHECK_THROWS_AS(verify::verify_lattices(50, 10), ResourceLimit);
}
