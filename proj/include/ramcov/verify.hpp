#pragma once

// Exhaustive property sweeps over singularity types A_{n,q} and over
// sublattices of Z x Z.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramcov/hj.hpp"

namespace ramcov::verify {

struct PropertyResult {
  std::string name;
  std::uint64_t checked = 0;
  std::optional<std::string> counterexample;  // first failure in sweep order

  bool ok() const { return !counterexample.has_value(); }
};

struct Summary {
  std::vector<PropertyResult> results;

  bool ok() const;
  void append(const Summary& other);
};

/// The routines under test. Swappable so the sweep itself can be checked
/// against a deliberately broken implementation.
struct HjImplementation {
  hj::HJChain (*expand)(const hj::SingularityType&) = &hj::hj_expand;
  hj::Discrepancies (*solve)(const hj::HJChain&) = &hj::discrepancies;
};

/// All coprime 1 <= q < n with 2 <= n <= max_n, split across `workers` threads.
Summary verify_hj(std::int64_t max_n, unsigned workers = 1, HjImplementation impl = {});

/// All sublattices of index <= max_index. Throws ResourceLimit above `cap`.
Summary verify_lattices(std::int64_t max_index, std::int64_t cap,
                        HjImplementation impl = {});

/// sum of the divisors of k, by trial division
std::int64_t divisor_sum(std::int64_t k);

}  // namespace ramcov::verify
