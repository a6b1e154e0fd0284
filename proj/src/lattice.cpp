#include "ramcov/lattice.hpp"

#include <cstdlib>
#include <numeric>

#include "ramcov/rational.hpp"

namespace ramcov::local {

namespace {

std::int64_t to_int64(const Integer& z, const char* what) {
  if (!z.fits_slong_p()) throw InvalidInput(std::string(what) + " overflows 64 bits");
  return z.get_si();
}

Integer floor_mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

std::int64_t LatticeSubgroup::determinant() const {
  Integer det = Integer(g1[0]) * g2[1] - Integer(g1[1]) * g2[0];
  return to_int64(det, "lattice determinant");
}

LatticeSubgroup LatticeSubgroup::swapped() const {
  return {{g1[1], g1[0]}, {g2[1], g2[0]}};
}

CanonicalBasis canonical_basis(const LatticeSubgroup& gamma) {
  const Integer x1 = gamma.g1[0], y1 = gamma.g1[1];
  const Integer x2 = gamma.g2[0], y2 = gamma.g2[1];
  const Integer det = x1 * y2 - y1 * x2;
  if (det == 0) throw InvalidInput("lattice generators are dependent (determinant 0)");

  // u*y1 + v*y2 = g = gcd(y1, y2) > 0; g cannot vanish when det != 0.
  Integer g, u, v;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), y1.get_mpz_t(), y2.get_mpz_t());

  // (y2/g) g1 - (y1/g) g2 spans Gamma intersected with Z x 0.
  const Integer n_prime = abs(det) / g;
  const Integer wx = u * x1 + v * x2;
  return CanonicalBasis{to_int64(n_prime, "n'"), to_int64(floor_mod(wx, n_prime), "q'"),
                        to_int64(g, "m2")};
}

std::optional<std::string> local_type_problem(std::int64_t n, std::int64_t q,
                                              std::int64_t m1, std::int64_t m2) {
  if (n < 1) return "n = " + std::to_string(n) + " must be positive";
  if (m1 < 1) return "m1 = " + std::to_string(m1) + " must be positive";
  if (m2 < 1) return "m2 = " + std::to_string(m2) + " must be positive";
  if (q < 0 || q >= n)
    return "q = " + std::to_string(q) + " must lie in [0, n) with n = " + std::to_string(n);
  if (n == 1) return std::nullopt;
  if (q == 0) return "q = 0 is only allowed for smooth points (n = 1)";
  if (std::gcd(n, q) != 1)
    return "gcd(n, q) = gcd(" + std::to_string(n) + ", " + std::to_string(q) + ") != 1";
  return std::nullopt;
}

LocalCoverType LocalCoverType::from_parameters(std::int64_t n, std::int64_t q,
                                               std::int64_t m1, std::int64_t m2) {
  if (auto problem = local_type_problem(n, q, m1, m2)) throw InvalidInput(*problem);
  const Integer e1 = Integer(n) * m1;
  const Integer e2 = Integer(n) * m2;
  const Integer dy = e1 * m2;
  return LocalCoverType{n,
                        q,
                        m1,
                        m2,
                        to_int64(dy, "d_y"),
                        to_int64(e1, "e1"),
                        to_int64(e2, "e2"),
                        n > 1};
}

LocalCoverType local_type(const LatticeSubgroup& gamma) {
  const CanonicalBasis basis = canonical_basis(gamma);
  // gcd(n', 0) = n'.
  const std::int64_t m1 = std::gcd(basis.n_prime, basis.q_prime);
  return LocalCoverType::from_parameters(basis.n_prime / m1, basis.q_prime / m1, m1,
                                         basis.m2);
}

bool contains(const LatticeSubgroup& gamma, const Vec2& v) {
  const CanonicalBasis b = canonical_basis(gamma);
  if (v[1] % b.m2 != 0) return false;
  const Integer t = v[1] / b.m2;
  const Integer rest = Integer(v[0]) - t * b.q_prime;
  return floor_mod(rest, b.n_prime) == 0;
}

std::int64_t enumeration_cap_from_env() {
  const char* raw = std::getenv("RAMCOV_MAX_ENUM");
  if (raw == nullptr) return kDefaultEnumerationCap;
  char* end = nullptr;
  const long long value = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 1) return kDefaultEnumerationCap;
  return value;
}

std::vector<LatticeSubgroup> enumerate_subgroups(std::int64_t max_index, std::int64_t cap) {
  if (max_index < 1) throw InvalidInput("max_index must be at least 1");
  if (max_index > cap)
    throw ResourceLimit("max_index " + std::to_string(max_index) +
                        " exceeds the enumeration cap " + std::to_string(cap));
  std::vector<LatticeSubgroup> out;
  for (std::int64_t k = 1; k <= max_index; ++k) {
    for (std::int64_t a = 1; a <= k; ++a) {
      if (k % a != 0) continue;
      const std::int64_t m = k / a;
      for (std::int64_t c = 0; c < a; ++c) out.push_back({{a, 0}, {c, m}});
    }
  }
  return out;
}

}  // namespace ramcov::local
