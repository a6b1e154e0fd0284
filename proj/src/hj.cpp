#include "ramcov/hj.hpp"

#include <numeric>
#include <string>

namespace ramcov::hj {

namespace {

void require_chain(std::span<const std::int64_t> b) {
  if (b.empty()) throw InvalidInput("Hirzebruch-Jung chain is empty");
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] < 2)
      throw InvalidInput("chain entry b[" + std::to_string(i) + "] = " +
                         std::to_string(b[i]) + " is below 2");
}

}  // namespace

SingularityType::SingularityType(std::int64_t n, std::int64_t q) : n_(n), q_(q) {
  if (n < 2)
    throw InvalidInput("A_{n,q} requires n >= 2, got n = " + std::to_string(n));
  if (q < 1 || q >= n)
    throw InvalidInput("A_{n,q} requires 1 <= q < n, got q = " + std::to_string(q) +
                       " with n = " + std::to_string(n));
  if (std::gcd(n, q) != 1)
    throw InvalidInput("A_{n,q} requires gcd(n, q) = 1, got gcd(" + std::to_string(n) +
                       ", " + std::to_string(q) + ") = " +
                       std::to_string(std::gcd(n, q)));
}

HJChain hj_expand(const SingularityType& sing) {
  // c_{k-2} = b_k c_{k-1} - c_k with 0 <= c_k < c_{k-1}, i.e. b_k is the
  // ceiling quotient. Terminates at c_lambda = 0.
  HJChain chain;
  std::int64_t prev = sing.n();
  std::int64_t cur = sing.q();
  while (cur != 0) {
    const std::int64_t b = (prev + cur - 1) / cur;
    chain.b.push_back(b);
    const std::int64_t next = b * cur - prev;
    prev = cur;
    cur = next;
  }
  return chain;
}

Rational hj_evaluate(std::span<const std::int64_t> b) {
  require_chain(b);
  Rational value(b.back());
  for (auto it = b.rbegin() + 1; it != b.rend(); ++it) {
    value = Rational(*it) - 1 / value;
  }
  value.canonicalize();
  return value;
}

Discrepancies discrepancies(const HJChain& chain) {
  require_chain(chain.b);
  const std::size_t len = chain.lambda();

  // Forward elimination on the symmetric tridiagonal system with diagonal
  // b_i and off-diagonals -1, then back substitution. Pivots stay >= 1
  // because every b_i >= 2.
  std::vector<Rational> pivot(len), rhs(len);
  for (std::size_t i = 0; i < len; ++i) {
    pivot[i] = chain.b[i];
    rhs[i] = 2 - chain.b[i];
    if (i > 0) {
      pivot[i] -= 1 / pivot[i - 1];
      rhs[i] += rhs[i - 1] / pivot[i - 1];
    }
  }

  Discrepancies out;
  out.a.resize(len);
  for (std::size_t k = len; k-- > 0;) {
    Rational v = rhs[k];
    if (k + 1 < len) v += out.a[k + 1];
    out.a[k] = v / pivot[k];
    out.a[k].canonicalize();
  }
  out.correction = 0;
  for (std::size_t i = 0; i < len; ++i) out.correction += out.a[i] * (chain.b[i] - 2);
  out.correction.canonicalize();
  return out;
}

ResolutionData resolve(const SingularityType& sing) {
  HJChain chain = hj_expand(sing);
  Discrepancies d = discrepancies(chain);
  return ResolutionData{sing, std::move(chain), std::move(d.a), std::move(d.correction)};
}

Rational recursion_residual(const HJChain& chain, std::span<const Rational> a,
                            std::size_t i) {
  const auto at = [&](std::size_t k) -> Rational {
    return k < a.size() ? a[k] : Rational(0);
  };
  const std::int64_t b = chain.b.at(i);
  Rational r = b * at(i) - at(i + 1) - (2 - b);
  if (i > 0) r -= at(i - 1);
  r.canonicalize();
  return r;
}

}  // namespace ramcov::hj
