#include "ramcov/verify.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "ramcov/lattice.hpp"

namespace ramcov::verify {

namespace {

// Keyed by property name; keeps the earliest counterexample by sweep key.
class Collector {
 public:
  explicit Collector(std::vector<std::string> names) : names_(std::move(names)) {
    for (const auto& n : names_) slots_[n];
  }

  void check(const std::string& name, bool holds, std::int64_t key1, std::int64_t key2,
             const std::string& detail) {
    Slot& s = slots_.at(name);
    ++s.checked;
    if (holds) return;
    const std::pair<std::int64_t, std::int64_t> key{key1, key2};
    if (!s.first_key || key < *s.first_key) {
      s.first_key = key;
      s.detail = detail;
    }
  }

  void merge(const Collector& other) {
    for (const auto& [name, o] : other.slots_) {
      Slot& s = slots_.at(name);
      s.checked += o.checked;
      if (o.first_key && (!s.first_key || *o.first_key < *s.first_key)) {
        s.first_key = o.first_key;
        s.detail = o.detail;
      }
    }
  }

  Summary summary() const {
    Summary out;
    for (const auto& n : names_) {
      const Slot& s = slots_.at(n);
      PropertyResult r{n, s.checked, std::nullopt};
      if (s.first_key) r.counterexample = s.detail;
      out.results.push_back(std::move(r));
    }
    return out;
  }

 private:
  struct Slot {
    std::uint64_t checked = 0;
    std::optional<std::pair<std::int64_t, std::int64_t>> first_key;
    std::string detail;
  };
  std::vector<std::string> names_;
  std::map<std::string, Slot> slots_;
};

const std::vector<std::string> kHjProperties = {
    "hj.reconstruction",      "hj.chain_length",  "hj.entry_bound",
    "hj.discrepancy_range",   "hj.correction_range", "hj.entry_sum_bound",
    "hj.du_val",              "hj.recursion_residual",
};

std::string join(const std::vector<std::int64_t>& b) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << b[i];
  out << "]";
  return out.str();
}

void check_type(Collector& c, std::int64_t n, std::int64_t q, const HjImplementation& impl) {
  const hj::SingularityType sing(n, q);
  const hj::HJChain chain = impl.expand(sing);
  std::ostringstream tag;
  tag << "A_{" << n << "," << q << "} chain " << join(chain.b);
  const std::string where = tag.str();

  const bool entries_ok =
      !chain.b.empty() && std::all_of(chain.b.begin(), chain.b.end(),
                                      [&](std::int64_t b) { return b >= 2 && b <= n; });
  c.check("hj.entry_bound", entries_ok, n, q, where + ": entry outside [2, n]");
  c.check("hj.chain_length", chain.lambda() >= 1 && static_cast<std::int64_t>(chain.lambda()) <= n,
          n, q, where + ": length outside [1, n]");
  if (!entries_ok) return;

  const Rational value = hj::hj_evaluate(chain);
  c.check("hj.reconstruction", value == ratio(n, q), n, q,
          where + " evaluates to " + to_string(value));

  const std::int64_t excess =
      std::accumulate(chain.b.begin(), chain.b.end(), std::int64_t{0}) -
      2 * static_cast<std::int64_t>(chain.lambda());
  c.check("hj.entry_sum_bound", excess <= n - q - 1, n, q,
          where + ": sum(b_i - 2) = " + std::to_string(excess) + " > n - q - 1");

  const hj::Discrepancies d = impl.solve(chain);
  bool residual_zero = d.a.size() == chain.lambda();
  for (std::size_t i = 0; residual_zero && i < chain.lambda(); ++i)
    residual_zero = hj::recursion_residual(chain, d.a, i) == 0;
  c.check("hj.recursion_residual", residual_zero, n, q, where + ": nonzero residual");

  const bool a_in_range = std::all_of(d.a.begin(), d.a.end(),
                                      [](const Rational& a) { return a > -1 && a <= 0; });
  c.check("hj.discrepancy_range", a_in_range, n, q, where + ": some a_i outside (-1, 0]");
  c.check("hj.correction_range", d.correction > -n && d.correction <= 2, n, q,
          where + ": correction " + to_string(d.correction) + " outside (-n, 2]");

  const bool du_val = q == n - 1;
  const bool all_two = std::all_of(chain.b.begin(), chain.b.end(), [](auto b) { return b == 2; });
  const bool all_zero = std::all_of(d.a.begin(), d.a.end(), [](const Rational& a) { return a == 0; });
  const bool flat = d.correction == 0 && static_cast<std::int64_t>(chain.lambda()) == n - 1;
  c.check("hj.du_val", du_val == all_two && all_two == all_zero && all_zero == flat, n, q,
          where + ": du Val characterisation fails");
}

}  // namespace

bool Summary::ok() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.ok(); });
}

void Summary::append(const Summary& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
}

std::int64_t divisor_sum(std::int64_t k) {
  std::int64_t s = 0;
  for (std::int64_t t = 1; t <= k; ++t)
    if (k % t == 0) s += t;
  return s;
}

Summary verify_hj(std::int64_t max_n, unsigned workers, HjImplementation impl) {
  if (max_n < 2) throw InvalidInput("--max-n must be at least 2");
  workers = std::max(1u, workers);
  std::vector<std::future<Collector>> jobs;
  for (unsigned w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [=] {
      Collector c(kHjProperties);
      for (std::int64_t n = 2 + w; n <= max_n; n += workers)
        for (std::int64_t q = 1; q < n; ++q)
          if (std::gcd(n, q) == 1) check_type(c, n, q, impl);
      return c;
    }));
  }
  Collector all(kHjProperties);
  for (auto& job : jobs) all.merge(job.get());
  return all.summary();
}

Summary verify_lattices(std::int64_t max_index, std::int64_t cap, HjImplementation impl) {
  const auto subgroups = local::enumerate_subgroups(max_index, cap);
  Collector c({"lattice.count_by_index", "lattice.hermite_fixed_point", "lattice.index_identity",
               "lattice.ramification_split", "lattice.coprime", "lattice.axis_swap",
               "lattice.chain_reversal", "lattice.smoothness"});

  std::map<std::int64_t, std::int64_t> per_index;
  std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> seen;
  for (std::size_t k = 0; k < subgroups.size(); ++k) {
    const auto& g = subgroups[k];
    const auto key = static_cast<std::int64_t>(k);
    std::ostringstream tag;
    tag << "Gamma = <(" << g.g1[0] << "," << g.g1[1] << "),(" << g.g2[0] << "," << g.g2[1]
        << ")>";
    const std::string where = tag.str();

    const std::int64_t index = std::llabs(g.determinant());
    ++per_index[index];
    const auto basis = local::canonical_basis(g);
    c.check("lattice.hermite_fixed_point",
            basis.n_prime == g.g1[0] && basis.q_prime == g.g2[0] && basis.m2 == g.g2[1] &&
                seen.insert({basis.n_prime, basis.q_prime, basis.m2}).second,
            key, 0, where + ": not a distinct Hermite representative");

    const auto t = local::local_type(g);
    c.check("lattice.index_identity", t.d_y == t.n * t.m1 * t.m2 && t.d_y == index, key, 0,
            where + ": d_y = " + std::to_string(t.d_y) + ", |det| = " + std::to_string(index));
    c.check("lattice.ramification_split", t.e1 == t.n * t.m1 && t.e2 == t.n * t.m2 && t.m1 > 0 &&
                                              t.m2 > 0,
            key, 0, where + ": e1/e2 do not split as n*m1, n*m2");
    c.check("lattice.coprime", t.n == 1 || std::gcd(t.n, t.q) == 1, key, 0,
            where + ": gcd(n, q) != 1");

    const auto s = local::local_type(g.swapped());
    const bool dual = s.n == t.n && s.m1 == t.m2 && s.m2 == t.m1 &&
                      (t.n == 1 || (static_cast<__int128>(t.q) * s.q) % t.n == 1);
    c.check("lattice.axis_swap", dual, key, 0,
            where + ": swapped type (n,q,m1,m2) = (" + std::to_string(s.n) + "," +
                std::to_string(s.q) + "," + std::to_string(s.m1) + "," + std::to_string(s.m2) +
                ")");

    if (t.singular) {
      auto forward = impl.expand({t.n, t.q}).b;
      const auto backward = impl.expand({s.n, s.q}).b;
      std::reverse(forward.begin(), forward.end());
      c.check("lattice.chain_reversal", forward == backward, key, 0,
              where + ": chain of the swapped type is not the reversed chain");
    }

    // Brute force: Gamma is a product aZ x bZ iff its axis intersections
    // already have the full index.
    std::int64_t a = 1, b = 1;
    while (!local::contains(g, {a, 0})) ++a;
    while (!local::contains(g, {0, b})) ++b;
    c.check("lattice.smoothness", (t.n == 1) == (a * b == index), key, 0,
            where + ": smoothness does not match the rectangular criterion");
  }
  for (std::int64_t k = 1; k <= max_index; ++k)
    c.check("lattice.count_by_index", per_index[k] == divisor_sum(k), k, 0,
            "index " + std::to_string(k) + ": " + std::to_string(per_index[k]) +
                " subgroups, expected sigma = " + std::to_string(divisor_sum(k)));
  return c.summary();
}

}  // namespace ramcov::verify
