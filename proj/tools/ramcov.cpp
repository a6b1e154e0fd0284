// ramcov - resolution data, local cover types, global invariants and bounds
// for finite covers of a fibred surface branched along a normal crossings
// divisor.
//
// Exit codes: 0 success, 1 semantic failure (validation violation, property
// counterexample), 2 usage or parse error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "ramcov/bounds.hpp"
#include "ramcov/cover_io.hpp"
#include "ramcov/golden.hpp"
#include "ramcov/hj.hpp"
#include "ramcov/lattice.hpp"
#include "ramcov/report.hpp"
#include "ramcov/verify.hpp"

using namespace ramcov;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

std::string pretty(const Rational& r) {
  return is_integral(r) ? Rational(r).get_num().get_str() : to_string(r);
}

#ifdef RAMCOV_MUTANT
// Off-by-one in the last chain entry for n > 10; the verify sweep must
// report it.
hj::HJChain mutant_expand(const hj::SingularityType& sing) {
  hj::HJChain chain = hj::hj_expand(sing);
  if (sing.n() > 10) ++chain.b.back();
  return chain;
}
constexpr verify::HjImplementation kImplementation{&mutant_expand, &hj::discrepancies};
#else
constexpr verify::HjImplementation kImplementation{};
#endif

int cmd_hj(std::int64_t n, std::int64_t q) {
  const hj::ResolutionData r = hj::resolve(hj::SingularityType(n, q));
  std::cout << "A_{" << n << "," << q << "}\n";
  std::cout << "chain [";
  for (std::size_t i = 0; i < r.chain.b.size(); ++i) std::cout << (i ? ", " : "") << r.chain.b[i];
  std::cout << "]\nlambda " << r.chain.lambda() << "\ndiscrepancies [";
  for (std::size_t i = 0; i < r.a.size(); ++i) std::cout << (i ? ", " : "") << pretty(r.a[i]);
  std::cout << "]\ncorrection " << pretty(r.correction) << "\n";
  return kOk;
}

int cmd_local(const std::vector<std::int64_t>& g) {
  const local::LatticeSubgroup gamma{{g[0], g[1]}, {g[2], g[3]}};
  const local::CanonicalBasis basis = local::canonical_basis(gamma);
  const local::LocalCoverType t = local::local_type(gamma);
  std::cout << "basis (" << basis.n_prime << ",0), (" << basis.q_prime << "," << basis.m2
            << ")\n";
  std::cout << "n=" << t.n << " q=" << t.q << " m1=" << t.m1 << " m2=" << t.m2
            << " d_y=" << t.d_y << " e1=" << t.e1 << " e2=" << t.e2 << "\n";
  if (t.singular)
    std::cout << "singular A_{" << t.n << "," << t.q << "}\n";
  else
    std::cout << "smooth\n";
  return kOk;
}

int cmd_invariants(const std::string& path, bool strict, const std::vector<std::int64_t>& ev,
                   bool as_json) {
  const io::CoverDocument doc = io::load_document(path);
  std::optional<bounds::EvInputs> ev_inputs;
  if (!ev.empty()) ev_inputs = bounds::EvInputs{ev[0], ev[1], ev[2], ev[3], ev[4]};
  const report::ReportDocument rep = report::build_report(doc, strict, ev_inputs);
  if (as_json)
    std::cout << report::to_json(rep).dump(2) << "\n";
  else
    std::cout << report::render_text(rep);
  if (!rep.validation.ok()) return kFailure;
  if (rep.certificate && !rep.certificate->satisfied) return kFailure;
  return kOk;
}

int cmd_verify(std::int64_t max_n, std::int64_t max_index, unsigned workers) {
  verify::Summary summary = verify::verify_hj(max_n, workers, kImplementation);
  summary.append(
      verify::verify_lattices(max_index, local::enumeration_cap_from_env(), kImplementation));
  std::size_t failed = 0;
  for (const auto& r : summary.results) {
    if (r.ok()) {
      std::cout << "PASS " << r.name << " (" << r.checked << " checked)\n";
    } else {
      ++failed;
      std::cout << "FAIL " << r.name << " counterexample: " << *r.counterexample << "\n";
    }
  }
  if (failed == 0) {
    std::cout << "all " << summary.results.size() << " properties hold (max-n " << max_n
              << ", max-index " << max_index << ")\n";
    return kOk;
  }
  std::cout << failed << " properties violated\n";
  return kFailure;
}

int cmd_bs_bound(std::int64_t d, std::int64_t nB, const std::string& h) {
  const bounds::LogBound b = bounds::bs_height_log(d, nB, parse_rational(h));
  std::cout << "log bound " << b.decimal << "  [floating point, " << b.precision_bits
            << "-bit precision]\n";
  return kOk;
}

int cmd_kummer(std::int64_t a, std::int64_t b) {
  std::cout << io::to_json(golden::kummer_cover(a, b)).dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic quotient singularities, branched-cover invariants and bounds", "ramcov"};
  app.require_subcommand(1);
  app.set_version_flag("--version", report::kToolVersion);

  std::int64_t n = 0, q = 0;
  auto* hj_cmd = app.add_subcommand("hj", "Resolve the cyclic quotient singularity A_{n,q}");
  hj_cmd->add_option("n", n, "order of the cyclic group")->required();
  hj_cmd->add_option("q", q, "weight, 1 <= q < n, gcd(n, q) = 1")->required();

  std::vector<std::int64_t> generators;
  auto* local_cmd =
      app.add_subcommand("local", "Local cover type of the subgroup <(g1x,g1y),(g2x,g2y)>");
  local_cmd->add_option("generators", generators, "g1x g1y g2x g2y")->required()->expected(4);

  std::string path;
  bool strict = false, as_json = false;
  std::vector<std::int64_t> ev;
  auto* inv_cmd = app.add_subcommand("invariants", "Validate a cover file and compute invariants");
  inv_cmd->add_option("file", path, "cover description (JSON)")->required();
  inv_cmd->add_flag("--strict", strict, "also check per-sheet incidence (V4)");
  inv_cmd->add_option("--ev", ev, "Esnault-Viehweg inputs: gF Dhor.F gC #D_C #S")->expected(5);
  inv_cmd->add_flag("--json", as_json, "machine-readable report");

  std::int64_t max_n = 500, max_index = 60;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  auto* verify_cmd = app.add_subcommand("verify", "Run the exhaustive property sweeps");
  verify_cmd->add_option("--max-n", max_n, "largest n for A_{n,q}")->capture_default_str();
  verify_cmd->add_option("--max-index", max_index, "largest sublattice index")
      ->capture_default_str();
  verify_cmd->add_option("--workers", workers, "threads for the A_{n,q} sweep");

  std::int64_t d = 0, nB = 0;
  std::string h = "0";
  auto* bs_cmd = app.add_subcommand("bs-bound", "Log of the Bilu-Strambi height bound");
  bs_cmd->add_option("d", d, "cover degree, >= 2")->required();
  bs_cmd->add_option("nB", nB, "number of branch points, >= 1")->required();
  bs_cmd->add_option("height", h, "max logarithmic height of the branch points, p/q")
      ->capture_default_str();

  std::int64_t ka = 0, kb = 0;
  auto* kummer_cmd =
      app.add_subcommand("kummer", "Print the cover file of (u,v) -> (u^a, v^b) on P1 x P1");
  kummer_cmd->add_option("a", ka)->required();
  kummer_cmd->add_option("b", kb)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*hj_cmd) return cmd_hj(n, q);
    if (*local_cmd) return cmd_local(generators);
    if (*inv_cmd) return cmd_invariants(path, strict, ev, as_json);
    if (*verify_cmd) return cmd_verify(max_n, max_index, workers);
    if (*bs_cmd) return cmd_bs_bound(d, nB, h);
    if (*kummer_cmd) return cmd_kummer(ka, kb);
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
