#include "ramcov/bounds.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cstdlib>
#include <map>

#include "ramcov/hj.hpp"
#include "resolved_points.hpp"

namespace ramcov::bounds {

using model::BaseGeometry;
using model::CoverDescription;

bool BoundTerm::holds() const {
  const bool above = lower_strict ? value > lower : value >= lower;
  const bool below = upper_strict ? value < upper : value <= upper;
  return above && below;
}

Rational theorem1_constant(const BaseGeometry& base) {
  const model::EulerData e = model::derived_euler_data(base);
  const Integer crossings = static_cast<long>(base.crossings.size());

  Integer surface = abs(Integer(base.KX_sq));
  for (const auto& c : base.components)
    surface += 2 * abs(Integer(c.KX_dot)) + abs(Integer(c.self_int));
  // cross-(R,R) 2d, correction 2d, exceptional curves d, preimages d per crossing
  surface += 6 * crossings;
  surface += abs(Integer(e.euler_U));
  for (auto open : e.open_euler) surface += abs(Integer(open));

  Integer fibre = abs(Integer(base.KX_dot_F));
  for (const auto& c : base.components) fibre += c.fiber_deg;

  Rational out = ratio(surface, 12) + ratio(abs(Integer(1 - base.genus_C)) * fibre, 2);
  out.canonicalize();
  return out;
}

BoundCertificate theorem1_certificate(const BaseGeometry& base, const CoverDescription& cover,
                                      const inv::InvariantReport& report) {
  BoundCertificate cert;
  cert.degree = cover.degree;
  cert.deg_det = report.deg_det;
  cert.theorem1_c = theorem1_constant(base);
  const Rational d(cover.degree);

  for (std::size_t i = 0; i < base.components.size(); ++i) {
    const auto& c = base.components[i];
    cert.terms.push_back({"B_mult[" + c.id + "]", Rational(report.B_mult[i].value), 0, false,
                          d, true, 1});
    cert.terms.push_back({"RR_diagonal_factor[" + c.id + "]",
                          inv::detail::diagonal_factor(cover.ramification.at(c.id)), 0, false, d,
                          true, 1});
  }

  struct PerCrossing {
    Rational cross = 0;
    Rational correction = 0;
    Integer exceptional = 0;
    Integer points = 0;
  };
  std::map<std::int64_t, PerCrossing> per;
  for (const auto& x : base.crossings) per[x.index];
  for (const auto& p : inv::detail::resolved_points(base, cover)) {
    PerCrossing& acc = per[p.crossing];
    acc.cross += 2 * ratio(Integer(p.e_first - 1) * (p.e_second - 1), Integer(p.type.n));
    ++acc.points;
    if (p.type.singular) {
      const hj::ResolutionData res = hj::resolve({p.type.n, p.type.q});
      acc.correction += res.correction;
      acc.exceptional += static_cast<long>(res.chain.lambda());
    }
  }
  for (auto& [index, acc] : per) {
    const std::string tag = "[crossing " + std::to_string(index) + "]";
    acc.cross.canonicalize();
    acc.correction.canonicalize();
    cert.terms.push_back({"RR_cross" + tag, acc.cross, 0, false, 2 * d, false, 2});
    cert.terms.push_back({"correction" + tag, acc.correction, -d, true,
                          Rational(2 * acc.points), false, 2});
    cert.terms.push_back({"exceptional_curves" + tag, Rational(acc.exceptional), 0, false, d,
                          false, 1});
    cert.terms.push_back({"preimage_points" + tag, Rational(acc.points), 0, false, d, false, 1});
  }

  const Rational cd = cert.theorem1_c * d;
  cert.terms.push_back({"deg_det", report.deg_det, -cd, false, cd, false, cert.theorem1_c});

  cert.satisfied = std::all_of(cert.terms.begin(), cert.terms.end(),
                               [](const BoundTerm& t) { return t.holds(); });
  return cert;
}

BoundCertificate theorem1_certificate(const BaseGeometry& base, const CoverDescription& cover) {
  return theorem1_certificate(base, cover, inv::compute_invariants(base, cover));
}

Rational ev_bound(const EvInputs& in, std::int64_t d) {
  if (in.gF < 0 || in.Dhor_dot_F < 0 || in.gC < 0 || in.nDC < 0 || in.nS < 0)
    throw InvalidInput("Esnault-Viehweg bound arguments must be non-negative");
  if (d < 1) throw InvalidInput("cover degree must be positive");
  const Rational fibre = Rational(in.gF) + ratio(in.Dhor_dot_F, 2);
  const Rational base = Rational(in.gC + 2 * Integer(in.nDC)) + ratio(1 + Integer(in.nS), 2);
  Rational out = fibre * base * d;
  out.canonicalize();
  return out;
}

namespace {

class Mpfr {
 public:
  explicit Mpfr(int bits) { mpfr_init2(v_, bits); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;

  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

}  // namespace

LogBound bs_height_log(std::int64_t d, std::int64_t nB, const Rational& h) {
  if (d < 2) throw InvalidInput("cover degree d must be at least 2");
  if (nB < 1) throw InvalidInput("#B must be at least 1");
  if (h < 0) throw InvalidInput("height h must be non-negative");

  const Integer dz(d);
  const Integer exponent = 5 * dz * dz * nB + 12 * dz;
  const Integer base = dz * dz * dz * nB;
  const Rational h1 = h + 1;

  Mpfr log_h(kLogPrecisionBits), log_base(kLogPrecisionBits), total(kLogPrecisionBits);
  mpfr_set_q(log_h.get(), h1.get_mpq_t(), MPFR_RNDN);
  mpfr_log(log_h.get(), log_h.get(), MPFR_RNDN);
  mpfr_set_z(log_base.get(), base.get_mpz_t(), MPFR_RNDN);
  mpfr_log(log_base.get(), log_base.get(), MPFR_RNDN);
  mpfr_mul_z(log_base.get(), log_base.get(), exponent.get_mpz_t(), MPFR_RNDN);
  mpfr_add(total.get(), log_h.get(), log_base.get(), MPFR_RNDN);

  LogBound out;
  out.precision_bits = kLogPrecisionBits;
  out.value = mpfr_get_d(total.get(), MPFR_RNDN);
  char* text = nullptr;
  mpfr_asprintf(&text, "%.40Rg", total.get());
  out.decimal = text;
  mpfr_free_str(text);
  return out;
}

}  // namespace ramcov::bounds
