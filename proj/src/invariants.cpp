#include "ramcov/invariants.hpp"

#include "ramcov/hj.hpp"
#include "resolved_points.hpp"

namespace ramcov::inv {

using model::BaseGeometry;
using model::CoverDescription;

std::vector<ComponentValue> branch_divisor(const BaseGeometry& base,
                                           const CoverDescription& cover) {
  std::vector<ComponentValue> out;
  for (const auto& c : base.components) {
    Integer mult = 0;
    for (const auto& s : cover.ramification.at(c.id)) mult += Integer(s.e - 1) * s.f;
    out.push_back({c.id, mult});
  }
  return out;
}

SelfIntersection r_self_intersection(const BaseGeometry& base, const CoverDescription& cover) {
  SelfIntersection out;
  // (D_ij, D_ij) = f_ij / e_ij (D_i, D_i)
  for (const auto& c : base.components)
    out.diagonal += detail::diagonal_factor(cover.ramification.at(c.id)) * c.self_int;
  // (D_ij(y), D_i'j'(y))_y = 1/n_y at each point above a crossing.
  for (const auto& p : detail::resolved_points(base, cover))
    out.cross += 2 * ratio(Integer(p.e_first - 1) * (p.e_second - 1), p.type.n);
  out.diagonal.canonicalize();
  out.cross.canonicalize();
  return out;
}

K2Chain k2_chain(const BaseGeometry& base, const CoverDescription& cover) {
  const auto B = branch_divisor(base, cover);
  Integer KX_dot_B = 0;
  for (std::size_t i = 0; i < B.size(); ++i) KX_dot_B += B[i].value * base.components[i].KX_dot;

  K2Chain out;
  out.KY_sq = Rational(Integer(cover.degree) * base.KX_sq + 2 * KX_dot_B) +
              r_self_intersection(base, cover).total();
  for (const auto& p : detail::resolved_points(base, cover))
    if (p.type.singular) out.correction_total += hj::resolve({p.type.n, p.type.q}).correction;
  out.KY_sq.canonicalize();
  out.correction_total.canonicalize();
  out.KYprime_sq = out.KY_sq + out.correction_total;
  out.KYprime_sq.canonicalize();
  return out;
}

EulerChain euler_chain(const BaseGeometry& base, const CoverDescription& cover) {
  const model::EulerData e = model::derived_euler_data(base);
  EulerChain out;
  out.euler_Y = Integer(cover.degree) * e.euler_U;
  for (std::size_t i = 0; i < base.components.size(); ++i) {
    Integer d_i = 0;
    for (const auto& s : cover.ramification.at(base.components[i].id)) d_i += s.f;
    out.euler_Y += d_i * e.open_euler[i];
  }
  out.exceptional_s = 0;
  out.preimage_points = 0;
  for (const auto& p : detail::resolved_points(base, cover)) {
    ++out.preimage_points;
    if (p.type.singular)
      out.exceptional_s += static_cast<long>(hj::hj_expand({p.type.n, p.type.q}).lambda());
  }
  out.euler_Y += out.preimage_points;
  out.euler_Yprime = out.euler_Y + out.exceptional_s;
  return out;
}

namespace {

// deg det R f_* O_{Y'} = (K_{Y'}^2 + e_c(Y'))/12 + (1 - g(C))/2 * (d (K_X.F) + (B.F)).
Rational assemble_deg_det(const BaseGeometry& base, std::int64_t degree,
                          const Rational& KYprime_sq, const Integer& euler_Yprime,
                          const Integer& B_dot_F) {
  Rational out = (KYprime_sq + Rational(euler_Yprime)) / 12 +
                 ratio(Integer(1 - base.genus_C) *
                              (Integer(degree) * base.KX_dot_F + B_dot_F),
                          2);
  out.canonicalize();
  return out;
}

Integer b_dot_f(const BaseGeometry& base, const std::vector<ComponentValue>& B) {
  Integer out = 0;
  for (std::size_t i = 0; i < B.size(); ++i) out += B[i].value * base.components[i].fiber_deg;
  return out;
}

}  // namespace

Rational deg_det(const BaseGeometry& base, const CoverDescription& cover) {
  const K2Chain k2 = k2_chain(base, cover);
  const EulerChain eu = euler_chain(base, cover);
  return assemble_deg_det(base, cover.degree, k2.KYprime_sq, eu.euler_Yprime,
                          b_dot_f(base, branch_divisor(base, cover)));
}

InvariantReport compute_invariants(const BaseGeometry& base, const CoverDescription& cover) {
  if (!model::validate(base, cover).ok())
    throw InvalidInput("cover description does not validate");

  InvariantReport r;
  r.B_mult = branch_divisor(base, cover);
  r.KX_dot_B = 0;
  for (std::size_t i = 0; i < r.B_mult.size(); ++i)
    r.KX_dot_B += r.B_mult[i].value * base.components[i].KX_dot;
  r.B_dot_F = b_dot_f(base, r.B_mult);

  const SelfIntersection rr = r_self_intersection(base, cover);
  r.RR_diagonal = rr.diagonal;
  r.RR_cross = rr.cross;
  r.RR = rr.total();

  const K2Chain k2 = k2_chain(base, cover);
  r.KY_sq = k2.KY_sq;
  r.correction_total = k2.correction_total;
  r.KYprime_sq = k2.KYprime_sq;

  const EulerChain eu = euler_chain(base, cover);
  r.euler_U = model::derived_euler_data(base).euler_U;
  r.euler_Y = eu.euler_Y;
  r.preimage_points = eu.preimage_points;
  r.exceptional_s = eu.exceptional_s;
  r.euler_Yprime = eu.euler_Yprime;

  r.chi = (r.KYprime_sq + Rational(r.euler_Yprime)) / 12;
  r.chi.canonicalize();
  r.deg_det = assemble_deg_det(base, cover.degree, r.KYprime_sq, r.euler_Yprime, r.B_dot_F);
  r.chi_integral = is_integral(r.chi);
  r.deg_det_integral = is_integral(r.deg_det);
  return r;
}

}  // namespace ramcov::inv
