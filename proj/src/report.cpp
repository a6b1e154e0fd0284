#include "ramcov/report.hpp"

#include <sstream>

namespace ramcov::report {

using nlohmann::json;

namespace {

std::string pretty(const Rational& r) {
  return is_integral(r) ? Rational(r).get_num().get_str() : ramcov::to_string(r);
}

json rational_json(const Rational& r) { return ramcov::to_string(r); }
json integer_json(const Integer& z) { return z.get_str(); }

Rational rational_from(const json& j, const std::string& path) {
  if (!j.is_string()) throw io::ParseError(path + ": expected a \"p/q\" string");
  const auto text = j.get<std::string>();
  if (text.find('/') == std::string::npos)
    throw io::ParseError(path + ": rational must be rendered as \"p/q\"");
  try {
    return parse_rational(text);
  } catch (const InvalidInput& e) {
    throw io::ParseError(path + ": " + e.what());
  }
}

Integer integer_from(const json& j, const std::string& path) {
  if (!j.is_string()) throw io::ParseError(path + ": expected a decimal string");
  const Rational r = rational_from(json(j.get<std::string>() + "/1"), path);
  if (!is_integral(r)) throw io::ParseError(path + ": expected an integer");
  return r.get_num();
}

const json& at(const json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key))
    throw io::ParseError(path + ": missing key \"" + key + "\"");
  return j[key];
}

bool boolean(const json& j, const std::string& path) {
  if (!j.is_boolean()) throw io::ParseError(path + ": expected a boolean");
  return j.get<bool>();
}

std::int64_t int64(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw io::ParseError(path + ": expected an integer");
  return j.get<std::int64_t>();
}

model::Rule rule_from(const std::string& code) {
  using model::Rule;
  for (Rule r : {Rule::Structure, Rule::SheetSum, Rule::LocalDegreeSum, Rule::RamificationMatch,
                 Rule::SheetIncidence, Rule::LocalType})
    if (model::rule_code(r) == code) return r;
  throw io::ParseError("validation: unknown rule code \"" + code + "\"");
}

json invariants_json(const inv::InvariantReport& r) {
  json B = json::array();
  for (const auto& b : r.B_mult) B.push_back({{"id", b.id}, {"value", integer_json(b.value)}});
  return json{{"B_mult", B},
              {"KX_dot_B", integer_json(r.KX_dot_B)},
              {"B_dot_F", integer_json(r.B_dot_F)},
              {"RR_diagonal", rational_json(r.RR_diagonal)},
              {"RR_cross", rational_json(r.RR_cross)},
              {"RR", rational_json(r.RR)},
              {"KY_sq", rational_json(r.KY_sq)},
              {"correction_total", rational_json(r.correction_total)},
              {"KYprime_sq", rational_json(r.KYprime_sq)},
              {"euler_U", integer_json(r.euler_U)},
              {"euler_Y", integer_json(r.euler_Y)},
              {"preimage_points", integer_json(r.preimage_points)},
              {"exceptional_s", integer_json(r.exceptional_s)},
              {"euler_Yprime", integer_json(r.euler_Yprime)},
              {"chi", rational_json(r.chi)},
              {"deg_det", rational_json(r.deg_det)}};
}

inv::InvariantReport invariants_from(const json& j, const json& consistency) {
  const std::string p = "invariants";
  inv::InvariantReport r;
  const json& B = at(j, "B_mult", p);
  if (!B.is_array()) throw io::ParseError(p + ".B_mult: expected an array");
  for (const auto& b : B) {
    const json& id = at(b, "id", p + ".B_mult");
    if (!id.is_string()) throw io::ParseError(p + ".B_mult: id must be a string");
    r.B_mult.push_back({id.get<std::string>(), integer_from(at(b, "value", p), p + ".B_mult")});
  }
  const auto I = [&](const char* k) { return integer_from(at(j, k, p), p + "." + k); };
  const auto Q = [&](const char* k) { return rational_from(at(j, k, p), p + "." + k); };
  r.KX_dot_B = I("KX_dot_B");
  r.B_dot_F = I("B_dot_F");
  r.RR_diagonal = Q("RR_diagonal");
  r.RR_cross = Q("RR_cross");
  r.RR = Q("RR");
  r.KY_sq = Q("KY_sq");
  r.correction_total = Q("correction_total");
  r.KYprime_sq = Q("KYprime_sq");
  r.euler_U = I("euler_U");
  r.euler_Y = I("euler_Y");
  r.preimage_points = I("preimage_points");
  r.exceptional_s = I("exceptional_s");
  r.euler_Yprime = I("euler_Yprime");
  r.chi = Q("chi");
  r.deg_det = Q("deg_det");
  r.chi_integral = boolean(at(consistency, "chi_integral", "consistency"), "consistency");
  r.deg_det_integral = boolean(at(consistency, "deg_det_integral", "consistency"), "consistency");
  return r;
}

json certificate_json(const bounds::BoundCertificate& c) {
  json terms = json::array();
  for (const auto& t : c.terms)
    terms.push_back({{"name", t.name},
                     {"value", rational_json(t.value)},
                     {"lower", rational_json(t.lower)},
                     {"lower_strict", t.lower_strict},
                     {"upper", rational_json(t.upper)},
                     {"upper_strict", t.upper_strict},
                     {"coefficient", rational_json(t.coefficient)},
                     {"holds", t.holds()}});
  json out{{"terms", terms},
           {"theorem1_c", rational_json(c.theorem1_c)},
           {"deg_det", rational_json(c.deg_det)},
           {"degree", c.degree},
           {"satisfied", c.satisfied}};
  if (c.ev_bound) out["ev_bound"] = rational_json(*c.ev_bound);
  if (c.ev_satisfied) out["ev_satisfied"] = *c.ev_satisfied;
  return out;
}

bounds::BoundCertificate certificate_from(const json& j) {
  const std::string p = "certificate";
  bounds::BoundCertificate c;
  const json& terms = at(j, "terms", p);
  if (!terms.is_array()) throw io::ParseError(p + ".terms: expected an array");
  for (const auto& t : terms) {
    const std::string q = p + ".terms";
    const json& name = at(t, "name", q);
    if (!name.is_string()) throw io::ParseError(q + ": name must be a string");
    bounds::BoundTerm term{name.get<std::string>(),
                           rational_from(at(t, "value", q), q),
                           rational_from(at(t, "lower", q), q),
                           boolean(at(t, "lower_strict", q), q),
                           rational_from(at(t, "upper", q), q),
                           boolean(at(t, "upper_strict", q), q),
                           rational_from(at(t, "coefficient", q), q)};
    if (boolean(at(t, "holds", q), q) != term.holds())
      throw io::ParseError(q + ": holds flag disagrees with the recorded bounds");
    c.terms.push_back(std::move(term));
  }
  c.theorem1_c = rational_from(at(j, "theorem1_c", p), p);
  c.deg_det = rational_from(at(j, "deg_det", p), p);
  c.degree = int64(at(j, "degree", p), p);
  c.satisfied = boolean(at(j, "satisfied", p), p);
  if (j.contains("ev_bound")) c.ev_bound = rational_from(j["ev_bound"], p + ".ev_bound");
  if (j.contains("ev_satisfied")) c.ev_satisfied = boolean(j["ev_satisfied"], p);
  return c;
}

const char* const kEvHypotheses =
    "h semistable with connected fibres; D = D^hor + h^-1(D_C) with D^hor etale over C";

}  // namespace

ReportDocument build_report(const io::CoverDocument& input, bool strict,
                            const std::optional<bounds::EvInputs>& ev) {
  ReportDocument out;
  out.input = input;
  out.strict = strict;
  out.ev = ev;
  out.validation = model::validate(input.base, input.cover, {strict});
  if (!out.validation.ok()) return out;

  out.invariants = inv::compute_invariants(input.base, input.cover);
  out.certificate = bounds::theorem1_certificate(input.base, input.cover, *out.invariants);
  if (ev) {
    out.certificate->ev_bound = bounds::ev_bound(*ev, input.cover.degree);
    out.certificate->ev_satisfied = out.invariants->deg_det <= *out.certificate->ev_bound;
  }
  return out;
}

json to_json(const ReportDocument& r) {
  json violations = json::array();
  for (const auto& v : r.validation.violations)
    violations.push_back(
        {{"rule", model::rule_code(v.rule)}, {"where", v.where}, {"message", v.message}});

  json out{{"tool_version", r.tool_version},
           {"strict", r.strict},
           {"input", io::to_json(r.input)},
           {"validation", {{"ok", r.validation.ok()}, {"violations", violations}}}};
  if (r.invariants) {
    out["invariants"] = invariants_json(*r.invariants);
    out["consistency"] = {{"chi_integral", r.invariants->chi_integral},
                          {"deg_det_integral", r.invariants->deg_det_integral}};
  }
  if (r.certificate) out["certificate"] = certificate_json(*r.certificate);
  if (r.ev)
    out["ev_inputs"] = {{"gF", r.ev->gF},   {"Dhor_dot_F", r.ev->Dhor_dot_F},
                        {"gC", r.ev->gC},   {"nDC", r.ev->nDC},
                        {"nS", r.ev->nS},   {"hypotheses_asserted", kEvHypotheses}};
  return out;
}

ReportDocument report_from_json(const json& j) {
  ReportDocument r;
  const json& version = at(j, "tool_version", "report");
  if (!version.is_string()) throw io::ParseError("report.tool_version: expected a string");
  r.tool_version = version.get<std::string>();
  r.strict = boolean(at(j, "strict", "report"), "report.strict");
  r.input = io::parse_document(at(j, "input", "report"));

  const json& validation = at(j, "validation", "report");
  const json& violations = at(validation, "violations", "validation");
  if (!violations.is_array()) throw io::ParseError("validation.violations: expected an array");
  for (const auto& v : violations) {
    const json& rule = at(v, "rule", "violation");
    const json& where = at(v, "where", "violation");
    const json& message = at(v, "message", "violation");
    if (!rule.is_string() || !where.is_array() || !message.is_string())
      throw io::ParseError("validation.violations: malformed entry");
    r.validation.violations.push_back({rule_from(rule.get<std::string>()),
                                       where.get<std::vector<std::string>>(),
                                       message.get<std::string>()});
  }
  if (boolean(at(validation, "ok", "validation"), "validation.ok") != r.validation.ok())
    throw io::ParseError("validation.ok disagrees with the violation list");

  if (j.contains("invariants"))
    r.invariants = invariants_from(j["invariants"], at(j, "consistency", "report"));
  if (j.contains("certificate")) r.certificate = certificate_from(j["certificate"]);
  if (j.contains("ev_inputs")) {
    const json& e = j["ev_inputs"];
    const std::string p = "ev_inputs";
    r.ev = bounds::EvInputs{int64(at(e, "gF", p), p), int64(at(e, "Dhor_dot_F", p), p),
                            int64(at(e, "gC", p), p), int64(at(e, "nDC", p), p),
                            int64(at(e, "nS", p), p)};
  }
  return r;
}

std::string render_text(const ReportDocument& r) {
  std::ostringstream out;
  out << r.tool_version << "\n";
  out << "degree d = " << r.input.cover.degree << ", " << r.input.base.components.size()
      << " branch components, " << r.input.base.crossings.size() << " crossings\n";
  if (r.validation.ok()) {
    out << "validation: ok" << (r.strict ? " (strict)" : "") << "\n";
  } else {
    out << "validation: " << r.validation.violations.size() << " violation(s)"
        << (r.strict ? " (strict)" : "") << "\n";
    for (const auto& v : r.validation.violations) {
      out << "  [" << model::rule_code(v.rule) << "]";
      for (const auto& w : v.where) out << " " << w << ";";
      out << " " << v.message << "\n";
    }
  }
  if (!r.invariants) return out.str();

  const auto& i = *r.invariants;
  out << "branch divisor B:";
  for (const auto& b : i.B_mult) out << " " << b.id << "=" << b.value.get_str();
  out << "\n";
  out << "(K_X,B) = " << i.KX_dot_B.get_str() << "\n";
  out << "(B,F) = " << i.B_dot_F.get_str() << "\n";
  out << "(R,R) = " << pretty(i.RR) << "  (diagonal " << pretty(i.RR_diagonal) << ", cross "
      << pretty(i.RR_cross) << ")\n";
  out << "K_Y^2 = " << pretty(i.KY_sq) << "\n";
  out << "correction = " << pretty(i.correction_total) << "\n";
  out << "K_Y'^2 = " << pretty(i.KYprime_sq) << "\n";
  out << "e_c(U) = " << i.euler_U.get_str() << "\n";
  out << "#preimages of D^sing = " << i.preimage_points.get_str() << "\n";
  out << "e_c(Y) = " << i.euler_Y.get_str() << "\n";
  out << "s = " << i.exceptional_s.get_str() << "\n";
  out << "e_c(Y') = " << i.euler_Yprime.get_str() << "\n";
  out << "chi(O_Y') = " << pretty(i.chi) << "\n";
  out << "deg_det = " << pretty(i.deg_det) << "\n";
  if (!i.chi_integral) out << "warning: chi is not an integer; input is geometrically inconsistent\n";
  if (!i.deg_det_integral)
    out << "warning: deg_det is not an integer; input is geometrically inconsistent\n";

  if (r.certificate) {
    const auto& c = *r.certificate;
    out << "certificate: " << (c.satisfied ? "satisfied" : "VIOLATED")
        << ", theorem1_c = " << pretty(c.theorem1_c) << ", |deg_det| <= "
        << pretty(c.theorem1_c * c.degree) << "\n";
    for (const auto& t : c.terms) {
      out << "  " << (t.holds() ? "ok  " : "FAIL") << " " << t.name << " = " << pretty(t.value)
          << " in " << (t.lower_strict ? "(" : "[") << pretty(t.lower) << ", " << pretty(t.upper)
          << (t.upper_strict ? ")" : "]") << "\n";
    }
    if (c.ev_bound) {
      out << "ev_bound = " << pretty(*c.ev_bound) << " (hypotheses asserted by caller: "
          << kEvHypotheses << ")\n";
      out << "deg_det <= ev_bound: " << (*c.ev_satisfied ? "satisfied" : "VIOLATED") << "\n";
    }
  }
  return out.str();
}

}  // namespace ramcov::report
