#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "ramcov/bounds.hpp"
#include "ramcov/cover_io.hpp"
#include "ramcov/cover_model.hpp"
#include "ramcov/invariants.hpp"

namespace ramcov::report {

inline constexpr const char* kToolVersion = "ramcov 0.1.0";

struct ReportDocument {
  std::string tool_version = kToolVersion;
  io::CoverDocument input;
  bool strict = false;
  model::ValidationReport validation;
  std::optional<inv::InvariantReport> invariants;    // present iff validation passed
  std::optional<bounds::BoundCertificate> certificate;
  std::optional<bounds::EvInputs> ev;                 // caller-asserted hypotheses

  bool operator==(const ReportDocument&) const = default;
};

/// Validates and, when valid, runs the invariant pipeline and the certificate.
ReportDocument build_report(const io::CoverDocument& input, bool strict,
                            const std::optional<bounds::EvInputs>& ev);

nlohmann::json to_json(const ReportDocument& report);
/// Inverse of to_json. Throws io::ParseError on a malformed report.
ReportDocument report_from_json(const nlohmann::json& j);

std::string render_text(const ReportDocument& report);

}  // namespace ramcov::report
