#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "ramcov/cover_model.hpp"

namespace ramcov::io {

/// Malformed input document: bad JSON, wrong types, missing keys, unknown
/// keys or non-integer numbers.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CoverDocument {
  model::BaseGeometry base;
  model::CoverDescription cover;

  bool operator==(const CoverDocument&) const = default;
};

CoverDocument parse_document(const nlohmann::json& doc);
CoverDocument parse_document_text(const std::string& text);
CoverDocument load_document(const std::string& path);

/// Canonical JSON form; parse_document(to_json(x)) == x.
nlohmann::json to_json(const CoverDocument& doc);

nlohmann::json to_json(const model::LocalSpec& spec);

}  // namespace ramcov::io
