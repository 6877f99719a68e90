#pragma once

// JSON documents shared by the CLI (--json) and the HTTP service. Both
// surfaces serialize these with to_text(), so their outputs are
// byte-identical for the same input.

#include <optional>
#include <string>

#include <json.hpp>

#include "mdl/checker.hpp"
#include "mdl/composer.hpp"
#include "mdl/expr.hpp"
#include "mdl/render.hpp"

namespace mdl::api {

using Json = nlohmann::ordered_json;

Json grant_json(const GrantSet& g);
Json parse_document(const GrantSet& g);
Json decision_document(const Decision& d);
Json combination_document(const CombinationReport& r);
Json license_document(const LicenseDocument& doc);
Json taxonomy_document();

/// Builds a query from {"capability", "asset", "actor"?, "domain"?,
/// "sublicense"?}. Throws QueryError on missing or unknown members.
ActionQuery query_from_json(const nlohmann::json& j);

struct ApiError {
  int status = 500;
  std::string code;
  std::string message;
  std::optional<std::string> path;
  std::optional<std::size_t> offset;
  Json details;  // extra members, e.g. per-index errors for combine

  Json to_json() const;
};

ApiError parse_error(const ParseError& e, std::optional<std::string> path = std::nullopt);

}  // namespace mdl::api
