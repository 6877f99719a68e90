#pragma once

// License text generation and the Top Sheet rights summary.

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mdl/checker.hpp"
#include "mdl/taxonomy.hpp"

namespace mdl {

// The license language, split into the pieces the generator assembles. Two
// built-in variants exist: `verbatim` reproduces the published MDL wording
// including its drafting errors, `corrected` fixes them (see `changelog`).
struct LicenseTemplate {
  struct Definition {
    std::string term;
    std::string text;
  };

  std::string variant;
  std::vector<std::string> changelog;

  std::string preamble;
  std::string title;
  std::string intro;
  std::string definitions_heading;
  std::vector<Definition> definitions;
  std::string general_heading;
  std::vector<std::string> general_clauses;

  std::string data_heading;
  std::string data_grant_lead;
  std::string data_exclude_lead;
  std::array<std::string, kDataRightCount> data_items;  // Access, Labelling, Distribute, Represent

  std::string model_heading;
  std::string model_grant_lead;
  std::string model_exclude_lead;
  // Benchmark, Research, Publish, Internal Use, Output Commercialization,
  // Model Commercialization.
  std::array<std::string, 6> model_items;

  std::string notice_heading;
  std::string notice_origin;
  std::string notice_same_terms;
  std::string notice_attribution;
  std::string notice_confidential_conditional;
  std::string notice_confidential;

  std::string exclude_parties;       // "{parties}" is substituted
  std::string exclude_no_parties;
  std::string exclude_domains;       // "{domains}" is substituted
  std::string exclude_sublicense;

  static const LicenseTemplate& verbatim();
  static const LicenseTemplate& corrected();
  /// Reads a template from JSON with the keys produced by to_json().
  static LicenseTemplate load(const std::filesystem::path& file);

  nlohmann::ordered_json to_json() const;
  static LicenseTemplate from_json(const nlohmann::json& j);
};

struct LicenseOptions {
  bool verbatim_typos = true;
};

struct LicenseDocument {
  std::string text;
  GrantSet grant;
  std::string template_version;  // e.g. "MDL-1.0/verbatim"
  std::string content_hash;      // lowercase hex SHA-256 of text
};

LicenseDocument generate_license(const GrantSet& g, const LicenseOptions& options = {});
LicenseDocument generate_license(const GrantSet& g, const LicenseTemplate& tmpl);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

enum class RowStatus : std::uint8_t { Granted, Implied, Excluded };
std::string_view token(RowStatus s);

struct TopSheet {
  struct Row {
    Right right;
    RowStatus status;
  };
  GrantSet grant;
  std::array<Row, kRightCount> rows;
  std::vector<Restriction> restrictions;
  std::vector<Obligation> obligations;
};

std::string restriction_description(const Restriction& r);

TopSheet make_top_sheet(const GrantSet& g);

enum class TopSheetFormat : std::uint8_t { Structured, Markdown, Html };
std::optional<TopSheetFormat> top_sheet_format_from_token(std::string_view tok);

nlohmann::ordered_json top_sheet_json(const TopSheet& sheet);
std::string render_top_sheet(const GrantSet& g, TopSheetFormat format);

/// Pretty-printed JSON with a trailing newline; the single text encoding used
/// by every structured output.
std::string to_text(const nlohmann::ordered_json& j);

}  // namespace mdl
