#include "mdl/render.hpp"

#include <openssl/evp.h>

#include <sstream>

#include "mdl/expr.hpp"

namespace mdl {

namespace {

constexpr std::string_view kItemIndent = "       ";
constexpr std::string_view kSubIndent = "   ";

constexpr std::string_view kBenchmarkCase1Note = " [case 1 only]";
constexpr std::string_view kBenchmarkCase2Name =
    "Benchmark (case 2: where a model is trained on the data so as to evaluate it)";

std::string roman(std::size_t n) {
  static constexpr std::array<std::pair<std::size_t, std::string_view>, 6> kTable = {{
      {40, "xl"}, {10, "x"}, {9, "ix"}, {5, "v"}, {4, "iv"}, {1, "i"},
  }};
  std::string out;
  for (const auto& [value, digits] : kTable) {
    while (n >= value) {
      out += digits;
      n -= value;
    }
  }
  return out;
}

char letter(std::size_t i) { return static_cast<char>('a' + i); }

void substitute(std::string& s, std::string_view key, std::string_view value) {
  auto pos = s.find(key);
  if (pos != std::string::npos) s.replace(pos, key.size(), value);
}

std::string join(const std::vector<std::string>& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

void write_items(std::ostringstream& os, const std::vector<std::string>& items) {
  if (items.empty()) {
    os << kItemIndent << "(none)\n";
    return;
  }
  for (std::size_t i = 0; i < items.size(); ++i)
    os << kItemIndent << '(' << roman(i + 1) << ") " << items[i] << '\n';
}

std::vector<std::string> restriction_exclusions(const GrantSet& g, const LicenseTemplate& t) {
  std::vector<std::string> out;
  if (const Restriction* p = g.find(RestrictionKind::DesignatedParties)) {
    if (p->payload.empty()) {
      out.push_back(t.exclude_no_parties);
    } else {
      std::string s = t.exclude_parties;
      substitute(s, "{parties}", join(p->payload, ", "));
      out.push_back(std::move(s));
    }
  }
  if (const Restriction* e = g.find(RestrictionKind::EthicalExclusion)) {
    std::string s = t.exclude_domains;
    substitute(s, "{domains}", join(e->payload, ", "));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

LicenseDocument generate_license(const GrantSet& g, const LicenseOptions& options) {
  return generate_license(g, options.verbatim_typos ? LicenseTemplate::verbatim()
                                                    : LicenseTemplate::corrected());
}

LicenseDocument generate_license(const GrantSet& g, const LicenseTemplate& t) {
  const RightSet closed = closure(g.rights());
  const std::string version = std::string(kTemplateVersion) + "/" + t.variant;
  std::ostringstream os;

  os << "MDL-Expression: " << serialize(g) << '\n';
  os << "MDL-Template: " << version << "\n\n";
  os << t.preamble << "\n\n";
  os << t.title << "\n\n";
  os << t.intro << "\n\n";

  os << "1. " << t.definitions_heading << '\n';
  for (std::size_t i = 0; i < t.definitions.size(); ++i)
    os << kSubIndent << '(' << letter(i) << ") “" << t.definitions[i].term << "” "
       << t.definitions[i].text << '\n';
  os << '\n';

  os << "2. " << t.general_heading << '\n';
  for (std::size_t i = 0; i < t.general_clauses.size(); ++i)
    os << kSubIndent << '(' << letter(i) << ") " << t.general_clauses[i] << '\n';
  os << '\n';

  const std::vector<std::string> extra = restriction_exclusions(g, t);

  // Rights to the data itself.
  std::vector<std::string> granted, excluded;
  for (std::size_t i = 0; i < kDataRightCount; ++i) {
    Right r = kAllRights[i];
    if (closed.contains(r))
      granted.push_back(t.data_items[i]);
    else
      excluded.emplace_back(display_name(r));
  }
  excluded.insert(excluded.end(), extra.begin(), extra.end());
  if (g.has(RestrictionKind::NoSublicense)) excluded.push_back(t.exclude_sublicense);
  os << "3. " << t.data_heading << '\n';
  os << kSubIndent << "(a) " << t.data_grant_lead << '\n';
  write_items(os, granted);
  os << kSubIndent << "(b) " << t.data_exclude_lead << '\n';
  write_items(os, excluded);
  os << '\n';

  // Rights in conjunction with models. Both Benchmark cases share one item.
  granted.clear();
  excluded.clear();
  if (closed.contains(Right::Benchmark2)) {
    granted.push_back(t.model_items[0]);
  } else if (closed.contains(Right::Benchmark1)) {
    granted.push_back(t.model_items[0] + std::string(kBenchmarkCase1Note));
    excluded.emplace_back(kBenchmarkCase2Name);
  } else {
    excluded.emplace_back("Benchmark");
  }
  for (std::size_t i = 1; i < t.model_items.size(); ++i) {
    Right r = kAllRights[kDataRightCount + 1 + i];
    if (closed.contains(r))
      granted.push_back(t.model_items[i]);
    else
      excluded.emplace_back(display_name(r));
  }
  excluded.insert(excluded.end(), extra.begin(), extra.end());
  os << "4. " << t.model_heading << '\n';
  os << kSubIndent << "(a) " << t.model_grant_lead << '\n';
  write_items(os, granted);
  os << kSubIndent << "(b) " << t.model_exclude_lead << '\n';
  write_items(os, excluded);
  os << '\n';

  os << "5. " << t.notice_heading << '\n';
  os << kSubIndent << t.notice_origin << ' ' << t.notice_same_terms << ' ';
  if (g.has(RestrictionKind::Confidential))
    os << t.notice_confidential;
  else if (g.has(RestrictionKind::AttributionRequired))
    os << t.notice_attribution;
  else
    os << t.notice_attribution << ' ' << t.notice_confidential_conditional;
  os << '\n';

  LicenseDocument doc;
  doc.text = os.str();
  doc.grant = g;
  doc.template_version = version;
  doc.content_hash = sha256_hex(doc.text);
  return doc;
}

std::string_view token(RowStatus s) {
  switch (s) {
    case RowStatus::Granted: return "granted";
    case RowStatus::Implied: return "implied";
    case RowStatus::Excluded: return "excluded";
  }
  return "";
}

std::string restriction_description(const Restriction& r) {
  switch (r.kind) {
    case RestrictionKind::DesignatedParties:
      return r.payload.empty() ? "No party may exercise the grant (designated parties are disjoint)."
                               : "Use limited to the designated parties: " + join(r.payload, ", ") + ".";
    case RestrictionKind::NoSublicense:
      return "The Data may not be sub-licensed, including to contractors acting for the Licensee.";
    case RestrictionKind::AttributionRequired:
      return "Attribution is required: link to the source of the Data.";
    case RestrictionKind::Confidential:
      return "Use is confidential: do not publicly refer to the Licensor or the source of the Data.";
    case RestrictionKind::EthicalExclusion:
      return "Use excluded in the following fields: " + join(r.payload, ", ") + ".";
  }
  return "";
}

TopSheet make_top_sheet(const GrantSet& g) {
  TopSheet sheet;
  sheet.grant = g;
  const RightSet closed = closure(g.rights());
  for (std::size_t i = 0; i < kRightCount; ++i) {
    Right r = kAllRights[i];
    RowStatus s = g.has(r) ? RowStatus::Granted
                  : closed.contains(r) ? RowStatus::Implied
                                       : RowStatus::Excluded;
    sheet.rows[i] = {r, s};
  }
  sheet.restrictions = g.restrictions();
  sheet.obligations = scenario_obligations(g);
  return sheet;
}

std::optional<TopSheetFormat> top_sheet_format_from_token(std::string_view tok) {
  if (tok == "json" || tok == "structured") return TopSheetFormat::Structured;
  if (tok == "md" || tok == "markdown") return TopSheetFormat::Markdown;
  if (tok == "html") return TopSheetFormat::Html;
  return std::nullopt;
}

nlohmann::ordered_json top_sheet_json(const TopSheet& sheet) {
  nlohmann::ordered_json j;
  j["version"] = std::string(kTemplateVersion);
  j["expression"] = serialize(sheet.grant);
  auto rights = nlohmann::ordered_json::array();
  for (const auto& row : sheet.rows)
    rights.push_back({{"name", token(row.right)},
                      {"family", token(family(row.right))},
                      {"status", token(row.status)},
                      {"definition", summary(row.right)}});
  j["rights"] = rights;
  auto restrictions = nlohmann::ordered_json::array();
  for (const auto& r : sheet.restrictions)
    restrictions.push_back({{"restriction", to_string(r)}, {"description", restriction_description(r)}});
  j["restrictions"] = restrictions;
  auto obligations = nlohmann::ordered_json::array();
  for (Obligation o : sheet.obligations)
    obligations.push_back({{"obligation", token(o)}, {"description", description(o)}});
  j["obligations"] = obligations;
  return j;
}

namespace {

std::string_view status_label(RowStatus s) {
  switch (s) {
    case RowStatus::Granted: return "Granted";
    case RowStatus::Implied: return "Implied";
    case RowStatus::Excluded: return "Excluded";
  }
  return "";
}

constexpr std::string_view kDataSection = "Rights to the Data itself";
constexpr std::string_view kModelSection = "Summary of rights granted in conjunction with Models";

std::string markdown(const TopSheet& sheet) {
  std::ostringstream os;
  os << "# Top Sheet for Licensed Rights\n\n";
  os << "Expression: `" << serialize(sheet.grant) << "`\n";
  for (RightFamily fam : {RightFamily::Data, RightFamily::Model}) {
    os << "\n## " << (fam == RightFamily::Data ? kDataSection : kModelSection) << "\n\n";
    os << "| Right | Status | Definition |\n";
    os << "|---|---|---|\n";
    for (const auto& row : sheet.rows)
      if (family(row.right) == fam)
        os << "| " << display_name(row.right) << " | " << status_label(row.status) << " | "
           << summary(row.right) << " |\n";
  }
  os << "\n## Restrictions\n\n";
  if (sheet.restrictions.empty()) os << "None.\n";
  for (const auto& r : sheet.restrictions)
    os << "- `" << to_string(r) << "`: " << restriction_description(r) << '\n';
  os << "\n## Obligations\n\n";
  if (sheet.obligations.empty()) os << "None.\n";
  for (Obligation o : sheet.obligations) os << "- `" << token(o) << "`: " << description(o) << '\n';
  return os.str();
}

std::string escape_html(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string html(const TopSheet& sheet) {
  std::ostringstream os;
  os << "<!DOCTYPE html>\n<html>\n<head><meta charset=\"utf-8\"><title>Top Sheet for Licensed "
        "Rights</title></head>\n<body>\n";
  os << "<h1>Top Sheet for Licensed Rights</h1>\n";
  os << "<p>Expression: <code>" << escape_html(serialize(sheet.grant)) << "</code></p>\n";
  for (RightFamily fam : {RightFamily::Data, RightFamily::Model}) {
    os << "<h2>" << (fam == RightFamily::Data ? kDataSection : kModelSection) << "</h2>\n";
    os << "<table>\n<tr><th>Right</th><th>Status</th><th>Definition</th></tr>\n";
    for (const auto& row : sheet.rows)
      if (family(row.right) == fam)
        os << "<tr class=\"" << token(row.status) << "\"><td>" << escape_html(display_name(row.right))
           << "</td><td>" << status_label(row.status) << "</td><td>" << escape_html(summary(row.right))
           << "</td></tr>\n";
    os << "</table>\n";
  }
  os << "<h2>Restrictions</h2>\n<ul>\n";
  for (const auto& r : sheet.restrictions)
    os << "<li><code>" << escape_html(to_string(r)) << "</code>: "
       << escape_html(restriction_description(r)) << "</li>\n";
  os << "</ul>\n<h2>Obligations</h2>\n<ul>\n";
  for (Obligation o : sheet.obligations)
    os << "<li><code>" << token(o) << "</code>: " << escape_html(description(o)) << "</li>\n";
  os << "</ul>\n</body>\n</html>\n";
  return os.str();
}

}  // namespace

std::string render_top_sheet(const GrantSet& g, TopSheetFormat format) {
  TopSheet sheet = make_top_sheet(g);
  switch (format) {
    case TopSheetFormat::Structured: return to_text(top_sheet_json(sheet));
    case TopSheetFormat::Markdown: return markdown(sheet);
    case TopSheetFormat::Html: return html(sheet);
  }
  return {};
}

std::string to_text(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace mdl
