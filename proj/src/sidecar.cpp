#include "mdl/sidecar.hpp"

#include <algorithm>
#include <array>

#include "mdl/expr.hpp"
#include "mdl/render.hpp"

namespace mdl {

namespace {

constexpr std::array<std::string_view, 6> kKnownMembers = {
    "schema_version", "expression", "licensor", "data_source", "notices", "license_text_hash",
};

const std::string& require_string(const nlohmann::json& obj, const std::string& key,
                                  const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SidecarError(path + "/" + key, "required member is missing");
  if (!it->is_string()) throw SidecarError(path + "/" + key, "must be a string");
  return it->get_ref<const std::string&>();
}

std::optional<std::string> optional_string(const nlohmann::json& obj, const std::string& key,
                                           const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) return std::nullopt;
  if (!it->is_string()) throw SidecarError(path + "/" + key, "must be a string");
  return it->get<std::string>();
}

bool is_hex_digest(std::string_view s) {
  return s.size() == 64 && std::all_of(s.begin(), s.end(), [](char c) {
           return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
         });
}

void check_expression(const std::string& expr) {
  std::string canon;
  try {
    canon = canonical(expr);
  } catch (const ParseError& e) {
    throw SidecarError("/expression", e.message() + " at offset " + std::to_string(e.offset()));
  }
  if (canon != expr) throw SidecarError("/expression", "non-canonical; expected '" + canon + "'");
}

}  // namespace

GrantSet Sidecar::grant() const { return parse_grant(expression); }

void validate(const Sidecar& s) {
  if (s.schema_version != kSidecarSchemaVersion)
    throw SidecarError("/schema_version", "unsupported schema version '" + s.schema_version + "'");
  check_expression(s.expression);
  if (s.licensor.name.empty()) throw SidecarError("/licensor/name", "must not be empty");
  if (s.data_source && s.data_source->find("://") == std::string::npos)
    throw SidecarError("/data_source", "must be an absolute URL");
  for (std::size_t i = 0; i < s.notices.size(); ++i)
    if (s.notices[i].empty()) throw SidecarError("/notices/" + std::to_string(i), "must not be empty");
  if (s.license_text_hash) {
    if (!is_hex_digest(*s.license_text_hash))
      throw SidecarError("/license_text_hash", "must be a lowercase hex SHA-256 digest");
    GrantSet g = s.grant();
    if (*s.license_text_hash != generate_license(g, {.verbatim_typos = true}).content_hash &&
        *s.license_text_hash != generate_license(g, {.verbatim_typos = false}).content_hash)
      throw SidecarError("/license_text_hash",
                         "does not match the license generated for the expression");
  }
  if (!s.extra.is_object()) throw SidecarError("", "unknown members must form an object");
}

Sidecar read_sidecar(std::string_view bytes, ReadMode mode) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw SidecarError("", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SidecarError("", "document must be a JSON object");

  Sidecar s;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (std::find(kKnownMembers.begin(), kKnownMembers.end(), it.key()) != kKnownMembers.end())
      continue;
    if (mode == ReadMode::Strict) throw SidecarError("/" + it.key(), "unknown member");
    s.extra[it.key()] = it.value();
  }

  s.schema_version = require_string(doc, "schema_version", "");
  s.expression = require_string(doc, "expression", "");

  auto lic = doc.find("licensor");
  if (lic == doc.end()) throw SidecarError("/licensor", "required member is missing");
  if (!lic->is_object()) throw SidecarError("/licensor", "must be an object");
  for (auto it = lic->begin(); it != lic->end(); ++it)
    if (it.key() != "name" && it.key() != "contact")
      throw SidecarError("/licensor/" + it.key(), "unknown member");
  s.licensor.name = require_string(*lic, "name", "/licensor");
  s.licensor.contact = optional_string(*lic, "contact", "/licensor");

  s.data_source = optional_string(doc, "data_source", "");
  if (auto n = doc.find("notices"); n != doc.end()) {
    if (!n->is_array()) throw SidecarError("/notices", "must be an array of strings");
    for (std::size_t i = 0; i < n->size(); ++i) {
      if (!(*n)[i].is_string()) throw SidecarError("/notices/" + std::to_string(i), "must be a string");
      s.notices.push_back((*n)[i].get<std::string>());
    }
  }
  s.license_text_hash = optional_string(doc, "license_text_hash", "");

  validate(s);
  return s;
}

std::string write_sidecar(const Sidecar& s) {
  nlohmann::json j = s.extra;  // std::map-backed: keys come out sorted
  j["schema_version"] = s.schema_version;
  j["expression"] = s.expression;
  nlohmann::json lic = {{"name", s.licensor.name}};
  if (s.licensor.contact) lic["contact"] = *s.licensor.contact;
  j["licensor"] = lic;
  if (s.data_source) j["data_source"] = *s.data_source;
  if (!s.notices.empty()) j["notices"] = s.notices;
  if (s.license_text_hash) j["license_text_hash"] = *s.license_text_hash;
  return j.dump(2) + "\n";
}

}  // namespace mdl
