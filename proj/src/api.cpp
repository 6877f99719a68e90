#include "mdl/api.hpp"

namespace mdl::api {

namespace {

template <typename Range, typename Fn>
Json token_array(const Range& items, Fn fn) {
  Json out = Json::array();
  for (const auto& item : items) out.push_back(std::string(fn(item)));
  return out;
}

Json rights_array(RightSet rights) {
  return token_array(rights.members(), [](Right r) { return token(r); });
}

}  // namespace

Json grant_json(const GrantSet& g) {
  Json j;
  j["version"] = std::string(g.version());
  j["data"] = rights_array(g.data_rights());
  j["model"] = rights_array(g.model_rights());
  Json restrictions = Json::array();
  for (const auto& r : g.restrictions()) {
    Json item;
    item["kind"] = std::string(token(r.kind));
    if (has_payload(r.kind)) item["payload"] = r.payload;
    restrictions.push_back(item);
  }
  j["restrictions"] = restrictions;
  return j;
}

Json parse_document(const GrantSet& g) {
  Json j;
  j["canonical"] = serialize(g);
  j["grant"] = grant_json(g);
  j["closure"] = grant_json(closure(g));
  return j;
}

Json decision_document(const Decision& d) {
  Json j;
  j["verdict"] = std::string(token(d.verdict));
  j["obligations"] = token_array(d.obligations, [](Obligation o) { return token(o); });
  Json trace = Json::array();
  for (const auto& t : d.trace)
    trace.push_back({{"right", token(t.right)}, {"capability", token(t.capability)}});
  j["trace"] = trace;
  j["reason"] = d.reason;
  return j;
}

Json combination_document(const CombinationReport& r) {
  Json j;
  j["effective"] = serialize(r.effective);
  j["effective_grant"] = grant_json(r.effective);
  Json conflicts = Json::array();
  for (const auto& c : r.conflicts)
    conflicts.push_back({{"kind", token(c.kind)}, {"message", c.message}});
  j["conflicts"] = conflicts;
  j["provenance"] = r.provenance;
  return j;
}

Json license_document(const LicenseDocument& doc) {
  Json j;
  j["expression"] = serialize(doc.grant);
  j["template_version"] = doc.template_version;
  j["hash"] = doc.content_hash;
  j["text"] = doc.text;
  return j;
}

Json taxonomy_document() {
  Json j;
  j["version"] = std::string(kTemplateVersion);
  Json rights = Json::array();
  for (Right r : kAllRights) {
    Json item;
    item["token"] = std::string(token(r));
    item["family"] = std::string(token(family(r)));
    item["name"] = std::string(display_name(r));
    item["definition"] = std::string(definition(r));
    item["summary"] = std::string(summary(r));
    item["implies"] = rights_array(implied_rights(r));
    item["capabilities"] =
        token_array(right_capabilities(r).members(), [](Capability c) { return token(c); });
    rights.push_back(item);
  }
  j["rights"] = rights;
  Json edges = Json::array();
  for (const auto& e : implication_edges()) edges.push_back({{"from", token(e.from)}, {"to", token(e.to)}});
  j["edges"] = edges;
  Json caps = Json::array();
  for (Capability c : kAllCapabilities) {
    Json item;
    item["token"] = std::string(token(c));
    item["description"] = std::string(description(c));
    item["assets"] = token_array(assets_for(c), [](AssetKind a) { return token(a); });
    caps.push_back(item);
  }
  j["capabilities"] = caps;
  j["restrictions"] = token_array(kAllRestrictionKinds, [](RestrictionKind k) { return token(k); });
  j["assets"] = token_array(kAllAssetKinds, [](AssetKind a) { return token(a); });
  Json obligations = Json::array();
  for (Obligation o : kAllObligations)
    obligations.push_back({{"token", token(o)}, {"description", description(o)}});
  j["obligations"] = obligations;
  return j;
}

ActionQuery query_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw QueryError("query must be an object");
  auto string_member = [&](const char* key) -> std::optional<std::string> {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) throw QueryError(std::string("query.") + key + " must be a string");
    return it->get<std::string>();
  };
  ActionQuery q;
  auto cap = string_member("capability");
  if (!cap) throw QueryError("query.capability is required");
  auto c = capability_from_token(*cap);
  if (!c) throw QueryError("unknown capability '" + *cap + "'");
  q.capability = *c;
  if (auto asset = string_member("asset")) {
    auto a = asset_from_token(*asset);
    if (!a) throw QueryError("unknown asset '" + *asset + "'");
    q.asset = *a;
  } else {
    q.asset = assets_for(q.capability).front();
  }
  q.actor = string_member("actor");
  q.target_domain = string_member("domain");
  if (auto it = j.find("sublicense"); it != j.end() && !it->is_null()) {
    if (!it->is_boolean()) throw QueryError("query.sublicense must be a boolean");
    q.involves_sublicense = it->get<bool>();
  }
  validate(q);
  return q;
}

Json ApiError::to_json() const {
  Json err;
  err["status"] = status;
  err["code"] = code;
  err["message"] = message;
  if (path) err["path"] = *path;
  if (offset) err["offset"] = *offset;
  if (details.is_object())
    for (auto it = details.begin(); it != details.end(); ++it) err[it.key()] = it.value();
  return Json{{"error", err}};
}

ApiError parse_error(const ParseError& e, std::optional<std::string> path) {
  ApiError err;
  err.status = 422;
  err.code = "parse_error";
  err.message = e.message();
  err.path = std::move(path);
  err.offset = e.offset();
  err.details = Json::object();
  err.details["expected"] = e.expected();
  err.details["found"] = e.found();
  return err;
}

}  // namespace mdl::api
