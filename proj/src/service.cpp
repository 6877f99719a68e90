#include "mdl/service.hpp"

#include <httplib.h>

#include <chrono>
#include <mutex>
#include <ostream>

#include "mdl/api.hpp"

namespace mdl::service {

namespace {

using api::ApiError;
using api::Json;

struct HttpFailure {
  ApiError error;
};

[[noreturn]] void fail(int status, std::string code, std::string message,
                       std::optional<std::string> path = std::nullopt) {
  ApiError e;
  e.status = status;
  e.code = std::move(code);
  e.message = std::move(message);
  e.path = std::move(path);
  throw HttpFailure{std::move(e)};
}

Response json_response(const Json& j, int status = 200) {
  return Response{status, "application/json", to_text(j)};
}

nlohmann::json body_object(const Request& req) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(req.body);
  } catch (const nlohmann::json::parse_error& e) {
    fail(400, "malformed_json", std::string("request body is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(400, "malformed_request", "request body must be a JSON object");
  return j;
}

std::string string_member(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(400, "malformed_request", std::string("'") + key + "' is required", std::string("/") + key);
  if (!it->is_string()) fail(400, "malformed_request", std::string("'") + key + "' must be a string", std::string("/") + key);
  return it->get<std::string>();
}

GrantSet expression_member(const nlohmann::json& j) {
  std::string expr = string_member(j, "expression");
  try {
    return parse_grant(expr);
  } catch (const ParseError& e) {
    throw HttpFailure{api::parse_error(e, "/expression")};
  }
}

Response do_parse(const Request& req) {
  return json_response(api::parse_document(expression_member(body_object(req))));
}

Response do_generate(const Request& req) {
  auto body = body_object(req);
  GrantSet g = expression_member(body);
  bool corrected = false;
  if (auto it = body.find("corrected"); it != body.end()) {
    if (!it->is_boolean()) fail(400, "malformed_request", "'corrected' must be a boolean", "/corrected");
    corrected = it->get<bool>();
  }
  return json_response(api::license_document(generate_license(g, {.verbatim_typos = !corrected})));
}

Response do_check(const Request& req) {
  auto body = body_object(req);
  GrantSet g = expression_member(body);
  auto q = body.find("query");
  if (q == body.end()) fail(400, "malformed_query", "'query' is required", "/query");
  ActionQuery query;
  try {
    query = api::query_from_json(*q);
  } catch (const QueryError& e) {
    fail(400, "malformed_query", e.what(), "/query");
  }
  return json_response(api::decision_document(check(g, query)));
}

Response do_combine(const Request& req) {
  auto body = body_object(req);
  auto it = body.find("expressions");
  if (it == body.end() || !it->is_array())
    fail(400, "malformed_request", "'expressions' must be an array of strings", "/expressions");
  if (it->empty()) fail(400, "malformed_request", "at least one expression is required", "/expressions");

  std::vector<GrantSet> grants;
  Json errors = Json::array();
  for (std::size_t i = 0; i < it->size(); ++i) {
    const auto& e = (*it)[i];
    if (!e.is_string())
      fail(400, "malformed_request", "expressions must be strings", "/expressions/" + std::to_string(i));
    try {
      grants.push_back(parse_grant(e.get<std::string>()));
    } catch (const ParseError& pe) {
      errors.push_back({{"index", i}, {"offset", pe.offset()}, {"message", pe.message()}});
    }
  }
  if (!errors.empty()) {
    ApiError err;
    err.status = 422;
    err.code = "parse_error";
    err.message = std::to_string(errors.size()) + " of " + std::to_string(it->size()) +
                  " expressions failed to parse";
    err.path = "/expressions";
    err.details = Json::object();
    err.details["errors"] = errors;
    throw HttpFailure{std::move(err)};
  }
  return json_response(api::combination_document(combine(grants)));
}

Response do_topsheet(const Request& req) {
  auto body = body_object(req);
  GrantSet g = expression_member(body);
  std::string fmt = "json";
  if (body.contains("format")) fmt = string_member(body, "format");
  auto format = top_sheet_format_from_token(fmt);
  if (!format) fail(400, "unknown_format", "unknown format '" + fmt + "' (expected json, md, html)", "/format");
  Response r{200, "application/json", render_top_sheet(g, *format)};
  if (*format == TopSheetFormat::Markdown) r.content_type = "text/markdown; charset=utf-8";
  if (*format == TopSheetFormat::Html) r.content_type = "text/html; charset=utf-8";
  return r;
}

struct Route {
  std::string_view method;
  std::string_view path;
  Response (*handler)(const Request&);
};

const std::array<Route, 6> kRoutes = {{
    {"GET", "/v1/taxonomy", [](const Request&) { return json_response(api::taxonomy_document()); }},
    {"POST", "/v1/parse", do_parse},
    {"POST", "/v1/generate", do_generate},
    {"POST", "/v1/check", do_check},
    {"POST", "/v1/combine", do_combine},
    {"POST", "/v1/topsheet", do_topsheet},
}};

}  // namespace

Response handle(const Request& req) {
  try {
    bool path_known = false;
    for (const auto& route : kRoutes) {
      if (route.path != req.path) continue;
      path_known = true;
      if (route.method == req.method) return route.handler(req);
    }
    if (path_known) fail(405, "method_not_allowed", req.method + " is not supported on " + req.path);
    fail(404, "not_found", "no route for " + req.path);
  } catch (const HttpFailure& f) {
    return json_response(f.error.to_json(), f.error.status);
  } catch (const std::exception& e) {
    ApiError err{500, "internal_error", e.what(), std::nullopt, std::nullopt, {}};
    return json_response(err.to_json(), 500);
  }
}

ServerOptions parse_address(const std::string& addr) {
  auto colon = addr.rfind(':');
  if (colon == std::string::npos) throw std::invalid_argument("address must be host:port: " + addr);
  ServerOptions opts;
  if (colon > 0) opts.host = addr.substr(0, colon);
  try {
    std::size_t used = 0;
    opts.port = std::stoi(addr.substr(colon + 1), &used);
    if (used != addr.size() - colon - 1) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid port in address: " + addr);
  }
  if (opts.port < 0 || opts.port > 65535) throw std::invalid_argument("port out of range: " + addr);
  return opts;
}

int serve(const ServerOptions& options, std::ostream& log,
          const std::function<void(int, std::function<void()>)>& on_ready) {
  httplib::Server server;
  std::mutex log_mutex;

  auto dispatch = [](const httplib::Request& hreq, httplib::Response& hres) {
    Response r = handle(Request{hreq.method, hreq.path, hreq.body});
    hres.status = r.status;
    hres.set_content(r.body, r.content_type);
  };
  server.Get(".*", dispatch);
  server.Post(".*", dispatch);
  server.set_logger([&](const httplib::Request& req, const httplib::Response& res) {
    auto now = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::system_clock::now().time_since_epoch());
    nlohmann::ordered_json line = {{"ts_ms", now.count()},
                                   {"method", req.method},
                                   {"path", req.path},
                                   {"status", res.status},
                                   {"bytes", res.body.size()}};
    std::lock_guard lock(log_mutex);
    log << line.dump() << std::endl;
  });

  int port = options.port;
  if (port == 0) {
    port = server.bind_to_any_port(options.host);
    if (port < 0) return 1;
  } else if (!server.bind_to_port(options.host, port)) {
    return 1;
  }
  if (on_ready) on_ready(port, [&server] { server.stop(); });
  return server.listen_after_bind() ? 0 : 1;
}

}  // namespace mdl::service
