#pragma once

// Stateless HTTP+JSON API under /v1. Routing is a pure function of the
// request so it can be exercised without a socket; serve() binds it to
// cpp-httplib.

#include <functional>
#include <iosfwd>
#include <string>

namespace mdl::service {

struct Request {
  std::string method;
  std::string path;
  std::string body;
};

struct Response {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

Response handle(const Request& req);

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;
};

/// Parses "host:port" (or ":port"). Throws std::invalid_argument.
ServerOptions parse_address(const std::string& addr);

/// Blocks serving requests; writes one JSON access-log line per request to
/// `log`. Once bound, `on_ready` receives the port and a thread-safe
/// callback that stops the server.
int serve(const ServerOptions& options, std::ostream& log,
          const std::function<void(int port, std::function<void()> stop)>& on_ready = {});

}  // namespace mdl::service
