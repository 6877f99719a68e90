#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "mdl/service.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Stateless HTTP API for Montreal Data License grants", "mdl-serve"};
  std::string addr = "127.0.0.1:8080";
  if (const char* env = std::getenv("MDL_ADDR"); env && *env) addr = env;
  app.add_option("--addr", addr, "Listen address host:port (env MDL_ADDR)");
  CLI11_PARSE(app, argc, argv);

  mdl::service::ServerOptions options;
  try {
    options = mdl::service::parse_address(addr);
  } catch (const std::invalid_argument& e) {
    std::cerr << "mdl-serve: " << e.what() << '\n';
    return 3;
  }
  int rc = mdl::service::serve(options, std::cout, [&](int port, auto) {
    std::cerr << "mdl-serve: listening on " << options.host << ':' << port << '\n';
  });
  if (rc != 0) std::cerr << "mdl-serve: failed to serve on " << addr << '\n';
  return rc;
}
