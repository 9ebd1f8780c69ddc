#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <string>

#include "colortool/registry.hpp"

namespace colortool {

struct HttpRequest {
  std::string method;  // "GET", "POST", "OPTIONS"
  std::string path;
  std::string body;
  std::string origin;  // value of the Origin header, may be empty
};

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
  std::map<std::string, std::string> headers;
};

// HTTP/JSON facade over the palette, assessment and plotting code.
//
//   GET  /api/registry                 [{name, kind, spec}, ...] in registry order
//   POST /api/render                   {spec, n, cvd?, desaturate?} -> {colors, ...}
//   POST /api/plot/{swatch,spec,hcl}   same body -> image/svg+xml
//
// Validation failures answer 400 with {"error", "field"}; hclplot on a
// non-sequential spec answers 422. handle() keeps no state between calls.
class Service {
 public:
  explicit Service(const Registry& registry) : registry_(registry) {}

  HttpResponse handle(const HttpRequest& request) const;

 private:
  HttpResponse registry_listing() const;
  const Registry& registry_;
};

// True for http(s)://localhost, 127.0.0.1 or [::1] on any port.
bool is_local_origin(const std::string& origin);

struct ServeOptions {
  std::string host = "127.0.0.1";
  int port = 8080;
  // Studio assets served at "/" when set.
  std::filesystem::path static_dir;
};

// The Service behind a cpp-httplib listener. Port 0 binds any free port.
class Server {
 public:
  Server(const Registry& registry, ServeOptions options);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  // Returns false if the address cannot be bound.
  bool bind();
  int port() const noexcept;
  // Blocks until stop() is called from another thread.
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// bind() + listen(). Returns false if binding failed.
bool serve(const Registry& registry, const ServeOptions& options);

}  // namespace colortool
