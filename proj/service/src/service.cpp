#include "colortool/service.hpp"

#include <httplib.h>

#include <optional>
#include <regex>

#include "colortool/error.hpp"
#include "colortool/json_io.hpp"
#include "colortool/ops.hpp"
#include "colortool/plots.hpp"

namespace colortool {
namespace {

using nlohmann::json;

struct RequestError {
  int status;
  std::string field;
  std::string message;
};

struct RenderRequest {
  PaletteSpec spec;
  int n = 0;
  std::optional<std::pair<CvdKind, double>> cvd;
  std::optional<double> desaturate;
};

HttpResponse json_response(int status, const json& body) {
  HttpResponse r;
  r.status = status;
  r.body = body.dump();
  return r;
}

HttpResponse error_response(const RequestError& e) {
  json body{{"error", e.message}};
  body["field"] = e.field.empty() ? json(nullptr) : json(e.field);
  return json_response(e.status, body);
}

RenderRequest parse_render(const std::string& text) {
  json body;
  try {
    body = json::parse(text);
  } catch (const json::parse_error& e) {
    throw RequestError{400, "", std::string("request body is not valid JSON: ") + e.what()};
  }
  if (!body.is_object()) {
    throw RequestError{400, "", "request body must be a JSON object"};
  }

  RenderRequest req;
  const auto spec = body.find("spec");
  if (spec == body.end()) {
    throw RequestError{400, "spec", "spec is required"};
  }
  try {
    req.spec = spec_from_json(*spec);
  } catch (const InvalidSpecError& e) {
    throw RequestError{400, e.field(), e.what()};
  }

  const auto n = body.find("n");
  if (n == body.end() || !n->is_number_integer()) {
    throw RequestError{400, "n", "n must be an integer"};
  }
  const auto count = n->get<long long>();
  if (count < 1 || count > 10000) {
    throw RequestError{400, "n", "n must lie in [1, 10000], got " + std::to_string(count)};
  }
  req.n = static_cast<int>(count);

  if (const auto cvd = body.find("cvd"); cvd != body.end() && !cvd->is_null()) {
    if (!cvd->is_object()) {
      throw RequestError{400, "cvd", "cvd must be an object {kind, severity}"};
    }
    const auto kind = cvd->find("kind");
    if (kind == cvd->end() || !kind->is_string()) {
      throw RequestError{400, "cvd.kind", "cvd.kind must be deutan, protan or tritan"};
    }
    CvdKind parsed{};
    try {
      parsed = parse_cvd_kind(kind->get<std::string>());
    } catch (const InvalidInputError& e) {
      throw RequestError{400, "cvd.kind", e.what()};
    }
    double severity = 1.0;
    if (const auto s = cvd->find("severity"); s != cvd->end() && !s->is_null()) {
      if (!s->is_number()) {
        throw RequestError{400, "cvd.severity", "cvd.severity must be a number"};
      }
      severity = s->get<double>();
    }
    if (!(severity >= 0.0 && severity <= 1.0)) {
      throw RequestError{400, "cvd.severity", "cvd.severity must lie in [0, 1]"};
    }
    req.cvd = std::make_pair(parsed, severity);
  }

  if (const auto d = body.find("desaturate"); d != body.end() && !d->is_null()) {
    if (!d->is_number() || d->get<double>() < 0.0 || d->get<double>() > 1.0) {
      throw RequestError{400, "desaturate", "desaturate must be a number in [0, 1]"};
    }
    req.desaturate = d->get<double>();
  }
  return req;
}

struct Rendered {
  Palette palette;
  std::optional<std::vector<HexCode>> cvd_colors;
  std::optional<std::vector<HexCode>> desaturated;
};

Rendered render(const RenderRequest& req) {
  Rendered out;
  out.palette = sample(req.spec, req.n);
  if (req.cvd) {
    out.cvd_colors = simulate_cvd(out.palette.colors, req.cvd->first, req.cvd->second);
  }
  if (req.desaturate) {
    out.desaturated = desaturate(out.palette.colors, *req.desaturate);
  }
  return out;
}

HttpResponse svg_response(const SvgDocument& doc) {
  HttpResponse r;
  r.content_type = "image/svg+xml";
  r.body = doc.text;
  return r;
}

HttpResponse plot(const std::string& which, const RenderRequest& req) {
  if (which == "hcl") {
    try {
      return svg_response(hclplot(req.spec, req.n));
    } catch (const UnsupportedKindError& e) {
      throw RequestError{422, "kind", e.what()};
    } catch (const InvalidCountError& e) {
      throw RequestError{400, "n", e.what()};
    }
  }
  const Rendered r = render(req);
  if (which == "spec") {
    if (r.palette.colors.size() < 2) {
      throw RequestError{400, "n", "spectrum plot needs n >= 2"};
    }
    return svg_response(specplot(r.palette));
  }
  SwatchSet set{r.palette.label, {{"Original", r.palette}}};
  if (r.cvd_colors) {
    set.rows.push_back({std::string(to_string(req.cvd->first)), {"", *r.cvd_colors}});
  }
  if (r.desaturated) {
    set.rows.push_back({"Desaturated", {"", *r.desaturated}});
  }
  return svg_response(swatchplot({set}));
}

}  // namespace

bool is_local_origin(const std::string& origin) {
  static const std::regex pattern(R"(^https?://(localhost|127\.0\.0\.1|\[::1\])(:[0-9]{1,5})?$)");
  return std::regex_match(origin, pattern);
}

HttpResponse Service::registry_listing() const {
  json out = json::array();
  for (const auto& spec : registry_.entries()) {
    out.push_back({{"name", spec.name},
                   {"kind", std::string(to_string(spec.kind))},
                   {"spec", spec_to_json(spec)}});
  }
  return json_response(200, out);
}

HttpResponse Service::handle(const HttpRequest& request) const {
  HttpResponse response;
  const std::string& path = request.path;
  const bool known = path == "/api/registry" || path == "/api/render" ||
                     path == "/api/plot/swatch" || path == "/api/plot/spec" ||
                     path == "/api/plot/hcl";
  try {
    if (!known) {
      throw RequestError{404, "", "no such endpoint: " + path};
    }
    if (request.method == "OPTIONS") {
      response.status = 204;
      response.content_type.clear();
      response.headers["Access-Control-Allow-Methods"] = "GET, POST, OPTIONS";
      response.headers["Access-Control-Allow-Headers"] = "Content-Type";
    } else if (path == "/api/registry") {
      if (request.method != "GET") throw RequestError{405, "", "use GET"};
      response = registry_listing();
    } else {
      if (request.method != "POST") throw RequestError{405, "", "use POST"};
      const RenderRequest req = parse_render(request.body);
      if (path == "/api/render") {
        const Rendered r = render(req);
        json body{{"colors", hex_array(r.palette.colors)}};
        if (r.cvd_colors) body["cvd_colors"] = hex_array(*r.cvd_colors);
        if (r.desaturated) body["desaturated_colors"] = hex_array(*r.desaturated);
        json luminance = json::array();
        for (double l : luminance_profile(r.palette.colors).luminance) luminance.push_back(l);
        body["luminance"] = luminance;
        body["settings"] = describe(req.spec);
        response = json_response(200, body);
      } else {
        response = plot(path.substr(std::string("/api/plot/").size()), req);
      }
    }
  } catch (const RequestError& e) {
    response = error_response(e);
  } catch (const InvalidSpecError& e) {
    response = error_response({400, e.field(), e.what()});
  } catch (const InvalidCountError& e) {
    response = error_response({400, "n", e.what()});
  } catch (const Error& e) {
    response = error_response({400, "", e.what()});
  }

  if (!request.origin.empty() && is_local_origin(request.origin)) {
    response.headers["Access-Control-Allow-Origin"] = request.origin;
    response.headers["Vary"] = "Origin";
  }
  return response;
}

struct Server::Impl {
  Impl(const Registry& registry, ServeOptions opts) : service(registry), options(std::move(opts)) {}

  Service service;
  ServeOptions options;
  httplib::Server http;
  int port = -1;
};

Server::Server(const Registry& registry, ServeOptions options)
    : impl_(std::make_unique<Impl>(registry, std::move(options))) {
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    HttpRequest request{req.method, req.path, req.body, req.get_header_value("Origin")};
    const HttpResponse out = impl_->service.handle(request);
    res.status = out.status;
    for (const auto& [key, value] : out.headers) res.set_header(key, value);
    if (!out.content_type.empty()) res.set_content(out.body, out.content_type);
  };
  auto& http = impl_->http;
  http.Get(R"(/api/.*)", handler);
  http.Post(R"(/api/.*)", handler);
  http.Options(R"(/api/.*)", handler);
  if (!impl_->options.static_dir.empty()) {
    http.set_mount_point("/", impl_->options.static_dir.string());
  }
}

Server::~Server() { stop(); }

bool Server::bind() {
  auto& o = impl_->options;
  if (o.port == 0) {
    impl_->port = impl_->http.bind_to_any_port(o.host);
  } else {
    impl_->port = impl_->http.bind_to_port(o.host, o.port) ? o.port : -1;
  }
  return impl_->port > 0;
}

int Server::port() const noexcept { return impl_->port; }

void Server::listen() { impl_->http.listen_after_bind(); }

void Server::stop() {
  if (impl_ && impl_->http.is_running()) impl_->http.stop();
}

bool serve(const Registry& registry, const ServeOptions& options) {
  Server server(registry, options);
  if (!server.bind()) return false;
  server.listen();
  return true;
}

}  // namespace colortool
