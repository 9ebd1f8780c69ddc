#include "colortool/json_io.hpp"

#include "colortool/error.hpp"

namespace colortool {
namespace {

using nlohmann::json;

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> read_optional(const json& j, const char* field) {
  const auto it = j.find(field);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_number()) {
    throw InvalidSpecError(field, std::string(field) + " must be a number or null");
  }
  return it->get<double>();
}

double read_required(const json& j, const char* field) {
  const auto v = read_optional(j, field);
  if (!v) {
    throw InvalidSpecError(field, std::string(field) + " is required");
  }
  return *v;
}

bool read_flag(const json& j, const char* field, bool fallback) {
  const auto it = j.find(field);
  if (it == j.end() || it->is_null()) return fallback;
  if (!it->is_boolean()) {
    throw InvalidSpecError(field, std::string(field) + " must be a boolean");
  }
  return it->get<bool>();
}

}  // namespace

json spec_to_json(const PaletteSpec& spec) {
  return json{
      {"kind", std::string(to_string(spec.kind))},
      {"name", spec.name},
      {"h1", spec.h1},
      {"h2", optional_number(spec.h2)},
      {"c1", spec.c1},
      {"c2", optional_number(spec.c2)},
      {"cmax", optional_number(spec.cmax)},
      {"l1", spec.l1},
      {"l2", optional_number(spec.l2)},
      {"p1", spec.p1},
      {"p2", optional_number(spec.p2)},
      {"reverse", spec.reverse},
      {"fixup", spec.fixup},
  };
}

PaletteSpec spec_from_json(const json& j) {
  if (!j.is_object()) {
    throw InvalidSpecError("spec", "spec must be a JSON object");
  }
  PaletteSpec spec;
  const auto kind = j.find("kind");
  if (kind == j.end() || !kind->is_string()) {
    throw InvalidSpecError("kind", "kind is required (qualitative, sequential or diverging)");
  }
  try {
    spec.kind = parse_palette_kind(kind->get<std::string>());
  } catch (const InvalidInputError& e) {
    throw InvalidSpecError("kind", e.what());
  }
  if (const auto name = j.find("name"); name != j.end() && !name->is_null()) {
    if (!name->is_string()) throw InvalidSpecError("name", "name must be a string");
    spec.name = name->get<std::string>();
  }
  spec.h1 = read_required(j, "h1");
  spec.h2 = read_optional(j, "h2");
  spec.c1 = read_required(j, "c1");
  spec.c2 = read_optional(j, "c2");
  spec.cmax = read_optional(j, "cmax");
  spec.l1 = read_required(j, "l1");
  spec.l2 = read_optional(j, "l2");
  spec.p1 = read_optional(j, "p1").value_or(1.0);
  spec.p2 = read_optional(j, "p2");
  spec.reverse = read_flag(j, "reverse", false);
  spec.fixup = read_flag(j, "fixup", true);
  validate(spec);
  return spec;
}

json hex_array(std::span<const HexCode> colors) {
  json out = json::array();
  for (const auto& c : colors) out.push_back(c.text());
  return out;
}

}  // namespace colortool
