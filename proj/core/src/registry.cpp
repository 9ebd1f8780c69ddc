#include "colortool/registry.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "colortool/error.hpp"
#include "colortool/numfmt.hpp"

namespace colortool {

// Defined in the generated builtin_registry.cpp.
extern const std::string_view kBuiltinRegistryText;

namespace {

constexpr std::size_t kFieldCount = 11;
constexpr const char* kFieldNames[kFieldCount] = {"kind", "name", "h1", "h2", "c1", "c2",
                                                  "cmax", "l1",   "l2", "p1", "p2"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto bar = line.find('|', start);
    fields.push_back(trim(line.substr(start, bar == std::string_view::npos ? bar : bar - start)));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return fields;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  std::iota(prev.begin(), prev.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t subst = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, subst});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

PaletteSpec parse_record(std::string_view line, std::size_t line_no) {
  const auto fields = split_fields(line);
  if (fields.size() != kFieldCount) {
    throw RegistryError("line " + std::to_string(line_no) + ": expected " +
                            std::to_string(kFieldCount) + " '|'-separated fields, found " +
                            std::to_string(fields.size()),
                        line_no);
  }

  auto number = [&](std::size_t k) -> std::optional<double> {
    if (fields[k].empty()) return std::nullopt;
    const auto value = parse_number(fields[k]);
    if (!value) {
      throw RegistryError("line " + std::to_string(line_no) + ": field " + kFieldNames[k] +
                              " is not a number: \"" + std::string(fields[k]) + "\"",
                          line_no);
    }
    return value;
  };
  auto required = [&](std::size_t k) {
    const auto value = number(k);
    if (!value) {
      throw RegistryError("line " + std::to_string(line_no) + ": field " + kFieldNames[k] +
                              " is required",
                          line_no);
    }
    return *value;
  };

  PaletteSpec spec;
  try {
    spec.kind = parse_palette_kind(fields[0]);
  } catch (const InvalidInputError& e) {
    throw RegistryError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
  }
  if (fields[1].empty()) {
    throw RegistryError("line " + std::to_string(line_no) + ": field name is required", line_no);
  }
  spec.name = std::string(fields[1]);
  spec.h1 = required(2);
  spec.h2 = number(3);
  spec.c1 = required(4);
  spec.c2 = number(5);
  spec.cmax = number(6);
  spec.l1 = required(7);
  spec.l2 = number(8);
  spec.p1 = number(9).value_or(1.0);
  spec.p2 = number(10);

  try {
    validate(spec);
  } catch (const InvalidSpecError& e) {
    throw RegistryError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
  }
  return spec;
}

}  // namespace

Registry Registry::parse(std::string_view text) {
  Registry registry;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const auto line = trim(text.substr(start, end == std::string_view::npos ? end : end - start));
    ++line_no;
    if (!line.empty() && line.front() != '#') {
      PaletteSpec spec = parse_record(line, line_no);
      if (registry.find(spec.name) != nullptr) {
        throw RegistryError("line " + std::to_string(line_no) + ": duplicate palette name \"" +
                                spec.name + "\"",
                            line_no);
      }
      registry.entries_.push_back(std::move(spec));
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return registry;
}

Registry Registry::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw RegistryError("cannot open registry file " + path.string(), 0);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

const Registry& Registry::builtin() {
  static const Registry registry = parse(kBuiltinRegistryText);
  return registry;
}

std::string_view Registry::builtin_text() { return kBuiltinRegistryText; }

std::string Registry::normalize(std::string_view name) {
  std::string out;
  out.reserve(name.size());
  for (char ch : name) {
    if (ch == ' ' || ch == '-' || ch == '_' || ch == '\t') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  return out;
}

const PaletteSpec* Registry::find(std::string_view name) const {
  const std::string key = normalize(name);
  for (const auto& spec : entries_) {
    if (normalize(spec.name) == key) return &spec;
  }
  return nullptr;
}

PaletteSpec Registry::get(std::string_view name, const SpecOverrides& overrides) const {
  const PaletteSpec* stored = find(name);
  if (stored == nullptr) {
    auto suggestions = suggest(name);
    std::string message = "unknown palette \"" + std::string(name) + "\"";
    if (suggestions.empty()) {
      suggestions = suggest(name, std::numeric_limits<std::size_t>::max());
      if (suggestions.size() > 3) suggestions.resize(3);
    }
    if (!suggestions.empty()) {
      message += "; did you mean ";
      for (std::size_t k = 0; k < suggestions.size(); ++k) {
        message += (k ? ", \"" : "\"") + suggestions[k] + "\"";
      }
      message += "?";
    }
    throw UnknownPaletteError(message, std::move(suggestions));
  }
  PaletteSpec spec = *stored;
  apply_overrides(spec, overrides);
  return spec;
}

std::vector<std::string> Registry::suggest(std::string_view name, std::size_t max_distance) const {
  const std::string key = normalize(name);
  std::vector<std::pair<std::size_t, std::string>> scored;
  for (const auto& spec : entries_) {
    const std::size_t d = edit_distance(key, normalize(spec.name));
    if (d <= max_distance) scored.emplace_back(d, spec.name);
  }
  std::sort(scored.begin(), scored.end());
  std::vector<std::string> out;
  for (auto& [d, n] : scored) out.push_back(std::move(n));
  return out;
}

}  // namespace colortool
