#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "colortool/palette.hpp"

namespace colortool {

// Named palette specifications, read once and immutable afterwards.
//
// Record grammar (one per line, see core/data/palettes.txt):
//   kind | name | h1 | h2 | c1 | c2 | cmax | l1 | l2 | p1 | p2
class Registry {
 public:
  // Throws RegistryError with the 1-based line of the first bad record.
  static Registry parse(std::string_view text);
  static Registry load(const std::filesystem::path& path);

  // The registry compiled into the library.
  static const Registry& builtin();
  static std::string_view builtin_text();

  // Lowercase with spaces, dashes and underscores removed.
  static std::string normalize(std::string_view name);

  std::span<const PaletteSpec> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  const PaletteSpec* find(std::string_view name) const;

  // Stored spec with overrides applied. Throws UnknownPaletteError carrying
  // names within edit distance 2 when the name does not resolve.
  PaletteSpec get(std::string_view name, const SpecOverrides& overrides = {}) const;

  std::vector<std::string> suggest(std::string_view name, std::size_t max_distance = 2) const;

 private:
  std::vector<PaletteSpec> entries_;
};

}  // namespace colortool
