#pragma once

#include <nlohmann/json.hpp>
#include <span>

#include "colortool/palette.hpp"

namespace colortool {

// Field names mirror PaletteSpec and the registry file: kind, name, h1, h2,
// c1, c2, cmax, l1, l2, p1, p2, reverse, fixup. Unset optionals are null.
nlohmann::json spec_to_json(const PaletteSpec& spec);

// Throws InvalidSpecError naming the offending field for missing or
// mistyped members, then runs validate().
PaletteSpec spec_from_json(const nlohmann::json& j);

nlohmann::json hex_array(std::span<const HexCode> colors);

}  // namespace colortool
