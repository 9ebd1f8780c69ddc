#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "colortool/color.hpp"

namespace colortool {

enum class CvdKind { deutan, protan, tritan };

std::string_view to_string(CvdKind kind);
CvdKind parse_cvd_kind(std::string_view text);

// Severity-indexed simulation matrices (severities 0.0, 0.1, ..., 1.0) acting
// on linear RGB, from Machado, Oliveira & Fernandes (2009).
using CvdTable = std::array<Matrix3, 11>;

const CvdTable& cvd_table(CvdKind kind);

// Stored matrix at multiples of 0.1, elementwise linear interpolation in
// between. Throws InvalidSeverityError outside [0,1].
Matrix3 cvd_matrix(CvdKind kind, double severity);

// FNV-1a over every table entry expressed in integer millionths. Guards the
// embedded constants against accidental edits.
std::uint64_t cvd_table_checksum();
inline constexpr std::uint64_t kCvdTableChecksum = 0xB4A85405964F77EAULL;

}  // namespace colortool
