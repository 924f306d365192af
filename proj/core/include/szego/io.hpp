#pragma once

#include <string>
#include <string_view>

#include "szego/frame_analysis.hpp"
#include "szego/hardy.hpp"

namespace szego {

// JSON shapes:
//   HardyFunction      {"coeffs": [[re, im], ...]}
//   MixedCoefficients  {"K": K, "blocks": [[[re, im], ...], ...]}   block k has k pairs
// Parsers accept extra keys (e.g. an embedded manifest) and throw FormatError.

std::string to_json_text(const HardyFunction& f);
std::string to_json_text(const MixedCoefficients& x);

HardyFunction hardy_from_json_text(std::string_view text);
MixedCoefficients mixed_from_json_text(std::string_view text);

}  // namespace szego
