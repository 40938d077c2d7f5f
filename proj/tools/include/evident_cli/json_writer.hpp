#pragma once

#include <string>

#include "json.hpp"

namespace evident::cli {

/// Two-space indented JSON in insertion order. Floating-point numbers are
/// written with six decimals, so parsing the text and writing it again
/// reproduces it byte for byte.
std::string write_json(const nlohmann::ordered_json& value);

}  // namespace evident::cli
