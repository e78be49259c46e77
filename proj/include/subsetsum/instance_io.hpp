#pragma once

#include <string>
#include <string_view>

#include "subsetsum/core.hpp"

namespace subsetsum {

/// Parses the text instance format:
///   line 1: `n u t`   (t an integer, or `-` when absent)
///   line 2: n space-separated positive integers
/// Throws InputError with a line-numbered message on malformed input.
Instance parse_instance(std::string_view text);

/// Serializes an Instance back into the text format, trailing newline
/// included.
std::string format_instance(const Instance& inst);

}  // namespace subsetsum
