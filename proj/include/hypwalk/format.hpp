#pragma once

#include <string>

namespace hypwalk {

/// Shortest round-trip decimal form (std::to_chars), so serialized reports
/// and CSV are stable and machine-diffable.
std::string format_double(double v);

}  // namespace hypwalk
