#pragma once

#include <string>

namespace sfc {

/// Shortest decimal representation that parses back to exactly the same
/// double. Locale-independent, dot decimal separator.
std::string format_double(double value);

} // namespace sfc
