#include "sfc/text.hpp"

#include <array>
#include <charconv>
#include <system_error>

namespace sfc {

std::string format_double(double value) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), res.ptr);
}

} // namespace sfc
