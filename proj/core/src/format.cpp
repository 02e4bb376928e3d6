#include "rwg/format.hpp"

#include <array>
#include <charconv>

namespace rwg {

std::string format_double(double value) {
    std::array<char, 64> buf;
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

std::string file_safe(std::string name) {
    for (char& c : name)
        if (c == ':') c = '-';
    return name;
}

}  // namespace rwg
