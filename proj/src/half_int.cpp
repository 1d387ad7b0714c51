#include "regge6j/half_int.hpp"

#include <stdexcept>

namespace regge6j {

std::string to_string(HalfInt h) {
    if (h.is_integer()) return std::to_string(h.twice / 2);
    return std::to_string(h.twice) + "/2";
}

HalfInt parse_half_int(const std::string& text) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a spin value: '" + text + "'");
    }
    if (pos == text.size()) {
        if (v < 0 || v > (1 << 20)) throw std::invalid_argument("spin out of range: '" + text + "'");
        return HalfInt{static_cast<int>(2 * v)};
    }
    if (text.substr(pos) != "/2" || v < 0 || v > (1 << 20))
        throw std::invalid_argument("not a spin value: '" + text + "'");
    return HalfInt{static_cast<int>(v)};
}

} // namespace regge6j
