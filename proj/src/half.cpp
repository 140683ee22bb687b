#include "cusp_atlas/half.hpp"

#include <charconv>
#include <stdexcept>

namespace cusp_atlas {

std::string Half::to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

Half Half::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) {
        int value = 0;
        const auto* end = s.data() + s.size();
        auto [ptr, ec] = std::from_chars(s.data(), end, value);
        if (s.empty() || ec != std::errc() || ptr != end)
            throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
        return value;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Half(parse_int(text));
    if (text.substr(slash + 1) != "2")
        throw std::invalid_argument("denominator must be 2: '" + std::string(text) + "'");
    return from_twice(parse_int(text.substr(0, slash)));
}

std::ostream& operator<<(std::ostream& os, Half h) { return os << h.to_string(); }

}  // namespace cusp_atlas
