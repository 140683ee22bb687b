// Exact half-integers stored as doubled integers.
#pragma once

#include <compare>
#include <cstdlib>
#include <ostream>
#include <string>
#include <string_view>

namespace cusp_atlas {

class Half {
public:
    constexpr Half() = default;
    constexpr Half(int integer) : twice_(2 * integer) {}  // NOLINT(google-explicit-constructor)

    static constexpr Half from_twice(int twice) {
        Half h;
        h.twice_ = twice;
        return h;
    }

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    constexpr Half operator-() const { return from_twice(-twice_); }
    constexpr Half operator+(Half o) const { return from_twice(twice_ + o.twice_); }
    constexpr Half operator-(Half o) const { return from_twice(twice_ - o.twice_); }
    constexpr Half abs() const { return from_twice(twice_ < 0 ? -twice_ : twice_); }

    constexpr auto operator<=>(const Half&) const = default;

    // "3/2", "-1/2", "2", "0".
    std::string to_string() const;

    // Accepts "n", "n/2" and "-n/2"; throws std::invalid_argument otherwise.
    static Half parse(std::string_view text);

private:
    int twice_ = 0;
};

std::ostream& operator<<(std::ostream& os, Half h);

}  // namespace cusp_atlas
