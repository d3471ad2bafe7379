#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace wsuper {

// Half-integer stored as twice its value, so arithmetic stays exact and ordered.
struct HalfInt {
    std::int64_t twice = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(std::int64_t t) : twice(t) {}

    static constexpr HalfInt whole(std::int64_t n) { return HalfInt(2 * n); }
    static constexpr HalfInt halves(std::int64_t t) { return HalfInt(t); }

    constexpr bool is_integer() const { return twice % 2 == 0; }
    constexpr std::int64_t integer_value() const { return twice / 2; } // valid when is_integer()

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice + b.twice); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice - b.twice); }
    constexpr HalfInt operator-() const { return HalfInt(-twice); }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    constexpr HalfInt abs() const { return HalfInt(twice < 0 ? -twice : twice); }

    std::string to_string() const {
        if (is_integer())
            return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }
};

} // namespace wsuper
