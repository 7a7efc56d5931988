#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace tsptw {

// Time in scaled integer units: raw file values are multiplied by 10^d when
// an instance is read at decimal scale d, so every event time is an exact
// integer.  Two sentinels represent "unreachable" (plus_inf) and "no such
// time" (minus_inf); finite arithmetic is overflow-checked.
class TimeInstant {
public:
    constexpr TimeInstant() = default;

    static constexpr TimeInstant of(std::int64_t units) { return TimeInstant(units); }
    static constexpr TimeInstant plus_inf() { return TimeInstant(kPlusInf); }
    static constexpr TimeInstant minus_inf() { return TimeInstant(kMinusInf); }
    static constexpr TimeInstant zero() { return TimeInstant(0); }

    constexpr std::int64_t units() const { return units_; }
    constexpr bool finite() const { return units_ != kPlusInf && units_ != kMinusInf; }
    constexpr bool is_plus_inf() const { return units_ == kPlusInf; }
    constexpr bool is_minus_inf() const { return units_ == kMinusInf; }

    // Sentinels sit at the extremes of the raw range, so ordinary integer
    // comparison orders minus_inf < finite < plus_inf.
    friend constexpr auto operator<=>(TimeInstant lhs, TimeInstant rhs) = default;

    // Infinities absorb; finite overflow and inf + (-inf) throw.
    TimeInstant operator+(TimeInstant rhs) const;
    TimeInstant operator-(TimeInstant rhs) const;
    TimeInstant& operator+=(TimeInstant rhs) { return *this = *this + rhs; }
    TimeInstant& operator-=(TimeInstant rhs) { return *this = *this - rhs; }

private:
    static constexpr std::int64_t kPlusInf = INT64_MAX;
    static constexpr std::int64_t kMinusInf = INT64_MIN;

    explicit constexpr TimeInstant(std::int64_t units) : units_(units) {}

    std::int64_t units_ = 0;
};

// Exact decimal conversion at scale d ("12.3" at d=1 <-> 123 units).  No
// floating point round trip: digits beyond the d-th decimal must be zero.
TimeInstant parse_scaled_time(std::string_view text, int scale);
std::string format_scaled_time(TimeInstant t, int scale);

}  // namespace tsptw
