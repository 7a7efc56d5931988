#include "tsptw/time.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

#include "tsptw/errors.hpp"

namespace tsptw {

TimeInstant TimeInstant::operator+(TimeInstant rhs) const {
    if (!finite() || !rhs.finite()) {
        if (is_plus_inf() && rhs.is_minus_inf()) throw std::domain_error("time: inf + -inf");
        if (is_minus_inf() && rhs.is_plus_inf()) throw std::domain_error("time: -inf + inf");
        return is_plus_inf() || rhs.is_plus_inf() ? plus_inf() : minus_inf();
    }
    std::int64_t out = 0;
    if (__builtin_add_overflow(units_, rhs.units_, &out) || out == kPlusInf || out == kMinusInf)
        throw std::overflow_error("time: addition overflow");
    return TimeInstant(out);
}

TimeInstant TimeInstant::operator-(TimeInstant rhs) const {
    if (!finite() || !rhs.finite()) {
        if (is_plus_inf() && rhs.is_plus_inf()) throw std::domain_error("time: inf - inf");
        if (is_minus_inf() && rhs.is_minus_inf()) throw std::domain_error("time: -inf - -inf");
        if (is_plus_inf() || rhs.is_minus_inf()) return plus_inf();
        return minus_inf();
    }
    std::int64_t out = 0;
    if (__builtin_sub_overflow(units_, rhs.units_, &out) || out == kPlusInf || out == kMinusInf)
        throw std::overflow_error("time: subtraction overflow");
    return TimeInstant(out);
}

TimeInstant parse_scaled_time(std::string_view text, int scale) {
    if (scale < 0) throw std::invalid_argument("negative decimal scale");
    std::size_t i = 0;
    if (i < text.size() && text[i] == '+') ++i;
    if (i < text.size() && text[i] == '-')
        throw ParseError(ParseError::Kind::Negative, "negative time value '" + std::string(text) + "'");
    std::size_t digits_begin = i;
    std::int64_t value = 0;
    auto push_digit = [&value](char c) {
        if (__builtin_mul_overflow(value, std::int64_t{10}, &value) ||
            __builtin_add_overflow(value, std::int64_t{c - '0'}, &value))
            throw ParseError(ParseError::Kind::Malformed, "time value out of range");
    };
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) push_digit(text[i++]);
    if (i == digits_begin)
        throw ParseError(ParseError::Kind::Malformed, "expected a number, got '" + std::string(text) + "'");
    int frac_digits = 0;
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            if (frac_digits < scale) {
                push_digit(text[i]);
                ++frac_digits;
            } else if (text[i] != '0') {
                throw ParseError(ParseError::Kind::NonDecimal,
                                 "value '" + std::string(text) + "' has more than " +
                                     std::to_string(scale) + " significant decimal digits");
            }
            ++i;
        }
    }
    if (i != text.size())
        throw ParseError(ParseError::Kind::Malformed, "trailing characters in '" + std::string(text) + "'");
    for (; frac_digits < scale; ++frac_digits) {
        if (__builtin_mul_overflow(value, std::int64_t{10}, &value))
            throw ParseError(ParseError::Kind::Malformed, "time value out of range");
    }
    return TimeInstant::of(value);
}

std::string format_scaled_time(TimeInstant t, int scale) {
    if (t.is_plus_inf()) return "inf";
    if (t.is_minus_inf()) return "-inf";
    std::int64_t v = t.units();
    bool negative = v < 0;
    unsigned long long mag = negative ? 0ULL - static_cast<unsigned long long>(v)
                                      : static_cast<unsigned long long>(v);
    std::string digits = std::to_string(mag);
    if (scale == 0) return (negative ? "-" : "") + digits;
    if (static_cast<int>(digits.size()) <= scale)
        digits.insert(0, scale + 1 - digits.size(), '0');
    digits.insert(digits.size() - scale, ".");
    return (negative ? "-" : "") + digits;
}

}  // namespace tsptw
