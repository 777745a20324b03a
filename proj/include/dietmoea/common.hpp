#pragma once

#include <charconv>
#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dietmoea {

enum class Errc {
    parse,
    category,
    empty_dataset,
    parameter,
    mapping,
    inconsistency,
    repair_failure,
    dimension,
    state,
    io,
    config,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

/// Currency amount in integer cents; two-decimal money never accumulates
/// floating point error this way.
struct Money {
    std::int64_t cents = 0;

    constexpr Money() = default;
    constexpr explicit Money(std::int64_t c) : cents(c) {}

    static Money from_units(double units) {
        return Money(static_cast<std::int64_t>(std::llround(units * 100.0)));
    }

    double units() const { return static_cast<double>(cents) / 100.0; }

    std::string str() const {
        const std::int64_t a = cents < 0 ? -cents : cents;
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%s%lld.%02lld", cents < 0 ? "-" : "",
                      static_cast<long long>(a / 100), static_cast<long long>(a % 100));
        return buf;
    }

    friend constexpr auto operator<=>(const Money&, const Money&) = default;
    constexpr Money& operator+=(Money o) {
        cents += o.cents;
        return *this;
    }
    friend constexpr Money operator+(Money a, Money b) { return Money(a.cents + b.cents); }
    friend constexpr Money operator*(Money a, std::int64_t s) { return Money(a.cents * s); }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline double parse_double(std::string_view text, Errc code, const std::string& context) {
    text = trim(text);
    double value = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty())
        fail(code, context + ": not a number: '" + std::string(text) + "'");
    return value;
}

inline long long parse_int(std::string_view text, Errc code, const std::string& context) {
    text = trim(text);
    long long value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty())
        fail(code, context + ": not an integer: '" + std::string(text) + "'");
    return value;
}

/// Shortest decimal string that parses back to exactly the same double.
inline std::string format_double(double v) {
    char buf[64];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

}  // namespace detail

inline Money parse_money(std::string_view text, const std::string& context = "money") {
    const double units = detail::parse_double(text, Errc::parse, context);
    return Money::from_units(units);
}

}  // namespace dietmoea
