#pragma once

#include <cstdint>
#include <string>

namespace bibliolens {

// Exact quotient of two counts. Most indicators are count ratios, so keeping
// them exact lets display rounding be done in integer arithmetic.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    bool defined() const noexcept { return den != 0; }
    double value() const noexcept;

    // Equal as rational numbers, not as stored pairs.
    bool same_value(const Ratio& other) const noexcept;

    friend bool operator==(const Ratio&, const Ratio&) = default;
};

// Shortest decimal string that round-trips to the same double.
std::string format_exact(double x);

// Decimal display with half-up rounding (ties away from zero) at `decimals`
// places, computed on the exact binary value of `x`.
std::string round_half_up(double x, int decimals);

// Decimal display truncated toward zero at `decimals` places.
std::string truncate(double x, int decimals);

// Ratio display in integer arithmetic.
std::string round_half_up(Ratio r, int decimals);
std::string truncate(Ratio r, int decimals);

// 100 * r, half-up at `decimals` places ("87.77").
std::string percent(Ratio r, int decimals = 2);

// Half-up rounding to the nearest integer.
std::int64_t round_half_up_int(double x);

}  // namespace bibliolens
