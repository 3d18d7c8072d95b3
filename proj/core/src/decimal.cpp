#include "bibliolens/decimal.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace bibliolens {

namespace {

__extension__ typedef __int128 Wide;

// Every finite double has a terminating decimal expansion with at most 1074
// fractional digits, so printing this many digits is exact.
constexpr int kExactDigits = 1080;

struct Digits {
    bool negative = false;
    std::string whole;
    std::string frac;
};

Digits exact_digits(double x) {
    if (!std::isfinite(x)) throw std::domain_error("non-finite value");
    std::array<char, 1500> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), std::fabs(x),
                                   std::chars_format::fixed, kExactDigits);
    if (ec != std::errc{}) throw std::runtime_error("decimal conversion failed");
    std::string s(buf.data(), end);
    Digits d;
    d.negative = std::signbit(x);
    auto dot = s.find('.');
    d.whole = s.substr(0, dot);
    d.frac = s.substr(dot + 1);
    return d;
}

// Adds one unit in the last place of `whole.frac`.
void increment(std::string& whole, std::string& frac) {
    for (auto it = frac.rbegin(); it != frac.rend(); ++it) {
        if (*it != '9') {
            ++*it;
            return;
        }
        *it = '0';
    }
    for (auto it = whole.rbegin(); it != whole.rend(); ++it) {
        if (*it != '9') {
            ++*it;
            return;
        }
        *it = '0';
    }
    whole.insert(whole.begin(), '1');
}

std::string assemble(bool negative, const std::string& whole, const std::string& frac) {
    bool zero = whole.find_first_not_of('0') == std::string::npos &&
                frac.find_first_not_of('0') == std::string::npos;
    std::string out = (negative && !zero) ? "-" : "";
    out += whole;
    if (!frac.empty()) out += "." + frac;
    return out;
}

std::string scaled_integer_display(Wide scaled, int decimals, bool negative) {
    std::string digits;
    do {
        digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
        scaled /= 10;
    } while (scaled > 0);
    if (static_cast<int>(digits.size()) <= decimals)
        digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
    std::string whole = digits.substr(0, digits.size() - static_cast<std::size_t>(decimals));
    std::string frac = digits.substr(digits.size() - static_cast<std::size_t>(decimals));
    return assemble(negative, whole, frac);
}

Wide pow10(int n) {
    Wide p = 1;
    for (int i = 0; i < n; ++i) p *= 10;
    return p;
}

std::string ratio_display(Ratio r, int decimals, int extra_scale, bool round) {
    if (!r.defined()) throw std::domain_error("ratio with zero denominator");
    if (decimals < 0) throw std::invalid_argument("negative decimal count");
    bool negative = (r.num < 0) != (r.den < 0);
    Wide num = r.num < 0 ? -static_cast<Wide>(r.num) : r.num;
    Wide den = r.den < 0 ? -static_cast<Wide>(r.den) : r.den;
    Wide scaled_num = num * pow10(decimals + extra_scale);
    Wide q = scaled_num / den;
    Wide rem = scaled_num % den;
    if (round && rem * 2 >= den) ++q;
    return scaled_integer_display(q, decimals, negative);
}

}  // namespace

double Ratio::value() const noexcept {
    return static_cast<double>(num) / static_cast<double>(den);
}

bool Ratio::same_value(const Ratio& other) const noexcept {
    return static_cast<Wide>(num) * other.den == static_cast<Wide>(other.num) * den;
}

std::string format_exact(double x) {
    if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    if (ec != std::errc{}) throw std::runtime_error("decimal conversion failed");
    return std::string(buf.data(), end);
}

std::string round_half_up(double x, int decimals) {
    if (decimals < 0) throw std::invalid_argument("negative decimal count");
    Digits d = exact_digits(x);
    auto keep = static_cast<std::size_t>(decimals);
    bool up = d.frac[keep] >= '5';
    std::string frac = d.frac.substr(0, keep);
    if (up) increment(d.whole, frac);
    return assemble(d.negative, d.whole, frac);
}

std::string truncate(double x, int decimals) {
    if (decimals < 0) throw std::invalid_argument("negative decimal count");
    Digits d = exact_digits(x);
    return assemble(d.negative, d.whole, d.frac.substr(0, static_cast<std::size_t>(decimals)));
}

std::string round_half_up(Ratio r, int decimals) { return ratio_display(r, decimals, 0, true); }

std::string truncate(Ratio r, int decimals) { return ratio_display(r, decimals, 0, false); }

std::string percent(Ratio r, int decimals) { return ratio_display(r, decimals, 2, true); }

std::int64_t round_half_up_int(double x) {
    if (!std::isfinite(x)) throw std::domain_error("non-finite value");
    double a = std::fabs(x);
    double f = std::floor(a);
    // a - floor(a) is exact in binary floating point.
    double r = (a - f >= 0.5) ? f + 1.0 : f;
    return static_cast<std::int64_t>(std::signbit(x) ? -r : r);
}

}  // namespace bibliolens
