#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bibliolens/decimal.hpp"

namespace bibliolens {

// One rendered value. Real cells carry both the full-precision number and
// the display string; renderers decide which to show.
class Cell {
public:
    enum class Kind { text, integer, real };

    static Cell text(std::string s);
    static Cell integer(std::int64_t v);
    static Cell count(std::uint64_t v) { return integer(static_cast<std::int64_t>(v)); }
    static Cell real(double value, std::string display);
    // 100 * r, shown half-up at `decimals` places.
    static Cell percent(Ratio r, int decimals = 2);
    // r, shown half-up at `decimals` places.
    static Cell rounded(Ratio r, int decimals);
    // r, shown truncated at `decimals` places.
    static Cell truncated(Ratio r, int decimals);
    static Cell rounded(double v, int decimals);

    Kind kind() const noexcept { return kind_; }
    const std::string& display() const noexcept { return display_; }
    // Full-precision text: shortest round-trip form for reals.
    std::string exact() const;
    double value() const noexcept { return value_; }
    std::int64_t integer_value() const noexcept { return integer_; }

    friend bool operator==(const Cell&, const Cell&) = default;

private:
    Kind kind_ = Kind::text;
    std::string display_;
    double value_ = 0.0;
    std::int64_t integer_ = 0;
};

struct Table {
    std::string id;     // stable machine name, e.g. "articles_per_year"
    std::string title;  // human caption
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> notes;

    void add_row(std::vector<Cell> row);
    friend bool operator==(const Table&, const Table&) = default;
};

struct Document {
    std::string title;
    std::vector<Table> tables;

    const Table* find(std::string_view id) const;
};

enum class Format { csv, json, md };

std::string_view to_string(Format f);
Format parse_format(std::string_view s);  // throws std::invalid_argument

// CSV: a column holding any real cell is followed by "<name>_exact".
// Several tables are separated by a blank line and a "# <id>" line.
std::string render(const Document& doc, Format format);

}  // namespace bibliolens
