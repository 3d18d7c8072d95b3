#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bibliolens::csv {

struct Record {
    std::vector<std::string> fields;
    std::size_t line = 0;  // 1-based line where the record starts
};

// RFC 4180 reader: quoted fields may contain commas, doubled quotes and
// newlines. CR before LF is tolerated.
class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}
    std::optional<Record> next();

private:
    std::istream& in_;
    std::size_t line_ = 1;
};

std::string quote(std::string_view field);
void write_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace bibliolens::csv
