#include "csv.hpp"

#include <istream>
#include <ostream>

#include "bibliolens/errors.hpp"

namespace bibliolens::csv {

std::optional<Record> Reader::next() {
    int c = in_.get();
    if (c == std::char_traits<char>::eof()) return std::nullopt;

    Record rec;
    rec.line = line_;
    std::string field;
    bool quoted = false;
    bool after_quote = false;
    for (;; c = in_.get()) {
        if (c == std::char_traits<char>::eof()) {
            if (quoted) throw SchemaError("line " + std::to_string(rec.line), "unterminated quoted field");
            break;
        }
        char ch = static_cast<char>(c);
        if (quoted) {
            if (ch == '"') {
                if (in_.peek() == '"') {
                    in_.get();
                    field += '"';
                } else {
                    quoted = false;
                    after_quote = true;
                }
            } else {
                if (ch == '\n') ++line_;
                field += ch;
            }
            continue;
        }
        if (ch == ',') {
            rec.fields.push_back(std::move(field));
            field.clear();
            after_quote = false;
        } else if (ch == '\n') {
            ++line_;
            break;
        } else if (ch == '\r') {
            if (in_.peek() != '\n') field += ch;
        } else if (ch == '"' && field.empty() && !after_quote) {
            quoted = true;
        } else if (after_quote) {
            throw SchemaError("line " + std::to_string(line_), "text after closing quote");
        } else {
            field += ch;
        }
    }
    rec.fields.push_back(std::move(field));
    return rec;
}

std::string quote(std::string_view field) {
    if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        out << quote(fields[i]);
    }
    out << '\n';
}

}  // namespace bibliolens::csv
