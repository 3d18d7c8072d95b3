#include "bibliolens/table.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "csv.hpp"

namespace bibliolens {

Cell Cell::text(std::string s) {
    Cell c;
    c.kind_ = Kind::text;
    c.display_ = std::move(s);
    return c;
}

Cell Cell::integer(std::int64_t v) {
    Cell c;
    c.kind_ = Kind::integer;
    c.integer_ = v;
    c.value_ = static_cast<double>(v);
    c.display_ = std::to_string(v);
    return c;
}

Cell Cell::real(double value, std::string display) {
    Cell c;
    c.kind_ = Kind::real;
    c.value_ = value;
    c.display_ = std::move(display);
    return c;
}

Cell Cell::percent(Ratio r, int decimals) {
    return real(100.0 * static_cast<double>(r.num) / static_cast<double>(r.den), bibliolens::percent(r, decimals));
}

Cell Cell::rounded(Ratio r, int decimals) { return real(r.value(), round_half_up(r, decimals)); }

Cell Cell::truncated(Ratio r, int decimals) { return real(r.value(), truncate(r, decimals)); }

Cell Cell::rounded(double v, int decimals) { return real(v, round_half_up(v, decimals)); }

std::string Cell::exact() const { return kind_ == Kind::real ? format_exact(value_) : display_; }

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size())
        throw std::logic_error("table '" + id + "': row has " + std::to_string(row.size()) + " cells for " +
                               std::to_string(columns.size()) + " columns");
    rows.push_back(std::move(row));
}

const Table* Document::find(std::string_view id) const {
    for (const auto& t : tables)
        if (t.id == id) return &t;
    return nullptr;
}

std::string_view to_string(Format f) {
    switch (f) {
        case Format::csv: return "csv";
        case Format::json: return "json";
        case Format::md: return "md";
    }
    return "md";
}

Format parse_format(std::string_view s) {
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    if (s == "md" || s == "markdown") return Format::md;
    throw std::invalid_argument("unknown format '" + std::string(s) + "'");
}

namespace {

std::vector<bool> real_columns(const Table& t) {
    std::vector<bool> real(t.columns.size(), false);
    for (const auto& row : t.rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            if (row[i].kind() == Cell::Kind::real) real[i] = true;
    return real;
}

void render_csv(std::ostream& out, const Table& t) {
    auto real = real_columns(t);
    std::vector<std::string> header;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        header.push_back(t.columns[i]);
        if (real[i]) header.push_back(t.columns[i] + "_exact");
    }
    csv::write_row(out, header);
    for (const auto& row : t.rows) {
        std::vector<std::string> fields;
        for (std::size_t i = 0; i < row.size(); ++i) {
            fields.push_back(row[i].display());
            if (real[i]) fields.push_back(row[i].exact());
        }
        csv::write_row(out, fields);
    }
}

nlohmann::ordered_json cell_json(const Cell& c) {
    switch (c.kind()) {
        case Cell::Kind::text: return c.display();
        case Cell::Kind::integer: return c.integer_value();
        case Cell::Kind::real: {
            nlohmann::ordered_json j;
            j["value"] = c.value();
            j["display"] = c.display();
            return j;
        }
    }
    return nullptr;
}

std::string md_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '|') out += '\\';
        out += ch == '\n' ? ' ' : ch;
    }
    return out;
}

void render_md(std::ostream& out, const Table& t) {
    out << "## " << md_escape(t.title) << "\n\n";
    std::vector<bool> numeric(t.columns.size(), !t.rows.empty());
    for (const auto& row : t.rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            if (row[i].kind() == Cell::Kind::text && !row[i].display().empty() && i > 0) numeric[i] = false;
    if (!numeric.empty()) numeric[0] = false;
    out << '|';
    for (const auto& c : t.columns) out << ' ' << md_escape(c) << " |";
    out << "\n|";
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (numeric[i] ? " ---: |" : " --- |");
    out << '\n';
    for (const auto& row : t.rows) {
        out << '|';
        for (const auto& c : row) out << ' ' << md_escape(c.display()) << " |";
        out << '\n';
    }
    for (const auto& n : t.notes) out << "\n" << md_escape(n) << "\n";
    out << '\n';
}

}  // namespace

std::string render(const Document& doc, Format format) {
    std::ostringstream out;
    switch (format) {
        case Format::csv:
            if (doc.tables.size() == 1) {
                render_csv(out, doc.tables.front());
                break;
            }
            for (std::size_t i = 0; i < doc.tables.size(); ++i) {
                if (i) out << '\n';
                out << "# " << doc.tables[i].id << '\n';
                render_csv(out, doc.tables[i]);
            }
            break;
        case Format::json: {
            nlohmann::ordered_json root;
            root["title"] = doc.title;
            root["tables"] = nlohmann::ordered_json::array();
            for (const auto& t : doc.tables) {
                nlohmann::ordered_json jt;
                jt["id"] = t.id;
                jt["title"] = t.title;
                jt["columns"] = t.columns;
                jt["rows"] = nlohmann::ordered_json::array();
                for (const auto& row : t.rows) {
                    nlohmann::ordered_json jr;
                    for (std::size_t i = 0; i < row.size(); ++i) jr[t.columns[i]] = cell_json(row[i]);
                    jt["rows"].push_back(std::move(jr));
                }
                jt["notes"] = t.notes;
                root["tables"].push_back(std::move(jt));
            }
            out << root.dump(2) << '\n';
            break;
        }
        case Format::md:
            out << "# " << md_escape(doc.title) << "\n\n";
            for (const auto& t : doc.tables) render_md(out, t);
            break;
    }
    return out.str();
}

}  // namespace bibliolens
