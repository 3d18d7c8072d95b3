#include "bibliolens/histogram.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>

#include "bibliolens/errors.hpp"
#include "csv.hpp"

namespace bibliolens {

namespace {

std::string_view trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::optional<std::int64_t> parse_int(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

}  // namespace

std::string key_to_string(const BinKey& key) {
    if (const auto* i = std::get_if<std::int64_t>(&key)) return std::to_string(*i);
    return std::get<std::string>(key);
}

void Histogram::add(const BinKey& key, std::uint64_t count) {
    bins_[key] += count;
    total_ += count;
}

std::uint64_t Histogram::count(const BinKey& key) const {
    auto it = bins_.find(key);
    return it == bins_.end() ? 0 : it->second;
}

std::vector<std::pair<BinKey, std::uint64_t>> Histogram::ranked() const {
    std::vector<std::pair<BinKey, std::uint64_t>> out(bins_.begin(), bins_.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    return out;
}

Histogram parse_histogram(std::istream& in, KeyKind kind, const std::string& source) {
    csv::Reader reader(in);
    Histogram h;
    bool header_seen = false;
    while (auto rec = reader.next()) {
        auto locator = source + ":" + std::to_string(rec->line);
        if (rec->fields.size() == 1 && trim(rec->fields[0]).empty()) continue;
        if (!header_seen) {
            std::string first = rec->fields[0];
            if (first.rfind("\xEF\xBB\xBF", 0) == 0) first.erase(0, 3);
            if (rec->fields.size() != 2 || trim(first) != "key" || trim(rec->fields[1]) != "count")
                throw SchemaError(locator, "expected header 'key,count'");
            header_seen = true;
            continue;
        }
        if (rec->fields.size() != 2)
            throw SchemaError(locator, "expected 2 fields, found " + std::to_string(rec->fields.size()));
        auto count = parse_int(rec->fields[1]);
        if (!count) throw SchemaError(locator, "count '" + rec->fields[1] + "' is not an integer");
        if (*count < 0) throw NegativeCount(locator + ": negative count " + std::to_string(*count));

        const std::string& raw = rec->fields[0];
        BinKey key;
        if (kind == KeyKind::text) {
            key = raw;
        } else if (auto k = parse_int(raw)) {
            key = *k;
        } else if (kind == KeyKind::mixed) {
            key = std::string(trim(raw));
        } else {
            throw SchemaError(locator, "key '" + raw + "' is not an integer");
        }
        h.add(key, static_cast<std::uint64_t>(*count));
    }
    return h;
}

Histogram load_histogram(const std::filesystem::path& path, KeyKind kind) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError(path.string(), "cannot open file");
    Histogram h = parse_histogram(in, kind, path.string());
    h.set_label(path.stem().string());
    return h;
}

void write_histogram(std::ostream& out, const Histogram& h) {
    out << "key,count\n";
    for (const auto& [key, count] : h.bins()) csv::write_row(out, {key_to_string(key), std::to_string(count)});
}

void save_histogram(const std::filesystem::path& path, const Histogram& h) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    write_histogram(out, h);
}

}  // namespace bibliolens
