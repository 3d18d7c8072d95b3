#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace bibliolens {

// Integer keys order before text keys; each kind orders naturally.
using BinKey = std::variant<std::int64_t, std::string>;

std::string key_to_string(const BinKey& key);

class Histogram {
public:
    using Bins = std::map<BinKey, std::uint64_t>;

    Histogram() = default;
    explicit Histogram(std::string label) : label_(std::move(label)) {}

    const std::string& label() const noexcept { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    // Accumulates into the bin, creating it when absent.
    void add(const BinKey& key, std::uint64_t count = 1);

    std::uint64_t count(const BinKey& key) const;
    bool contains(const BinKey& key) const { return bins_.count(key) != 0; }
    std::uint64_t total() const noexcept { return total_; }
    std::size_t size() const noexcept { return bins_.size(); }
    bool empty() const noexcept { return bins_.empty(); }
    const Bins& bins() const noexcept { return bins_; }

    // Descending count, ties broken by ascending key.
    std::vector<std::pair<BinKey, std::uint64_t>> ranked() const;

    friend bool operator==(const Histogram&, const Histogram&) = default;

private:
    std::string label_;
    Bins bins_;
    std::uint64_t total_ = 0;
};

enum class KeyKind {
    integer,  // every key must parse as an integer
    text,     // keys kept verbatim
    mixed,    // integer where the key parses as one, text otherwise
};

// Two-column CSV with header "key,count". Duplicate keys are summed.
Histogram parse_histogram(std::istream& in, KeyKind kind, const std::string& source = "<stream>");
Histogram load_histogram(const std::filesystem::path& path, KeyKind kind);

void write_histogram(std::ostream& out, const Histogram& h);
void save_histogram(const std::filesystem::path& path, const Histogram& h);

}  // namespace bibliolens
