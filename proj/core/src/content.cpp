#include "bibliolens/content.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "bibliolens/errors.hpp"

namespace bibliolens {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f'; }

Ratio mean_of(const Histogram& h) {
    std::int64_t weighted = 0;
    for (const auto& [key, count] : h.bins()) weighted += std::get<std::int64_t>(key) * static_cast<std::int64_t>(count);
    return Ratio{weighted, h.total() ? static_cast<std::int64_t>(h.total()) : 1};
}

}  // namespace

KeywordFrequency keyword_frequency(const Corpus& corpus, const std::vector<std::string>& places) {
    std::set<std::string> place_keys;
    for (const auto& p : places) place_keys.insert(normalize_keyword(p));

    std::map<std::string, std::map<std::string, std::uint64_t>> forms;
    for (const auto& a : corpus.articles())
        for (const auto& k : a.keywords) {
            auto key = normalize_keyword(k);
            if (!key.empty()) ++forms[key][k];
        }

    KeywordFrequency out{Histogram("keyword"), Histogram("place")};
    for (const auto& [key, raw] : forms) {
        auto best = std::max_element(raw.begin(), raw.end(),
                                     [](const auto& x, const auto& y) { return x.second < y.second; });
        std::uint64_t total = 0;
        for (const auto& [form, n] : raw) total += n;
        (place_keys.count(key) ? out.places : out.general).add(BinKey{best->first}, total);
    }
    return out;
}

std::vector<std::string> load_place_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError(path.string(), "cannot open file");
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);) {
        auto key = normalize_keyword(line);
        if (!key.empty() && key.front() != '#') out.push_back(line);
    }
    return out;
}

CountDistribution keywords_per_article(const Corpus& corpus) {
    CountDistribution d{Histogram("keywords"), {}};
    for (const auto& a : corpus.articles()) d.bins.add(BinKey{static_cast<std::int64_t>(a.keywords.size())});
    d.mean = mean_of(d.bins);
    return d;
}

std::size_t count_words(std::string_view title) {
    std::size_t words = 0;
    bool in_word = false;
    for (char c : title) {
        bool space = is_space(c);
        if (!space && !in_word) ++words;
        in_word = !space;
    }
    return words;
}

TitleWordStats title_word_stats(const Corpus& corpus) {
    TitleWordStats s;
    s.bins.set_label("title words");
    for (const auto& a : corpus.articles()) s.bins.add(BinKey{static_cast<std::int64_t>(count_words(a.title))});
    s.mean = mean_of(s.bins);
    if (s.bins.empty()) return s;
    s.min = std::get<std::int64_t>(s.bins.bins().begin()->first);
    s.max = std::get<std::int64_t>(s.bins.bins().rbegin()->first);
    auto top = s.bins.ranked().front();
    s.mode = std::get<std::int64_t>(top.first);
    s.mode_count = top.second;
    return s;
}

FundingSummary funding_summary(const Corpus& corpus) {
    FundingSummary f;
    f.funder_totals.set_label("funder");
    for (const auto& a : corpus.articles()) {
        auto& year = f.per_year[a.year];
        for (const auto& funder : a.funders) {
            ++f.per_funder[funder][a.year];
            f.funder_totals.add(BinKey{funder});
        }
        for (auto* row : {&f.total, &year}) {
            row->funder_mentions += a.funders.size();
            if (a.type != ArticleType::original) continue;
            ++row->originals;
            if (!a.funders.empty()) ++row->funded_originals;
        }
    }
    return f;
}

}  // namespace bibliolens
