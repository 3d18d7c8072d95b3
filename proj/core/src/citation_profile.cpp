#include "bibliolens/citation_profile.hpp"

#include <algorithm>
#include <cmath>

#include "bibliolens/errors.hpp"

namespace bibliolens {

namespace {

BinKey int_key(std::int64_t v) { return BinKey{v}; }

std::int64_t signed_count(std::uint64_t v) { return static_cast<std::int64_t>(v); }

void fill_half_life(AgeProfile& p) {
    if (p.dated == 0) return;
    double target = static_cast<double>(p.dated) / 2.0;
    std::uint64_t cumulative = 0;
    for (const auto& [key, count] : p.ages.bins()) {
        auto previous = cumulative;
        cumulative += count;
        // Integer comparison of cumulative >= dated / 2.
        if (2 * cumulative >= p.dated) {
            auto age = std::get<std::int64_t>(key);
            p.half_life_integer = age;
            p.half_life_interpolated =
                static_cast<double>(age - 1) + (target - static_cast<double>(previous)) / static_cast<double>(count);
            return;
        }
    }
}

}  // namespace

ReferenceCounts references_per_year(const Corpus& corpus) {
    ReferenceCounts r;
    r.per_year.set_label("references");
    for (const auto& a : corpus.articles()) {
        r.per_year.add(int_key(a.year), a.references.size());
        ++r.articles_per_year[a.year];
    }
    r.total = r.per_year.total();
    r.articles = corpus.size();
    r.mean_per_article = Ratio{signed_count(r.total), r.articles ? signed_count(r.articles) : 1};
    return r;
}

std::string RangeBucket::label() const {
    return hi ? std::to_string(lo) + "-" + std::to_string(*hi) : ">" + std::to_string(lo - 1);
}

std::vector<std::int64_t> default_reference_edges() { return {0, 10, 20, 30, 40, 50, 60, 70, 80, 90}; }

std::vector<RangeBucket> refs_per_article_ranges(const Corpus& corpus, const std::vector<std::int64_t>& edges) {
    if (edges.size() < 2) throw BadEdges("at least two bucket edges are required");
    if (std::adjacent_find(edges.begin(), edges.end(), std::greater_equal<>()) != edges.end())
        throw BadEdges("bucket edges must be strictly increasing");

    std::vector<RangeBucket> buckets;
    buckets.push_back({edges[0], edges[1], 0, {}});
    for (std::size_t i = 2; i < edges.size(); ++i) buckets.push_back({edges[i - 1] + 1, edges[i], 0, {}});
    RangeBucket overflow{edges.back() + 1, std::nullopt, 0, {}};

    for (const auto& a : corpus.articles()) {
        auto n = static_cast<std::int64_t>(a.references.size());
        if (n < edges.front())
            throw BadEdges("article '" + a.id + "' has " + std::to_string(n) + " references, below the first edge");
        auto it = std::find_if(buckets.begin(), buckets.end(), [n](const RangeBucket& b) { return n <= *b.hi; });
        ++(it == buckets.end() ? overflow : *it).count;
    }
    if (overflow.count) buckets.push_back(overflow);
    auto total = signed_count(corpus.size());
    for (auto& b : buckets) b.share = Ratio{signed_count(b.count), total ? total : 1};
    return buckets;
}

FormatDistribution format_distribution(const Corpus& corpus) {
    FormatDistribution f;
    for (const auto& a : corpus.articles()) {
        auto& year = f.per_year[a.year];
        for (const auto& r : a.references) {
            ++f.total[r.source_type];
            ++year[r.source_type];
            ++f.references;
        }
    }
    return f;
}

AgeProfile age_profile(const Corpus& corpus, AgeCounting counting) {
    AgeProfile p;
    p.ages.set_label("age");
    for (const auto& a : corpus.articles()) {
        for (const auto& r : a.references) {
            ++p.total;
            if (!r.pub_year) {
                ++p.undated;
                continue;
            }
            std::int64_t age = a.year - *r.pub_year;
            if (counting == AgeCounting::inclusive) age += 1;
            p.ages.add(int_key(std::max<std::int64_t>(age, 1)));
        }
    }
    p.dated = p.ages.total();
    fill_half_life(p);
    return p;
}

AgeProfile age_profile(const Histogram& ages) {
    AgeProfile p;
    p.ages.set_label("age");
    for (const auto& [key, count] : ages.bins()) {
        if (const auto* age = std::get_if<std::int64_t>(&key)) {
            if (*age < 0) throw AnalysisError("negative age " + std::to_string(*age));
            p.ages.add(key, count);
        } else if (std::get<std::string>(key) == kUndatedKey) {
            p.undated += count;
        } else {
            throw AnalysisError("unrecognized age key '" + std::get<std::string>(key) + "'");
        }
    }
    p.dated = p.ages.total();
    p.total = p.dated + p.undated;
    fill_half_life(p);
    return p;
}

Ratio cumulative_share(const AgeProfile& profile, std::int64_t age) {
    std::uint64_t cumulative = 0;
    for (const auto& [key, count] : profile.ages.bins())
        if (std::get<std::int64_t>(key) <= age) cumulative += count;
    return Ratio{signed_count(cumulative), profile.total ? signed_count(profile.total) : 1};
}

PublicationYearMatrix publication_year_matrix(const Corpus& corpus) {
    PublicationYearMatrix m;
    m.row_totals.set_label("published");
    m.column_totals.set_label("citing");
    for (const auto& a : corpus.articles()) {
        for (const auto& r : a.references) {
            BinKey row = r.pub_year ? int_key(*r.pub_year) : BinKey{std::string(kUndatedKey)};
            ++m.cells[row][a.year];
            m.row_totals.add(row);
            m.column_totals.add(int_key(a.year));
        }
    }
    return m;
}

Histogram journal_frequency(const Corpus& corpus, const JournalFrequencyOptions& options) {
    const auto own = normalize_title(corpus.journal());
    std::map<std::string, std::map<std::string, std::uint64_t>> spellings;
    for (const auto& a : corpus.articles()) {
        for (const auto& r : a.references) {
            if (r.source_type != SourceType::journal || !r.journal_title) continue;
            auto key = normalize_title(*r.journal_title);
            if (!options.include_own_journal && key == own) continue;
            ++spellings[key][*r.journal_title];
        }
    }
    Histogram h("journals");
    for (const auto& [key, raw] : spellings) {
        auto best = std::max_element(raw.begin(), raw.end(),
                                     [](const auto& x, const auto& y) { return x.second < y.second; });
        std::uint64_t total = 0;
        for (const auto& [spelling, n] : raw) total += n;
        h.add(BinKey{best->first}, total);
    }
    return h;
}

BradfordPartition bradford_partition(const Histogram& freqs, int k) {
    if (k < 2) throw AnalysisError("Bradford partition needs at least 2 zones");
    std::vector<std::pair<BinKey, std::uint64_t>> ranked;
    for (auto& entry : freqs.ranked())
        if (entry.second > 0) ranked.push_back(std::move(entry));
    auto zones = static_cast<std::size_t>(k);
    if (ranked.size() < zones) throw TooFewJournals(ranked.size(), k);

    BradfordPartition p;
    p.total_citations = freqs.total();
    const auto T = p.total_citations;
    p.zones.emplace_back();
    std::uint64_t cumulative = 0;
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        const auto& [key, count] = ranked[i];
        auto& zone = p.zones.back();
        zone.titles.push_back(key_to_string(key));
        ++zone.journal_count;
        zone.citation_count += count;
        auto before = cumulative;
        cumulative += count;

        auto m = p.zones.size();  // 1-based index of the open zone
        if (m == zones) continue;
        bool reached = cumulative * zones >= m * T;
        bool forced = ranked.size() - i - 1 == zones - m;
        if (!reached && !forced) continue;
        if (!reached || before * zones >= m * T) p.regular = false;
        p.zones.emplace_back();
    }

    const double first = static_cast<double>(p.zones.front().journal_count);
    for (const auto& z : p.zones) p.ratios.push_back(static_cast<double>(z.journal_count) / first);
    p.b_estimate = std::pow(p.ratios.back(), 1.0 / static_cast<double>(k - 1));
    return p;
}

std::vector<CurvePoint> bradford_curve(const Histogram& freqs) {
    std::vector<CurvePoint> out;
    std::uint64_t cumulative = 0;
    std::size_t rank = 0;
    for (const auto& [key, count] : freqs.ranked()) {
        if (count == 0) continue;
        cumulative += count;
        out.push_back({std::log(static_cast<double>(++rank)), static_cast<double>(cumulative)});
    }
    return out;
}

std::vector<CurvePoint> age_curve(const AgeProfile& profile) {
    std::vector<CurvePoint> out;
    std::uint64_t cumulative = 0;
    for (const auto& [key, count] : profile.ages.bins()) {
        cumulative += count;
        out.push_back({static_cast<double>(std::get<std::int64_t>(key)), static_cast<double>(cumulative)});
    }
    return out;
}

SelfCitation self_citation(const Corpus& corpus, const std::string& journal_name) {
    const auto own = normalize_title(journal_name);
    SelfCitation s;
    for (const auto& a : corpus.articles()) {
        std::uint64_t self = 0;
        for (const auto& r : a.references)
            if (r.journal_title && normalize_title(*r.journal_title) == own) ++self;
        for (auto* row : {&s.total, &s.per_year[a.year]}) {
            ++row->articles;
            row->references += a.references.size();
            row->self_citations += self;
            if (self) ++row->citing_articles;
        }
    }
    return s;
}

LanguageDistribution language_distribution(const Corpus& corpus) {
    LanguageDistribution d;
    d.references.set_label("language");
    std::set<std::string> other_titles;
    for (const auto& a : corpus.articles()) {
        for (const auto& r : a.references) {
            d.references.add(BinKey{r.language});
            if (r.journal_title) d.journal_titles[r.language].insert(normalize_title(*r.journal_title));
            if (r.language != kDefaultLanguage) {
                ++d.other_language_references;
                if (r.journal_title) other_titles.insert(normalize_title(*r.journal_title));
            }
        }
    }
    d.other_language_titles = other_titles.size();
    return d;
}

}  // namespace bibliolens
