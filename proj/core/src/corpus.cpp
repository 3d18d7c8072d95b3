#include "bibliolens/corpus.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <unordered_set>

#include "bibliolens/errors.hpp"

namespace bibliolens {

namespace {

template <typename E, std::size_t N>
using Labels = std::array<std::pair<E, std::string_view>, N>;

constexpr Labels<ArticleType, 7> kArticleTypes{{
    {ArticleType::original, "original"},
    {ArticleType::cme, "cme"},
    {ArticleType::case_report, "case_report"},
    {ArticleType::short_communication, "short_communication"},
    {ArticleType::correspondence, "correspondence"},
    {ArticleType::editorial, "editorial"},
    {ArticleType::other, "other"},
}};

constexpr Labels<AffiliationType, 8> kAffiliationTypes{{
    {AffiliationType::hospital, "hospital"},
    {AffiliationType::higher_institution, "higher_institution"},
    {AffiliationType::government_agency, "government_agency"},
    {AffiliationType::medical_center, "medical_center"},
    {AffiliationType::clinic, "clinic"},
    {AffiliationType::private_org, "private_org"},
    {AffiliationType::international_org, "international_org"},
    {AffiliationType::unknown, "unknown"},
}};

constexpr Labels<SourceType, 9> kSourceTypes{{
    {SourceType::journal, "journal"},
    {SourceType::book, "book"},
    {SourceType::conference, "conference"},
    {SourceType::web, "web"},
    {SourceType::government, "government"},
    {SourceType::international_org, "international_org"},
    {SourceType::thesis, "thesis"},
    {SourceType::newspaper, "newspaper"},
    {SourceType::other, "other"},
}};

constexpr Labels<CitingDocType, 6> kCitingDocTypes{{
    {CitingDocType::journal_article, "journal_article"},
    {CitingDocType::thesis, "thesis"},
    {CitingDocType::book, "book"},
    {CitingDocType::conference, "conference"},
    {CitingDocType::government, "government"},
    {CitingDocType::other, "other"},
}};

template <typename E, std::size_t N>
std::string_view label_of(const Labels<E, N>& table, E value) {
    for (const auto& [e, s] : table)
        if (e == value) return s;
    return "other";
}

template <typename E, std::size_t N>
std::optional<E> value_of(const Labels<E, N>& table, std::string_view label) {
    for (const auto& [e, s] : table)
        if (s == label) return e;
    return std::nullopt;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f'; }

char ascii_upper(char c) { return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c; }
char ascii_lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

// Collapses whitespace runs to one space, trims, maps case and strips any
// trailing run of periods and spaces.
template <typename CaseMap>
std::string collapse(std::string_view raw, CaseMap map_case) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    for (char c : raw) {
        if (is_space(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) out += ' ';
        pending_space = false;
        out += map_case(c);
    }
    while (!out.empty() && (out.back() == '.' || out.back() == ' ')) out.pop_back();
    return out;
}

std::string locate(const Article& a) { return "article '" + a.id + "'"; }

void check_article(const Article& a, YearRange years) {
    if (!years.contains(a.year)) throw YearOutOfRange(a.id, a.year, years.first, years.last);
    if (a.title.find_first_not_of(" \t\r\n") == std::string::npos)
        throw SchemaError(locate(a), "title is empty");
    if (a.authors.empty() && a.type != ArticleType::editorial && a.type != ArticleType::other)
        throw SchemaError(locate(a), "only editorial or other articles may have no authors");
    for (const auto& au : a.authors) {
        if (au.name.empty()) throw SchemaError(locate(a), "author name is empty");
        if (au.country.empty()) throw SchemaError(locate(a), "author country is empty");
    }
    for (const auto& r : a.references) {
        bool is_journal = r.source_type == SourceType::journal;
        if (is_journal != r.journal_title.has_value())
            throw SchemaError(locate(a), is_journal ? "journal reference without journal_title"
                                                    : "journal_title on a non-journal reference");
        if (r.language.empty()) throw SchemaError(locate(a), "reference language is empty");
    }
    for (const auto& rc : a.received)
        for (const auto& country : rc.citing_countries)
            if (country.empty()) throw SchemaError(locate(a), "citing country is empty");
}

}  // namespace

std::string_view to_string(ArticleType t) { return label_of(kArticleTypes, t); }
std::string_view to_string(AffiliationType t) { return label_of(kAffiliationTypes, t); }
std::string_view to_string(SourceType t) { return label_of(kSourceTypes, t); }
std::string_view to_string(CitingDocType t) { return label_of(kCitingDocTypes, t); }

std::optional<ArticleType> parse_article_type(std::string_view s) { return value_of(kArticleTypes, s); }
std::optional<AffiliationType> parse_affiliation_type(std::string_view s) {
    return value_of(kAffiliationTypes, s);
}
std::optional<SourceType> parse_source_type(std::string_view s) { return value_of(kSourceTypes, s); }
std::optional<CitingDocType> parse_citing_doc_type(std::string_view s) { return value_of(kCitingDocTypes, s); }

std::string normalize_name(std::string_view raw) { return collapse(raw, ascii_upper); }

std::string normalize_title(std::string_view raw) { return collapse(raw, ascii_lower); }

std::string normalize_keyword(std::string_view raw) {
    auto b = std::find_if_not(raw.begin(), raw.end(), is_space);
    auto e = std::find_if_not(raw.rbegin(), raw.rend(), is_space).base();
    std::string out;
    if (b < e) std::transform(b, e, std::back_inserter(out), ascii_lower);
    return out;
}

Corpus::Corpus(std::string journal, YearRange years, std::vector<Article> articles)
    : journal_(std::move(journal)), years_(years), articles_(std::move(articles)) {
    if (years_.first > years_.last)
        throw SchemaError("corpus", "year_start " + std::to_string(years_.first) + " is after year_end " +
                                        std::to_string(years_.last));
    std::unordered_set<std::string> ids;
    for (auto& a : articles_) {
        if (!ids.insert(a.id).second) throw DuplicateId(a.id);
        for (auto& au : a.authors) au.name = normalize_name(au.name);
        check_article(a, years_);
    }
}

std::map<std::string, std::uint64_t> unique_authors(const Corpus& corpus) {
    std::map<std::string, std::uint64_t> counts;
    for (const auto& a : corpus.articles()) {
        std::set<std::string_view> seen;
        for (const auto& au : a.authors) {
            if (!seen.insert(au.name).second) throw DuplicateAuthorInArticle(a.id, au.name);
            ++counts[au.name];
        }
    }
    return counts;
}

}  // namespace bibliolens
