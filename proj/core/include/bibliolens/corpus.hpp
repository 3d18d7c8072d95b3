#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bibliolens {

enum class ArticleType { original, cme, case_report, short_communication, correspondence, editorial, other };

enum class AffiliationType {
    hospital,
    higher_institution,
    government_agency,
    medical_center,
    clinic,
    private_org,
    international_org,
    unknown,
};

enum class SourceType { journal, book, conference, web, government, international_org, thesis, newspaper, other };

enum class CitingDocType { journal_article, thesis, book, conference, government, other };

std::string_view to_string(ArticleType t);
std::string_view to_string(AffiliationType t);
std::string_view to_string(SourceType t);
std::string_view to_string(CitingDocType t);

// Each returns std::nullopt for an unrecognized label.
std::optional<ArticleType> parse_article_type(std::string_view s);
std::optional<AffiliationType> parse_affiliation_type(std::string_view s);
std::optional<SourceType> parse_source_type(std::string_view s);
std::optional<CitingDocType> parse_citing_doc_type(std::string_view s);

inline constexpr std::string_view kUnknownCountry = "unknown";
inline constexpr std::string_view kDefaultLanguage = "English";

struct AuthorRecord {
    std::string name;
    std::string affiliation;
    AffiliationType affiliation_type = AffiliationType::unknown;
    std::string country{kUnknownCountry};

    friend bool operator==(const AuthorRecord&, const AuthorRecord&) = default;
};

struct Reference {
    SourceType source_type = SourceType::other;
    std::optional<int> pub_year;  // empty when undated
    std::optional<std::string> journal_title;
    std::string language{kDefaultLanguage};

    friend bool operator==(const Reference&, const Reference&) = default;
};

struct ReceivedCitation {
    int citing_year = 0;
    CitingDocType doc_type = CitingDocType::other;
    std::vector<std::string> citing_countries;
    std::optional<std::string> citing_source;
    bool is_self = false;

    friend bool operator==(const ReceivedCitation&, const ReceivedCitation&) = default;
};

struct Article {
    std::string id;
    int year = 0;
    std::string title;
    ArticleType type = ArticleType::other;
    std::vector<std::string> keywords;
    std::vector<AuthorRecord> authors;
    std::vector<Reference> references;
    std::vector<ReceivedCitation> received;
    std::vector<std::string> funders;

    friend bool operator==(const Article&, const Article&) = default;
};

struct YearRange {
    int first = 0;
    int last = 0;

    bool contains(int year) const noexcept { return year >= first && year <= last; }
    friend bool operator==(const YearRange&, const YearRange&) = default;
};

// Immutable after construction. The constructor enforces the record
// invariants and throws a ValidationError subtype on the first violation.
class Corpus {
public:
    Corpus(std::string journal, YearRange years, std::vector<Article> articles);

    const std::string& journal() const noexcept { return journal_; }
    YearRange years() const noexcept { return years_; }
    const std::vector<Article>& articles() const noexcept { return articles_; }
    std::size_t size() const noexcept { return articles_.size(); }
    bool empty() const noexcept { return articles_.empty(); }

    friend bool operator==(const Corpus&, const Corpus&) = default;

private:
    std::string journal_;
    YearRange years_;
    std::vector<Article> articles_;
};

struct LoadOptions {
    // Strict mode rejects unknown object keys; lenient mode reports them
    // through `on_warning` and continues.
    bool strict = true;
    std::function<void(const std::string&)> on_warning;
};

Corpus parse_corpus(std::string_view json_text, const LoadOptions& options = {},
                    const std::string& source = "<memory>");
Corpus load_corpus(const std::filesystem::path& path, const LoadOptions& options = {});

std::string serialize_corpus(const Corpus& corpus);
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);

// Trim, collapse internal whitespace, uppercase ASCII, drop trailing periods.
std::string normalize_name(std::string_view raw);

// Case-fold, collapse whitespace, drop trailing periods. Used for journal titles.
std::string normalize_title(std::string_view raw);

// Trim and case-fold.
std::string normalize_keyword(std::string_view raw);

// Normalized author name -> number of articles listing that name.
std::map<std::string, std::uint64_t> unique_authors(const Corpus& corpus);

}  // namespace bibliolens
