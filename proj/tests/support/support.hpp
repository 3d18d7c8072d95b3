#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "bibliolens/corpus.hpp"

namespace bibliolens::test {

inline std::filesystem::path fixture(const std::string& name) { return std::filesystem::path(BIBLIOLENS_FIXTURES) / name; }

// Loaded once per process; the corpus is immutable so sharing is safe.
inline const Corpus& fixture_corpus() {
    static const Corpus corpus = load_corpus(fixture("corpus.json"));
    return corpus;
}

inline AuthorRecord author(std::string name, std::string affiliation = "Hospital A", std::string country = "Malaysia",
                           AffiliationType type = AffiliationType::hospital) {
    return AuthorRecord{std::move(name), std::move(affiliation), type, std::move(country)};
}

inline Reference journal_ref(std::string title, std::optional<int> year = 2000) {
    Reference r;
    r.source_type = SourceType::journal;
    r.journal_title = std::move(title);
    r.pub_year = year;
    return r;
}

inline Reference other_ref(SourceType type, std::optional<int> year = 2000) {
    Reference r;
    r.source_type = type;
    r.pub_year = year;
    return r;
}

inline ReceivedCitation cite(int year, std::vector<std::string> countries = {},
                             CitingDocType type = CitingDocType::journal_article) {
    ReceivedCitation c;
    c.citing_year = year;
    c.doc_type = type;
    c.citing_countries = std::move(countries);
    return c;
}

inline Article article(std::string id, int year, std::vector<AuthorRecord> authors = {},
                       ArticleType type = ArticleType::original) {
    Article a;
    a.id = std::move(id);
    a.year = year;
    a.title = "Title of " + a.id;
    a.type = authors.empty() && type == ArticleType::original ? ArticleType::editorial : type;
    a.authors = std::move(authors);
    return a;
}

inline Corpus corpus_of(std::vector<Article> articles, YearRange years = {2000, 2010},
                        std::string journal = "Test Journal") {
    return Corpus(std::move(journal), years, std::move(articles));
}

}  // namespace bibliolens::test
