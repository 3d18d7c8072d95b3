#include "bibliolens/collaboration.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "bibliolens/errors.hpp"

namespace bibliolens {

namespace {

std::set<std::string> known_countries(const Article& a) {
    std::set<std::string> out;
    for (const auto& au : a.authors)
        if (au.country != kUnknownCountry) out.insert(au.country);
    return out;
}

}  // namespace

CoauthorshipTable coauthorship_histogram(const Corpus& corpus) {
    CoauthorshipTable t;
    t.total.set_label("articles");
    for (const auto& a : corpus.articles()) {
        BinKey k{static_cast<std::int64_t>(a.authors.size())};
        t.total.add(k);
        t.per_year[a.year].add(k);
    }
    return t;
}

CollaborationSummary degree_of_collaboration(const Corpus& corpus) {
    if (corpus.empty()) throw EmptyCorpus();
    CollaborationSummary s;
    for (const auto& a : corpus.articles()) {
        if (a.authors.empty()) continue;
        auto& y = s.per_year[a.year];
        if (a.authors.size() == 1) {
            ++s.total.ns;
            ++y.ns;
        } else {
            ++s.total.nm;
            ++y.nm;
        }
    }
    if (s.total.ns + s.total.nm == 0) throw EmptyCorpus();
    return s;
}

std::string_view to_string(CollabClass c) {
    switch (c) {
        case CollabClass::single: return "single";
        case CollabClass::same_affiliation: return "same_affiliation";
        case CollabClass::diff_affiliation_same_country: return "diff_affiliation_same_country";
        case CollabClass::diff_countries: return "diff_countries";
    }
    return "single";
}

CollabClass classify_collaboration(const Article& article) {
    if (article.authors.empty()) throw NoAuthors(article.id);
    if (article.authors.size() == 1) return CollabClass::single;
    if (known_countries(article).size() >= 2) return CollabClass::diff_countries;
    const auto first = normalize_name(article.authors.front().affiliation);
    bool same = std::all_of(article.authors.begin(), article.authors.end(),
                            [&](const AuthorRecord& au) { return normalize_name(au.affiliation) == first; });
    return same ? CollabClass::same_affiliation : CollabClass::diff_affiliation_same_country;
}

void CollabClassCounts::add(CollabClass c) {
    switch (c) {
        case CollabClass::single: ++single; break;
        case CollabClass::same_affiliation: ++same_affiliation; break;
        case CollabClass::diff_affiliation_same_country: ++diff_affiliation_same_country; break;
        case CollabClass::diff_countries: ++diff_countries; break;
    }
}

CollabClassTable collaboration_classes(const Corpus& corpus) {
    CollabClassTable t;
    for (const auto& a : corpus.articles()) {
        if (a.authors.empty()) continue;
        auto c = classify_collaboration(a);
        t.total.add(c);
        t.per_year[a.year].add(c);
    }
    return t;
}

CountrySplit country_split(const Corpus& corpus, const std::string& home) {
    if (home.empty()) throw AnalysisError("home country must be non-empty");
    CountrySplit s;
    s.home = home;
    s.foreign_authors_by_country.set_label("foreign authors");
    std::set<std::pair<std::string, std::string>> foreign_seen;
    for (const auto& a : corpus.articles()) {
        auto& ay = s.authorships_per_year[a.year];
        bool has_home = false, has_foreign = false;
        for (const auto& au : a.authors) {
            if (au.country == home) {
                ++s.authorships.home;
                ++ay.home;
                has_home = true;
            } else if (au.country == kUnknownCountry) {
                ++s.authorships.unknown;
                ++ay.unknown;
            } else {
                ++s.authorships.foreign;
                ++ay.foreign;
                has_foreign = true;
                if (foreign_seen.emplace(au.name, au.country).second)
                    s.foreign_authors_by_country.add(BinKey{au.country});
            }
        }
        auto& oy = s.articles_per_year[a.year];
        auto bump = [&](std::uint64_t ArticleOrigin::*field) {
            ++(s.articles.*field);
            ++(oy.*field);
        };
        if (a.authors.empty())
            bump(&ArticleOrigin::without_authors);
        else if (has_foreign && !has_home)
            bump(&ArticleOrigin::purely_foreign);
        else if (has_foreign)
            bump(&ArticleOrigin::mixed);
        else if (has_home)
            bump(&ArticleOrigin::purely_home);
        else
            bump(&ArticleOrigin::unknown_origin);
    }
    return s;
}

std::map<CountrySet, std::uint64_t> country_pair_matrix(const Corpus& corpus) {
    std::map<CountrySet, std::uint64_t> out;
    for (const auto& a : corpus.articles()) {
        auto countries = known_countries(a);
        if (countries.size() >= 2) ++out[CountrySet(countries.begin(), countries.end())];
    }
    return out;
}

AffiliationTypeDistribution affiliation_type_distribution(const Corpus& corpus, const std::string& home) {
    AffiliationTypeDistribution d;
    std::set<std::string> affiliations_seen;
    using Profile = std::tuple<std::string, AffiliationType, std::string>;
    std::map<std::string, std::map<Profile, std::uint64_t>> author_profiles;

    for (const auto& a : corpus.articles()) {
        for (const auto& au : a.authors) {
            bool is_home = au.country == home;
            auto key = normalize_name(au.affiliation);
            if (!key.empty() && affiliations_seen.insert(key).second) {
                auto& t = d.by_type[au.affiliation_type];
                ++(is_home ? t.affiliations_home : t.affiliations_foreign);
            }
            ++author_profiles[au.name][Profile{au.affiliation, au.affiliation_type, au.country}];
        }
    }
    for (const auto& [name, profiles] : author_profiles) {
        auto best = std::max_element(profiles.begin(), profiles.end(),
                                     [](const auto& x, const auto& y) { return x.second < y.second; });
        const auto& [aff, type, country] = best->first;
        auto& t = d.by_type[type];
        ++(country == home ? t.authors_home : t.authors_foreign);
    }
    d.unique_affiliations = affiliations_seen.size();
    d.unique_authors = author_profiles.size();
    return d;
}

}  // namespace bibliolens
