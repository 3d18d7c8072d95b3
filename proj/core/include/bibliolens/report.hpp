#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bibliolens/citation_profile.hpp"
#include "bibliolens/corpus.hpp"
#include "bibliolens/impact.hpp"
#include "bibliolens/productivity.hpp"
#include "bibliolens/table.hpp"

namespace bibliolens {

// Builders that turn analysis results into tables. Subcommands and the full
// report share them so every number is rendered from the same cells.

struct ReportOptions {
    std::string home;     // empty: most frequent author country
    std::string journal;  // empty: the corpus journal
    AgeCounting age_counting = AgeCounting::inclusive;
    int zones = 3;
    ImpactOptions impact;
    bool truncate_impact = true;  // truncate IF display at 3 decimals; otherwise round half-up
    std::uint64_t core_author_min = 10;
    std::size_t top_journals = 20;
    std::size_t top_keywords = 20;
    std::vector<std::string> places;
    RegionMap regions;
};

// `requested` when non-empty, otherwise the most frequent known author country.
std::string resolve_home(const Corpus& corpus, const std::string& requested);

std::vector<Table> summary_tables(const Corpus& corpus);
std::vector<Table> productivity_tables(const Corpus& corpus, std::uint64_t core_author_min);
std::vector<Table> lotka_tables(const LotkaFit& fit, const std::string& id);
std::vector<Table> collaboration_tables(const Corpus& corpus, const std::string& home);
std::vector<Table> reference_tables(const Corpus& corpus, const ReportOptions& options);
std::vector<Table> age_tables(const AgeProfile& profile);
std::vector<Table> bradford_tables(const BradfordPartition& partition);
std::vector<Table> journal_tables(const Histogram& journals, std::size_t top);
std::vector<Table> impact_tables(const Corpus& corpus, const ReportOptions& options);
std::vector<Table> impact_factor_tables(const std::vector<ImpactFactorInput>& rows, bool truncate_display,
                                        const std::string& id);
std::vector<Table> content_tables(const Corpus& corpus, const ReportOptions& options);

// Every section above, in order.
Document full_report(const Corpus& corpus, const ReportOptions& options);

}  // namespace bibliolens
