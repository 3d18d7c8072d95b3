#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "bibliolens_cli/app.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using namespace bibliolens;
using cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string corpus_path() { return test::fixture("corpus.json").string(); }

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() / ("bibliolens_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    fs::path operator/(const std::string& name) const { return path_ / name; }

private:
    static inline int counter_ = 0;
    fs::path path_;
};

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
}

class ScopedEnv {
public:
    ScopedEnv(const char* name, const std::string& value) : name_(name) { ::setenv(name, value.c_str(), 1); }
    ~ScopedEnv() { ::unsetenv(name_); }
    ScopedEnv(const ScopedEnv&) = delete;
    ScopedEnv& operator=(const ScopedEnv&) = delete;

private:
    const char* name_;
};

std::map<std::string, nlohmann::json> tables_by_id(const std::string& json_text) {
    std::map<std::string, nlohmann::json> out;
    const auto doc = nlohmann::json::parse(json_text);
    for (const auto& t : doc["tables"]) out[t["id"]] = t;
    return out;
}

}  // namespace

TEST(Cli, ValidateCorpus) {
    auto r = invoke({"validate", corpus_path()});
    EXPECT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_EQ(r.out, "580 articles OK\n");
}

TEST(Cli, ValidateHistogram) {
    auto r = invoke({"validate", test::fixture("cited_journals.csv").string()});
    EXPECT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_NE(r.out.find("(total 5927)"), std::string::npos);
}

TEST(Cli, MalformedCorpusIsValidationError) {
    TempDir dir;
    write(dir / "bad.json", "{\"journal\": \"J\", \"year_start\": 2000,");
    EXPECT_EQ(invoke({"lotka", "--input", (dir / "bad.json").string()}).code, cli::kExitValidation);
    write(dir / "dup.json",
          R"({"journal":"J","year_start":2000,"year_end":2001,"articles":[
              {"id":"a","year":2000,"title":"T","type":"editorial"},
              {"id":"a","year":2000,"title":"T","type":"editorial"}]})");
    auto r = invoke({"validate", (dir / "dup.json").string()});
    EXPECT_EQ(r.code, cli::kExitValidation);
    EXPECT_NE(r.err.find("validation error"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(invoke({}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"frobnicate"}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"summary"}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"summary", "--input", "x.txt"}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"bradford", "--input", corpus_path(), "--zones", "1"}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"impact", "--input", corpus_path(), "--aggregate", "2004-2008"}).code, cli::kExitUsage);
}

TEST(Cli, HelpExitsCleanly) { EXPECT_EQ(invoke({"--help"}).code, cli::kExitOk); }

TEST(Cli, AnalysisErrors) {
    TempDir dir;
    write(dir / "one.csv", "key,count\n1,10\n");
    EXPECT_EQ(invoke({"lotka", "--input", (dir / "one.csv").string()}).code, cli::kExitAnalysis);
    EXPECT_EQ(invoke({"impact", "--input", corpus_path(), "--year", "2005"}).code, cli::kExitAnalysis);
    write(dir / "two.csv", "key,count\nA,3\nB,2\n");
    EXPECT_EQ(invoke({"bradford", "--input", (dir / "two.csv").string()}).code, cli::kExitAnalysis);
}

TEST(Cli, LotkaFromHistogram) {
    auto r = invoke({"lotka", "--input", test::fixture("lotka_observed.csv").string(), "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("# lotka_two_point_fit"), std::string::npos);
    EXPECT_NE(r.out.find("c (logs truncated to 3 decimals),2.4,"), std::string::npos);
    auto fixed = invoke({"lotka", "--input", test::fixture("lotka_observed.csv").string(), "--c", "2.4", "-f", "csv"});
    EXPECT_NE(fixed.out.find("Total,1435,,,1482,,"), std::string::npos);
}

TEST(Cli, ImpactModes) {
    auto y = invoke({"impact", "--input", corpus_path(), "--year", "2009", "-f", "csv"});
    ASSERT_EQ(y.code, 0) << y.err;
    EXPECT_NE(y.out.find("2009,2007-2008,89,235,0.378"), std::string::npos);
    auto r = invoke({"impact", "--input", corpus_path(), "--year", "2009", "--round-display", "-f", "csv"});
    EXPECT_NE(r.out.find("0.379"), std::string::npos);
    auto agg = invoke({"impact", "--input", corpus_path(), "--aggregate", "2004..2008", "-f", "csv"});
    EXPECT_NE(agg.out.find("2009,2004-2008,335,580,0.577"), std::string::npos);
}

TEST(Cli, ReportMatchesSubcommands) {
    auto report = invoke({"report", "--input", corpus_path(), "--format", "json"});
    ASSERT_EQ(report.code, 0) << report.err;
    auto all = tables_by_id(report.out);
    for (const char* cmd : {"summary", "lotka", "collab", "refs", "impact", "content"}) {
        auto r = invoke({cmd, "--input", corpus_path(), "--format", "json"});
        ASSERT_EQ(r.code, 0) << cmd << ": " << r.err;
        auto tables = tables_by_id(r.out);
        ASSERT_FALSE(tables.empty()) << cmd;
        for (const auto& [id, t] : tables) {
            ASSERT_TRUE(all.count(id)) << cmd << " table " << id << " missing from report";
            EXPECT_EQ(all.at(id), t) << cmd << " table " << id;
        }
    }
}

TEST(Cli, ReportWritesFileWithFormatFromExtension) {
    TempDir dir;
    auto r = invoke({"report", "--input", corpus_path(), "--out", (dir / "report.md").string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    auto md = slurp(dir / "report.md");
    EXPECT_NE(md.find("| 2004 | 139 |"), std::string::npos);
    EXPECT_NE(md.find("## Bradford zones"), std::string::npos);
    auto c = invoke({"summary", "--input", corpus_path(), "--out", (dir / "s.csv").string()});
    ASSERT_EQ(c.code, 0);
    EXPECT_EQ(slurp(dir / "s.csv").rfind("Measure,Value\n", 0), 0u);
}

TEST(Cli, PlotEmitsSvgAndData) {
    TempDir dir;
    auto svg = dir / "ages.svg";
    auto r = invoke({"halflife", "--input", test::fixture("reference_ages.csv").string(), "--plot", svg.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(slurp(svg).find("</svg>"), std::string::npos);
    auto data = slurp(dir / "ages.csv");
    EXPECT_EQ(data.rfind("series,x,y\n", 0), 0u);
    auto b = invoke({"bradford", "--input", test::fixture("cited_journals.csv").string(), "--plot",
                     (dir / "bradford.svg").string(), "-f", "csv"});
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_TRUE(fs::exists(dir / "bradford.csv"));
    EXPECT_NE(b.out.find("1,43,1990,"), std::string::npos);
}

TEST(Cli, ConfigFromEnvironment) {
    TempDir dir;
    write(dir / "bibliolens.ini", "format=csv\nzones=4\n");
    ScopedEnv env("BIBLIOLENS_CONFIG", (dir / "bibliolens.ini").string());
    auto r = invoke({"bradford", "--input", test::fixture("cited_journals.csv").string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("# bradford_zones\nZone,"), std::string::npos);
    EXPECT_NE(r.out.find("\n4,"), std::string::npos);
    auto overridden = invoke({"bradford", "--input", test::fixture("cited_journals.csv").string(), "--zones", "3",
                              "--format", "md"});
    auto zones = overridden.out.substr(0, overridden.out.find("## Most cited journals"));
    EXPECT_NE(zones.find("## Bradford zones"), std::string::npos);
    EXPECT_NE(zones.find("| 3 |"), std::string::npos);
    EXPECT_EQ(zones.find("| 4 |"), std::string::npos);
}

TEST(Cli, MissingConfigFile) {
    ScopedEnv env("BIBLIOLENS_CONFIG", "/nonexistent/bibliolens.ini");
    EXPECT_EQ(invoke({"validate", corpus_path()}).code, cli::kExitUsage);
}

TEST(Cli, LenientAcceptsUnknownKeys) {
    TempDir dir;
    write(dir / "extra.json",
          R"({"journal":"J","year_start":2000,"year_end":2001,"articles":[
              {"id":"a","year":2000,"title":"T","type":"editorial","colour":"blue"}]})");
    EXPECT_EQ(invoke({"validate", (dir / "extra.json").string()}).code, cli::kExitValidation);
    auto r = invoke({"validate", "--lenient", (dir / "extra.json").string()});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_NE(r.err.find("warning"), std::string::npos);
}
