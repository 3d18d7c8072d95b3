#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bibliolens/corpus.hpp"
#include "bibliolens/errors.hpp"

namespace bibliolens {

namespace {

using nlohmann::json;

std::size_t line_of(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

class Reader {
public:
    Reader(const LoadOptions& options, std::string source) : options_(options), source_(std::move(source)) {}

    Corpus corpus(const json& root) {
        const std::string at = "$";
        expect_object(root, at, {"journal", "year_start", "year_end", "articles"});
        auto journal = string_at(root, "journal", at);
        YearRange years{int_at(root, "year_start", at), int_at(root, "year_end", at)};
        const json& list = member(root, "articles", at);
        if (!list.is_array()) fail(at + ".articles", "expected an array");
        std::vector<Article> articles;
        articles.reserve(list.size());
        for (std::size_t i = 0; i < list.size(); ++i) articles.push_back(article(list[i], at + ".articles[" + std::to_string(i) + "]"));
        return Corpus(std::move(journal), years, std::move(articles));
    }

private:
    [[noreturn]] void fail(const std::string& at, const std::string& what) const {
        throw SchemaError(source_ + " " + at, what);
    }

    void expect_object(const json& j, const std::string& at, std::initializer_list<std::string_view> allowed) const {
        if (!j.is_object()) fail(at, "expected an object");
        for (const auto& [key, value] : j.items()) {
            if (std::find(allowed.begin(), allowed.end(), key) != allowed.end()) continue;
            if (options_.strict) fail(at, "unknown key '" + key + "'");
            if (options_.on_warning) options_.on_warning(source_ + " " + at + ": ignoring unknown key '" + key + "'");
        }
    }

    const json& member(const json& j, const char* key, const std::string& at) const {
        auto it = j.find(key);
        if (it == j.end()) fail(at, std::string("missing key '") + key + "'");
        return *it;
    }

    std::string string_at(const json& j, const char* key, const std::string& at) const {
        const json& v = member(j, key, at);
        if (!v.is_string()) fail(at + "." + key, "expected a string");
        return v.get<std::string>();
    }

    int int_at(const json& j, const char* key, const std::string& at) const {
        return as_int(member(j, key, at), at + "." + key);
    }

    int as_int(const json& v, const std::string& at) const {
        if (!v.is_number_integer()) fail(at, "expected an integer");
        auto x = v.get<std::int64_t>();
        if (x < -100000 || x > 100000) fail(at, "year out of representable range");
        return static_cast<int>(x);
    }

    std::vector<std::string> strings_at(const json& j, const char* key, const std::string& at) const {
        std::vector<std::string> out;
        auto it = j.find(key);
        if (it == j.end()) return out;
        if (!it->is_array()) fail(at + "." + key, "expected an array of strings");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const json& v = (*it)[i];
            if (!v.is_string()) fail(at + "." + key + "[" + std::to_string(i) + "]", "expected a string");
            out.push_back(v.get<std::string>());
        }
        return out;
    }

    template <typename F>
    auto objects_at(const json& j, const char* key, const std::string& at, F&& convert) const {
        std::vector<decltype(convert(j, at))> out;
        auto it = j.find(key);
        if (it == j.end()) return out;
        if (!it->is_array()) fail(at + "." + key, "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i)
            out.push_back(convert((*it)[i], at + "." + key + "[" + std::to_string(i) + "]"));
        return out;
    }

    template <typename E, typename Parse>
    E enum_at(const json& j, const char* key, const std::string& at, Parse parse) const {
        auto label = string_at(j, key, at);
        auto value = parse(label);
        if (!value) fail(at + "." + key, "unrecognized value '" + label + "'");
        return *value;
    }

    Article article(const json& j, const std::string& at) const {
        expect_object(j, at, {"id", "year", "title", "type", "keywords", "authors", "references", "received", "funders"});
        Article a;
        a.id = string_at(j, "id", at);
        a.year = int_at(j, "year", at);
        a.title = string_at(j, "title", at);
        a.type = enum_at<ArticleType>(j, "type", at, parse_article_type);
        a.keywords = strings_at(j, "keywords", at);
        a.authors = objects_at(j, "authors", at, [this](const json& x, const std::string& p) { return author(x, p); });
        a.references = objects_at(j, "references", at, [this](const json& x, const std::string& p) { return reference(x, p); });
        a.received = objects_at(j, "received", at, [this](const json& x, const std::string& p) { return received(x, p); });
        a.funders = strings_at(j, "funders", at);
        return a;
    }

    AuthorRecord author(const json& j, const std::string& at) const {
        expect_object(j, at, {"name", "affiliation", "affiliation_type", "country"});
        AuthorRecord r;
        r.name = string_at(j, "name", at);
        if (j.contains("affiliation")) r.affiliation = string_at(j, "affiliation", at);
        if (j.contains("affiliation_type"))
            r.affiliation_type = enum_at<AffiliationType>(j, "affiliation_type", at, parse_affiliation_type);
        if (j.contains("country")) r.country = string_at(j, "country", at);
        return r;
    }

    Reference reference(const json& j, const std::string& at) const {
        expect_object(j, at, {"source_type", "pub_year", "journal_title", "language"});
        Reference r;
        r.source_type = enum_at<SourceType>(j, "source_type", at, parse_source_type);
        const json& year = member(j, "pub_year", at);
        if (!year.is_null()) r.pub_year = as_int(year, at + ".pub_year");
        if (j.contains("journal_title")) r.journal_title = string_at(j, "journal_title", at);
        if (j.contains("language")) r.language = string_at(j, "language", at);
        return r;
    }

    ReceivedCitation received(const json& j, const std::string& at) const {
        expect_object(j, at, {"citing_year", "doc_type", "citing_countries", "citing_source", "is_self"});
        ReceivedCitation r;
        r.citing_year = int_at(j, "citing_year", at);
        r.doc_type = enum_at<CitingDocType>(j, "doc_type", at, parse_citing_doc_type);
        r.citing_countries = strings_at(j, "citing_countries", at);
        if (j.contains("citing_source")) r.citing_source = string_at(j, "citing_source", at);
        if (j.contains("is_self")) {
            const json& v = j.at("is_self");
            if (!v.is_boolean()) fail(at + ".is_self", "expected a boolean");
            r.is_self = v.get<bool>();
        }
        return r;
    }

    const LoadOptions& options_;
    std::string source_;
};

nlohmann::ordered_json to_json(const Article& a) {
    nlohmann::ordered_json j;
    j["id"] = a.id;
    j["year"] = a.year;
    j["title"] = a.title;
    j["type"] = std::string(to_string(a.type));
    j["keywords"] = a.keywords;
    j["authors"] = nlohmann::ordered_json::array();
    for (const auto& au : a.authors)
        j["authors"].push_back({{"name", au.name},
                                {"affiliation", au.affiliation},
                                {"affiliation_type", std::string(to_string(au.affiliation_type))},
                                {"country", au.country}});
    j["references"] = nlohmann::ordered_json::array();
    for (const auto& r : a.references) {
        nlohmann::ordered_json o;
        o["source_type"] = std::string(to_string(r.source_type));
        o["pub_year"] = r.pub_year ? nlohmann::ordered_json(*r.pub_year) : nlohmann::ordered_json(nullptr);
        if (r.journal_title) o["journal_title"] = *r.journal_title;
        if (r.language != kDefaultLanguage) o["language"] = r.language;
        j["references"].push_back(std::move(o));
    }
    j["received"] = nlohmann::ordered_json::array();
    for (const auto& r : a.received) {
        nlohmann::ordered_json o;
        o["citing_year"] = r.citing_year;
        o["doc_type"] = std::string(to_string(r.doc_type));
        o["citing_countries"] = r.citing_countries;
        if (r.citing_source) o["citing_source"] = *r.citing_source;
        o["is_self"] = r.is_self;
        j["received"].push_back(std::move(o));
    }
    j["funders"] = a.funders;
    return j;
}

}  // namespace

Corpus parse_corpus(std::string_view json_text, const LoadOptions& options, const std::string& source) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SchemaError(source + ":" + std::to_string(line_of(json_text, e.byte)), "malformed JSON");
    }
    return Reader(options, source).corpus(root);
}

Corpus load_corpus(const std::filesystem::path& path, const LoadOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError(path.string(), "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_corpus(buf.str(), options, path.string());
}

std::string serialize_corpus(const Corpus& corpus) {
    nlohmann::ordered_json root;
    root["journal"] = corpus.journal();
    root["year_start"] = corpus.years().first;
    root["year_end"] = corpus.years().last;
    root["articles"] = nlohmann::ordered_json::array();
    for (const auto& a : corpus.articles()) root["articles"].push_back(to_json(a));
    return root.dump(1) + "\n";
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << serialize_corpus(corpus);
}

}  // namespace bibliolens
