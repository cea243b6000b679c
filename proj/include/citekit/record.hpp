#pragma once

// Unified bibliographic record model shared by both source parsers, plus the
// JSON-lines record store ("record/1").

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "citekit/text.hpp"

namespace citekit {

enum class Source { WOS, SCOPUS, MERGED };

inline const char* to_string(Source s) {
    switch (s) {
        case Source::WOS: return "WOS";
        case Source::SCOPUS: return "SCOPUS";
        case Source::MERGED: return "MERGED";
    }
    return "?";
}

inline Source source_from_string(const std::string& s) {
    if (s == "WOS") return Source::WOS;
    if (s == "SCOPUS") return Source::SCOPUS;
    if (s == "MERGED") return Source::MERGED;
    throw Error("unknown source tag: " + s);
}

struct Author {
    std::string surname;
    std::string initials;

    bool operator==(const Author&) const = default;
};

// One cited-reference variant as it appeared in a source export. `raw` is the
// verbatim fragment; every parsed field is derived from it. `title` only
// occurs for Scopus references. `canon` is filled by reference consolidation.
struct CitedRef {
    std::string raw;
    std::optional<std::string> surname;
    std::optional<std::string> initials;
    std::optional<int> year;
    std::optional<std::string> source_name;
    std::optional<std::string> title;
    std::optional<std::string> volume;
    std::optional<std::string> first_page;
    std::optional<std::string> doi;
    std::optional<std::string> canon;

    bool operator==(const CitedRef&) const = default;
};

struct Record {
    std::string id;
    Source source = Source::WOS;
    std::vector<Author> authors;
    std::optional<int> year;
    std::string title;
    std::string venue;
    std::optional<std::string> volume;
    std::optional<std::string> issue;
    std::optional<std::string> first_page;
    std::optional<std::string> doi;
    std::string doc_type;
    std::vector<std::string> author_keywords;
    std::vector<std::string> subject_categories;
    std::optional<long> times_cited_wos;
    std::optional<long> times_cited_scopus;
    std::vector<CitedRef> cited_refs;
    // Unknown export fields, preserved verbatim (tag -> lines).
    std::map<std::string, std::vector<std::string>> extras;
    bool unlinkable = false;

    bool operator==(const Record&) const = default;

    long max_times_cited() const {
        long w = times_cited_wos.value_or(0);
        long s = times_cited_scopus.value_or(0);
        return std::max(w, s);
    }
};

// ---- JSON-lines store ------------------------------------------------------

namespace detail {

template <typename T>
void put_opt(nlohmann::ordered_json& j, const char* key, const std::optional<T>& v) {
    if (v) j[key] = *v;
}

template <typename T>
std::optional<T> get_opt(const nlohmann::json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    return it->get<T>();
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const CitedRef& r) {
    nlohmann::ordered_json j;
    j["raw"] = r.raw;
    detail::put_opt(j, "surname", r.surname);
    detail::put_opt(j, "initials", r.initials);
    detail::put_opt(j, "year", r.year);
    detail::put_opt(j, "source", r.source_name);
    detail::put_opt(j, "title", r.title);
    detail::put_opt(j, "volume", r.volume);
    detail::put_opt(j, "first_page", r.first_page);
    detail::put_opt(j, "doi", r.doi);
    detail::put_opt(j, "canon", r.canon);
    return j;
}

inline CitedRef cited_ref_from_json(const nlohmann::json& j) {
    CitedRef r;
    r.raw = j.at("raw").get<std::string>();
    r.surname = detail::get_opt<std::string>(j, "surname");
    r.initials = detail::get_opt<std::string>(j, "initials");
    r.year = detail::get_opt<int>(j, "year");
    r.source_name = detail::get_opt<std::string>(j, "source");
    r.title = detail::get_opt<std::string>(j, "title");
    r.volume = detail::get_opt<std::string>(j, "volume");
    r.first_page = detail::get_opt<std::string>(j, "first_page");
    r.doi = detail::get_opt<std::string>(j, "doi");
    r.canon = detail::get_opt<std::string>(j, "canon");
    return r;
}

inline nlohmann::ordered_json to_json(const Record& r) {
    nlohmann::ordered_json j;
    j["schema"] = "record/1";
    j["id"] = r.id;
    j["source"] = to_string(r.source);
    auto& authors = j["authors"] = nlohmann::ordered_json::array();
    for (const auto& a : r.authors) authors.push_back({a.surname, a.initials});
    detail::put_opt(j, "year", r.year);
    j["title"] = r.title;
    j["venue"] = r.venue;
    detail::put_opt(j, "volume", r.volume);
    detail::put_opt(j, "issue", r.issue);
    detail::put_opt(j, "first_page", r.first_page);
    detail::put_opt(j, "doi", r.doi);
    j["doc_type"] = r.doc_type;
    j["author_keywords"] = r.author_keywords;
    j["subject_categories"] = r.subject_categories;
    detail::put_opt(j, "tc_wos", r.times_cited_wos);
    detail::put_opt(j, "tc_scopus", r.times_cited_scopus);
    auto& refs = j["cited_refs"] = nlohmann::ordered_json::array();
    for (const auto& cr : r.cited_refs) refs.push_back(to_json(cr));
    if (!r.extras.empty()) j["extras"] = r.extras;
    if (r.unlinkable) j["unlinkable"] = true;
    return j;
}

inline Record record_from_json(const nlohmann::json& j) {
    if (j.value("schema", "") != std::string("record/1"))
        throw Error("record store: unexpected schema tag");
    Record r;
    r.id = j.at("id").get<std::string>();
    r.source = source_from_string(j.at("source").get<std::string>());
    for (const auto& a : j.at("authors"))
        r.authors.push_back({a.at(0).get<std::string>(), a.at(1).get<std::string>()});
    r.year = detail::get_opt<int>(j, "year");
    r.title = j.value("title", "");
    r.venue = j.value("venue", "");
    r.volume = detail::get_opt<std::string>(j, "volume");
    r.issue = detail::get_opt<std::string>(j, "issue");
    r.first_page = detail::get_opt<std::string>(j, "first_page");
    r.doi = detail::get_opt<std::string>(j, "doi");
    r.doc_type = j.value("doc_type", "");
    r.author_keywords = j.value("author_keywords", std::vector<std::string>{});
    r.subject_categories = j.value("subject_categories", std::vector<std::string>{});
    r.times_cited_wos = detail::get_opt<long>(j, "tc_wos");
    r.times_cited_scopus = detail::get_opt<long>(j, "tc_scopus");
    if (auto it = j.find("cited_refs"); it != j.end())
        for (const auto& cr : *it) r.cited_refs.push_back(cited_ref_from_json(cr));
    if (auto it = j.find("extras"); it != j.end())
        r.extras = it->get<std::map<std::string, std::vector<std::string>>>();
    r.unlinkable = j.value("unlinkable", false);
    return r;
}

inline void write_record_store(std::ostream& os, const std::vector<Record>& records) {
    for (const auto& r : records) os << to_json(r).dump() << '\n';
}

inline std::vector<Record> read_record_store(std::istream& is) {
    std::vector<Record> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (text::trim_view(line).empty()) continue;
        try {
            out.push_back(record_from_json(nlohmann::json::parse(line)));
        } catch (const nlohmann::json::exception& e) {
            throw Error("record store line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace citekit
