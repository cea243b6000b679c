#pragma once

// Scopus CSV export parsing. The export is an RFC 4180 CSV with a header
// row; the "References" cell packs the bibliography as "; "-separated
// fragments of the form "Surname, I.I., Title (year) Source, vol (iss),
// pp. a-b". Fragments without a recognizable year are kept raw-only.

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "citekit/normalize.hpp"
#include "citekit/record.hpp"
#include "citekit/text.hpp"
#include "citekit/wos.hpp"

namespace citekit {

namespace detail {

// "J.E." / "J" / "JE." style piece, as produced between commas.
inline bool looks_like_initials(const std::string& p) {
    if (p.empty() || p.size() > 8) return false;
    size_t letters = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        char c = p[i];
        if (c >= 'A' && c <= 'Z') {
            ++letters;
        } else if (c == '.' || c == '-') {
            if (i == 0) return false;
        } else {
            return false;
        }
    }
    return letters >= 1 && letters <= 4;
}

inline std::optional<int> find_ref_year(const std::string& s, size_t& open, size_t& close) {
    for (size_t i = s.size(); i >= 6; --i) {
        size_t c = i - 1;
        if (s[c] != ')') continue;
        if (c < 5) break;
        size_t o = c - 5;
        if (s[o] != '(') continue;
        std::string digits = s.substr(o + 1, 4);
        if (!text::all_digits(digits)) continue;
        int y = std::stoi(digits);
        if (!plausible_year(y)) continue;
        open = o;
        close = c;
        return y;
    }
    return std::nullopt;
}

}  // namespace detail

namespace detail {

// Consumes leading "Surname, I." pairs, trailing pairs included; returns the
// index of the first piece past the author list and fills the first author's
// fields.
inline size_t consume_authors(const std::vector<std::string>& pieces, CitedRef& ref) {
    size_t i = 0;
    bool first_author = true;
    while (i + 1 < pieces.size() && !looks_like_initials(pieces[i]) &&
           !pieces[i].empty() && looks_like_initials(pieces[i + 1])) {
        if (first_author) {
            ref.surname = text::trim(pieces[i]);
            ref.initials = text::trim(pieces[i + 1]);
            first_author = false;
        }
        i += 2;
    }
    return i;
}

inline void parse_tail_chunks(const std::vector<std::string>& chunks, CitedRef& ref) {
    std::string source;
    for (const auto& raw_chunk : chunks) {
        std::string chunk = text::trim(raw_chunk);
        if (chunk.empty()) continue;
        std::string low = text::fold(chunk);
        if (!ref.volume && std::isdigit(static_cast<unsigned char>(chunk[0]))) {
            size_t d = 0;
            while (d < chunk.size() && std::isdigit(static_cast<unsigned char>(chunk[d]))) ++d;
            ref.volume = chunk.substr(0, d);
        } else if (!ref.first_page &&
                   (text::starts_with(low, "pp.") || text::starts_with(low, "p."))) {
            ref.first_page = normalize_page(chunk);
        } else if (text::starts_with(low, "doi") || text::starts_with(chunk, "10.")) {
            if (auto d = extract_doi(chunk)) ref.doi = d;
        } else if (!ref.volume && !ref.first_page) {
            if (!source.empty()) source += ", ";
            source += chunk;
        }
    }
    while (!source.empty() && (source.back() == '.' || source.back() == ','))
        source.pop_back();
    source = text::trim(source);
    if (!source.empty()) ref.source_name = source;
}

}  // namespace detail

// Parses one "; "-separated fragment of the Scopus References cell. The last
// "(dddd)" group is the year; leading "Surname, I." pairs are authors; text
// between authors and year is the title; after the year come source, volume,
// issue and pages. Fragments without a year still parse when they open with
// author pairs (the trailing chunks classify from the right and the last
// plain-text chunk is the source); fragments with neither year nor authors
// are kept raw-only.
inline CitedRef parse_scopus_ref(std::string_view raw) {
    CitedRef ref;
    ref.raw = text::trim(raw);
    size_t open = 0, close = 0;
    auto year = detail::find_ref_year(ref.raw, open, close);

    if (year) {
        ref.year = year;
        std::string pre = text::trim(std::string_view(ref.raw).substr(0, open));
        while (!pre.empty() && pre.back() == ',') pre.pop_back();
        std::string post = text::trim(std::string_view(ref.raw).substr(close + 1));

        auto pieces = text::split(pre, ", ");
        size_t i = detail::consume_authors(pieces, ref);
        std::string title;
        for (; i < pieces.size(); ++i) {
            if (!title.empty()) title += ", ";
            title += pieces[i];
        }
        title = text::trim(title);
        if (!title.empty()) ref.title = title;
        if (!post.empty()) detail::parse_tail_chunks(text::split(post, ", "), ref);
        return normalize_ref(std::move(ref));
    }

    // No year. Require an author to treat the fragment as structured.
    auto pieces = text::split(ref.raw, ", ");
    size_t i = detail::consume_authors(pieces, ref);
    if (!ref.surname) return ref;  // raw-only

    // Classify page/volume/doi chunks from the right; the last plain chunk
    // before them is the source, anything earlier is the title.
    size_t tail_begin = pieces.size();
    while (tail_begin > i) {
        std::string low = text::fold(text::trim(pieces[tail_begin - 1]));
        bool classifiable = (!low.empty() && std::isdigit(static_cast<unsigned char>(low[0]))) ||
                            text::starts_with(low, "pp.") || text::starts_with(low, "p.") ||
                            text::starts_with(low, "doi") || text::starts_with(low, "10.");
        if (!classifiable) break;
        --tail_begin;
    }
    detail::parse_tail_chunks(
        std::vector<std::string>(pieces.begin() + tail_begin, pieces.end()), ref);
    if (tail_begin > i) {
        std::string src = text::trim(pieces[tail_begin - 1]);
        while (!src.empty() && src.back() == '.') src.pop_back();
        if (!src.empty()) ref.source_name = src;
        std::string title;
        for (size_t t = i; t + 1 < tail_begin; ++t) {
            if (!title.empty()) title += ", ";
            title += pieces[t];
        }
        title = text::trim(title);
        if (!title.empty()) ref.title = title;
    }
    return normalize_ref(std::move(ref));
}

namespace detail {

// Scopus "Authors" cell: "Hirsch J.E., Bornmann L." or "; "-separated.
inline std::vector<Author> parse_scopus_authors(const std::string& cell) {
    std::vector<Author> out;
    std::string trimmed = text::trim(cell);
    if (trimmed.empty() || text::fold(trimmed) == "[no author name available]")
        return out;
    std::vector<std::string> parts;
    if (trimmed.find("; ") != std::string::npos)
        parts = text::split(trimmed, "; ");
    else
        parts = text::split(trimmed, ", ");
    for (auto& p : parts) {
        std::string t = text::trim(p);
        if (t.empty()) continue;
        Author a = split_author_token(t);
        if (!a.surname.empty()) out.push_back(std::move(a));
    }
    return out;
}

}  // namespace detail

inline std::vector<Record> parse_scopus(std::istream& is, ParseStats* stats = nullptr) {
    ParseStats local;
    ParseStats& st = stats ? *stats : local;
    st = {};
    std::string content = text::strip_bom(text::read_stream(is));
    content = text::repair_utf8(content, st.encoding_repairs);
    auto rows = text::parse_csv(content);
    if (rows.empty()) throw Error("scopus: empty file");

    std::map<std::string, size_t> col;
    for (size_t i = 0; i < rows[0].size(); ++i) col[text::fold(text::trim(rows[0][i]))] = i;
    std::vector<std::string> missing;
    for (const char* required : {"authors", "title", "year", "source title"})
        if (!col.count(required)) missing.push_back(required);
    if (!missing.empty()) {
        std::string msg = "scopus: missing required columns:";
        for (const auto& m : missing) msg += " \"" + m + "\"";
        throw Error(msg);
    }
    auto cell = [&](const text::CsvRow& row, const char* name) -> std::string {
        auto it = col.find(name);
        if (it == col.end() || it->second >= row.size()) return "";
        return text::trim(row[it->second]);
    };

    std::vector<Record> records;
    for (size_t ri = 1; ri < rows.size(); ++ri) {
        const auto& row = rows[ri];
        if (row.size() == 1 && text::trim_view(row[0]).empty()) continue;
        Record r;
        r.source = Source::SCOPUS;
        r.id = "s" + std::to_string(ri - 1);
        std::string eid = cell(row, "eid");
        if (!eid.empty()) r.id = eid;
        r.authors = detail::parse_scopus_authors(cell(row, "authors"));
        r.title = cell(row, "title");
        r.venue = cell(row, "source title");
        std::string year = cell(row, "year");
        if (!year.empty() && text::all_digits(year)) {
            int y = std::stoi(year);
            if (plausible_year(y)) r.year = y;
        }
        std::string v = cell(row, "volume");
        if (!v.empty()) r.volume = v;
        std::string iss = cell(row, "issue");
        if (!iss.empty()) r.issue = iss;
        std::string ps = cell(row, "page start");
        if (!ps.empty()) r.first_page = ps;
        std::string doi = cell(row, "doi");
        if (!doi.empty()) r.doi = doi;
        r.doc_type = cell(row, "document type");
        std::string cited = cell(row, "cited by");
        if (!cited.empty()) {
            try {
                r.times_cited_scopus = std::max(0L, std::stol(cited));
            } catch (...) {
                r.times_cited_scopus = 0;
            }
        }
        for (auto& kw : text::split(cell(row, "author keywords"), "; ")) {
            std::string t = text::trim(kw);
            if (!t.empty()) r.author_keywords.push_back(std::move(t));
        }
        std::string refs = cell(row, "references");
        if (!refs.empty()) {
            for (auto& frag : text::split(refs, "; ")) {
                std::string t = text::trim(frag);
                if (t.empty()) continue;
                CitedRef cr = parse_scopus_ref(t);
                if (!cr.year && !cr.surname) ++st.unparsed_refs;
                r.cited_refs.push_back(std::move(cr));
            }
        }
        records.push_back(normalize_record(std::move(r)));
    }
    return records;
}

inline void write_scopus_csv(std::ostream& os, const std::vector<Record>& records) {
    text::write_csv_row(os, {"Authors", "Title", "Year", "Source title", "Volume", "Issue",
                             "Page start", "Cited by", "DOI", "Author Keywords", "Document Type",
                             "References", "EID"});
    for (const auto& r : records) {
        std::string authors;
        for (const auto& a : r.authors) {
            if (!authors.empty()) authors += ", ";
            authors += a.surname;
            if (!a.initials.empty()) authors += " " + a.initials;
        }
        std::string kws;
        for (const auto& k : r.author_keywords) kws += (kws.empty() ? "" : "; ") + k;
        std::string refs;
        for (const auto& cr : r.cited_refs) refs += (refs.empty() ? "" : "; ") + cr.raw;
        std::string eid = r.id;
        text::write_csv_row(
            os, {authors, r.title, r.year ? std::to_string(*r.year) : "",
                 r.venue, r.volume.value_or(""), r.issue.value_or(""), r.first_page.value_or(""),
                 r.times_cited_scopus ? std::to_string(*r.times_cited_scopus) : "",
                 r.doi.value_or(""), kws, r.doc_type, refs, eid});
    }
}

}  // namespace citekit
