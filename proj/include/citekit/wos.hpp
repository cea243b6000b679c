#pragma once

// Web of Science export parsing. Two flavors are accepted and auto-detected:
// the classic field-tagged plain text export (two-letter tags, ER-terminated
// blocks, indented continuation lines) and the tab-delimited export (header
// row of tags, one record per row). A writer for the field-tagged form backs
// the parse/serialize roundtrip checks.

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "citekit/normalize.hpp"
#include "citekit/record.hpp"
#include "citekit/text.hpp"

namespace citekit {

struct ParseStats {
    size_t encoding_repairs = 0;
    size_t unparsed_refs = 0;
};

namespace detail {

// Trailing-initials heuristic shared by WoS and Scopus author handling.
// "Hirsch J. E." -> ("Hirsch", "J. E."), "Van Raan AFJ" -> ("Van Raan", "AFJ").
inline Author split_author_token(std::string_view token) {
    auto pieces = text::split(text::trim(token), " ");
    auto is_dotted_initial = [](const std::string& p) {
        // "J", "J.", "J.E." or "Y.Y" but not words like "van".
        if (p.empty() || p.size() > 8) return false;
        bool expect_alpha = true;
        size_t letters = 0;
        for (char c : p) {
            if (expect_alpha) {
                if (!std::isalpha(static_cast<unsigned char>(c))) return false;
                ++letters;
            } else if (c != '.') {
                return false;
            }
            expect_alpha = !expect_alpha;
        }
        return letters <= 4;
    };
    auto is_caps_run = [](const std::string& p) {
        if (p.empty() || p.size() > 4) return false;
        for (char c : p)
            if (c < 'A' || c > 'Z') return false;
        return true;
    };
    size_t split_at = pieces.size();
    while (split_at > 1 && is_dotted_initial(pieces[split_at - 1])) --split_at;
    if (split_at == pieces.size() && pieces.size() > 1 && is_caps_run(pieces.back()))
        split_at = pieces.size() - 1;
    Author a;
    for (size_t i = 0; i < split_at; ++i) {
        if (i) a.surname.push_back(' ');
        a.surname += pieces[i];
    }
    for (size_t i = split_at; i < pieces.size(); ++i) {
        if (i > split_at) a.initials.push_back(' ');
        a.initials += pieces[i];
    }
    return a;
}

// "Hirsch, JE" (WoS AU line) or a bare name.
inline Author parse_wos_author(std::string_view line) {
    size_t comma = line.find(", ");
    if (comma != std::string_view::npos) {
        Author a;
        a.surname = text::trim(line.substr(0, comma));
        a.initials = text::trim(line.substr(comma + 2));
        return a;
    }
    return split_author_token(line);
}

inline bool is_year_token(const std::string& t, int& year) {
    if (t.size() != 4 || !text::all_digits(t)) return false;
    int y = std::stoi(t);
    if (!plausible_year(y)) return false;
    year = y;
    return true;
}

inline std::optional<std::string> extract_doi(std::string_view tail) {
    size_t pos = tail.find("10.");
    if (pos == std::string_view::npos) return std::nullopt;
    size_t end = pos;
    while (end < tail.size() && tail[end] != ',' && tail[end] != ']' && tail[end] != ' ' &&
           tail[end] != ';')
        ++end;
    std::string doi(tail.substr(pos, end - pos));
    while (!doi.empty() && (doi.back() == '.' || doi.back() == ')')) doi.pop_back();
    if (doi.size() < 7) return std::nullopt;
    return doi;
}

}  // namespace detail

// Splits a WoS CR line on ", " and classifies the tokens: the first 4-digit
// token is the year, "V<digits>" the volume, "P<digits>" the page, a token
// starting with "DOI" the identifier; the leading unclassified token is the
// author and the remaining middle ones form the source name.
inline CitedRef parse_wos_ref(std::string_view raw) {
    CitedRef ref;
    ref.raw = text::trim(raw);
    auto tokens = text::split(ref.raw, ", ");

    // Re-join DOI fragments that the comma split broke apart (the bracketed
    // multi-DOI variant seen in real exports).
    std::vector<std::string> merged;
    for (size_t i = 0; i < tokens.size(); ++i) {
        std::string t = tokens[i];
        if (text::starts_with(t, "DOI") && t.find('[') != std::string::npos &&
            t.find(']') == std::string::npos) {
            while (i + 1 < tokens.size() && t.find(']') == std::string::npos) {
                t += ", " + tokens[++i];
            }
        }
        merged.push_back(std::move(t));
    }

    bool year_seen = false;
    std::vector<std::pair<size_t, std::string>> unclassified;
    for (size_t i = 0; i < merged.size(); ++i) {
        const std::string& t = merged[i];
        int y = 0;
        if (!year_seen && detail::is_year_token(t, y)) {
            ref.year = y;
            year_seen = true;
        } else if (!ref.volume && t.size() > 1 && t[0] == 'V' && std::isdigit(static_cast<unsigned char>(t[1]))) {
            ref.volume = normalize_volume(t);
        } else if (!ref.first_page && t.size() > 1 && t[0] == 'P' && std::isdigit(static_cast<unsigned char>(t[1]))) {
            ref.first_page = normalize_page(t.substr(1));
        } else if (text::starts_with(t, "DOI")) {
            if (auto d = detail::extract_doi(t)) ref.doi = d;
        } else {
            unclassified.emplace_back(i, t);
        }
    }
    if (!unclassified.empty() && unclassified.front().first == 0 && merged.size() > 1) {
        Author a = detail::split_author_token(unclassified.front().second);
        if (!a.surname.empty()) ref.surname = a.surname;
        if (!a.initials.empty()) ref.initials = a.initials;
        unclassified.erase(unclassified.begin());
    }
    std::string source;
    for (const auto& [idx, t] : unclassified) {
        if (!source.empty()) source += ", ";
        source += t;
    }
    if (!source.empty()) ref.source_name = source;
    return normalize_ref(std::move(ref));
}

namespace detail {

// Tags whose block holds one entry per line rather than wrapped text.
inline bool is_per_line_tag(const std::string& tag) {
    return tag == "AU" || tag == "AF" || tag == "CR";
}

inline Record record_from_wos_fields(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& fields,
    size_t index) {
    Record r;
    r.source = Source::WOS;
    r.id = "w" + std::to_string(index);
    for (const auto& [tag, lines] : fields) {
        std::string joined;
        for (const auto& l : lines) {
            if (!joined.empty()) joined.push_back(' ');
            joined += l;
        }
        if (tag == "AU") {
            for (const auto& l : lines) r.authors.push_back(parse_wos_author(l));
        } else if (tag == "TI") {
            r.title = joined;
        } else if (tag == "SO") {
            r.venue = joined;
        } else if (tag == "DE" || tag == "WC") {
            auto& dst = (tag == "DE") ? r.author_keywords : r.subject_categories;
            for (auto& kw : text::split(joined, "; ")) {
                std::string t = text::trim(kw);
                if (!t.empty()) dst.push_back(std::move(t));
            }
        } else if (tag == "CR") {
            for (const auto& l : lines) {
                std::string t = text::trim(l);
                if (!t.empty()) r.cited_refs.push_back(parse_wos_ref(t));
            }
        } else if (tag == "TC") {
            try {
                r.times_cited_wos = std::max(0L, std::stol(joined));
            } catch (...) {
                r.times_cited_wos = 0;
            }
        } else if (tag == "PY") {
            try {
                int y = std::stoi(joined);
                if (plausible_year(y)) r.year = y;
            } catch (...) {
            }
        } else if (tag == "VL") {
            r.volume = joined;
        } else if (tag == "IS") {
            r.issue = joined;
        } else if (tag == "BP") {
            r.first_page = joined;
        } else if (tag == "DI") {
            r.doi = joined;
        } else if (tag == "DT") {
            r.doc_type = joined;
        } else if (tag == "UT") {
            r.id = joined;
        } else {
            r.extras[tag] = lines;
        }
    }
    return normalize_record(std::move(r));
}

inline std::vector<Record> parse_wos_tagged(const std::string& content, ParseStats* stats) {
    std::vector<Record> records;
    std::vector<std::pair<std::string, std::vector<std::string>>> fields;
    std::string current_tag;
    bool in_record = false;
    size_t record_start = 0;
    size_t offset = 0;

    auto flush_record = [&]() {
        records.push_back(record_from_wos_fields(fields, records.size()));
        fields.clear();
        current_tag.clear();
        in_record = false;
    };

    size_t pos = 0;
    while (pos <= content.size()) {
        size_t eol = content.find('\n', pos);
        std::string line = (eol == std::string::npos) ? content.substr(pos)
                                                      : content.substr(pos, eol - pos);
        offset = pos;
        pos = (eol == std::string::npos) ? content.size() + 1 : eol + 1;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (text::trim_view(line).empty()) {
            if (eol == std::string::npos) break;
            continue;
        }

        bool is_tag_line = line.size() >= 2 && line[0] >= 'A' && line[0] <= 'Z' &&
                           ((line[1] >= 'A' && line[1] <= 'Z') || (line[1] >= '0' && line[1] <= '9')) &&
                           (line.size() == 2 || line[2] == ' ');
        if (is_tag_line) {
            std::string tag = line.substr(0, 2);
            std::string value = line.size() > 3 ? line.substr(3) : "";
            if (tag == "ER") {
                if (!in_record)
                    throw Error("wos: stray ER terminator at byte " + std::to_string(offset));
                flush_record();
                continue;
            }
            if (tag == "EF") break;
            if (tag == "FN" || tag == "VR") continue;  // file header
            if (!in_record) {
                in_record = true;
                record_start = offset;
            }
            current_tag = tag;
            fields.emplace_back(tag, std::vector<std::string>{value});
        } else {
            // continuation line
            if (!in_record || fields.empty())
                throw Error("wos: continuation line outside a record at byte " +
                            std::to_string(offset));
            std::string value = text::trim(line);
            if (detail::is_per_line_tag(current_tag))
                fields.back().second.push_back(value);
            else
                fields.back().second.back() += " " + value;
        }
        if (eol == std::string::npos) break;
    }
    if (in_record)
        throw Error("wos: record starting at byte " + std::to_string(record_start) +
                    " is not terminated by ER");
    (void)stats;
    return records;
}

inline std::vector<Record> parse_wos_tab(const std::string& content, ParseStats* stats) {
    std::vector<Record> records;
    size_t pos = 0;
    std::vector<std::string> header;
    size_t row_index = 0;
    while (pos <= content.size()) {
        size_t eol = content.find('\n', pos);
        std::string line = (eol == std::string::npos) ? content.substr(pos)
                                                      : content.substr(pos, eol - pos);
        pos = (eol == std::string::npos) ? content.size() + 1 : eol + 1;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (text::trim_view(line).empty()) {
            if (eol == std::string::npos) break;
            continue;
        }
        auto cells = text::split(line, "\t");
        if (header.empty()) {
            header = cells;
        } else {
            std::vector<std::pair<std::string, std::vector<std::string>>> fields;
            for (size_t i = 0; i < header.size() && i < cells.size(); ++i) {
                std::string value = text::trim(cells[i]);
                if (value.empty()) continue;
                const std::string& tag = header[i];
                if (detail::is_per_line_tag(tag)) {
                    std::vector<std::string> items;
                    for (auto& item : text::split(value, "; "))
                        if (!text::trim_view(item).empty()) items.push_back(text::trim(item));
                    fields.emplace_back(tag, std::move(items));
                } else {
                    fields.emplace_back(tag, std::vector<std::string>{value});
                }
            }
            records.push_back(record_from_wos_fields(fields, row_index));
            ++row_index;
        }
        if (eol == std::string::npos) break;
    }
    (void)stats;
    return records;
}

}  // namespace detail

inline std::vector<Record> parse_wos(std::istream& is, ParseStats* stats = nullptr) {
    ParseStats local;
    ParseStats& st = stats ? *stats : local;
    st = {};
    std::string content = text::strip_bom(text::read_stream(is));
    content = text::repair_utf8(content, st.encoding_repairs);

    // Tab-delimited exports start with a header row of tags.
    size_t eol = content.find('\n');
    std::string first = (eol == std::string::npos) ? content : content.substr(0, eol);
    if (first.find('\t') != std::string::npos &&
        (text::starts_with(first, "PT\t") || text::starts_with(first, "﻿PT\t")))
        return detail::parse_wos_tab(content, &st);
    return detail::parse_wos_tagged(content, &st);
}

// Writes the field-tagged form. Parsing the output yields field-equal records.
inline void write_wos(std::ostream& os, const std::vector<Record>& records) {
    os << "FN Thomson Reuters Web of Science\nVR 1.0\n";
    auto emit = [&os](const char* tag, const std::string& value) {
        if (!value.empty()) os << tag << ' ' << value << '\n';
    };
    for (const auto& r : records) {
        auto pt = r.extras.find("PT");
        emit("PT", pt != r.extras.end() && !pt->second.empty() ? pt->second.front() : "J");
        if (!r.authors.empty()) {
            os << "AU " << r.authors.front().surname;
            if (!r.authors.front().initials.empty()) os << ", " << r.authors.front().initials;
            os << '\n';
            for (size_t i = 1; i < r.authors.size(); ++i) {
                os << "   " << r.authors[i].surname;
                if (!r.authors[i].initials.empty()) os << ", " << r.authors[i].initials;
                os << '\n';
            }
        }
        emit("TI", r.title);
        emit("SO", r.venue);
        if (!r.author_keywords.empty()) {
            std::string de;
            for (const auto& k : r.author_keywords) de += (de.empty() ? "" : "; ") + k;
            emit("DE", de);
        }
        if (!r.subject_categories.empty()) {
            std::string wc;
            for (const auto& c : r.subject_categories) wc += (wc.empty() ? "" : "; ") + c;
            emit("WC", wc);
        }
        if (!r.cited_refs.empty()) {
            os << "CR " << r.cited_refs.front().raw << '\n';
            for (size_t i = 1; i < r.cited_refs.size(); ++i)
                os << "   " << r.cited_refs[i].raw << '\n';
        }
        if (r.times_cited_wos) os << "TC " << *r.times_cited_wos << '\n';
        if (r.year) os << "PY " << *r.year << '\n';
        if (r.volume) emit("VL", *r.volume);
        if (r.issue) emit("IS", *r.issue);
        if (r.first_page) emit("BP", *r.first_page);
        if (r.doi) emit("DI", *r.doi);
        emit("DT", r.doc_type);
        for (const auto& [tag, lines] : r.extras) {
            if (tag == "PT") continue;
            for (size_t i = 0; i < lines.size(); ++i)
                os << (i == 0 ? tag + " " : std::string("   ")) << lines[i] << '\n';
        }
        if (!text::starts_with(r.id, "w") || !text::all_digits(std::string_view(r.id).substr(1)))
            emit("UT", r.id);
        os << "ER\n\n";
    }
    os << "EF\n";
}

}  // namespace citekit
