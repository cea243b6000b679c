#pragma once

// Field normalization applied after parsing: page/volume cleanup, year range
// checks and the case-folded comparison forms used by record linkage. All
// functions here are total and idempotent.

#include <optional>
#include <string>

#include "citekit/record.hpp"
#include "citekit/text.hpp"

namespace citekit {

constexpr int kMinYear = 1800;
constexpr int kMaxYear = 2100;

inline bool plausible_year(int y) { return y >= kMinYear && y <= kMaxYear; }

// "pp. 16569-16572" -> "16569"; keeps non-numeric pages like "S12" intact.
inline std::string normalize_page(std::string_view raw) {
    std::string s = text::trim(raw);
    for (std::string_view prefix : {"pp. ", "pp.", "pp ", "p. "}) {
        if (text::starts_with(s, prefix) && s.size() > prefix.size()) {
            s = text::trim(s.substr(prefix.size()));
            break;
        }
    }
    if (size_t dash = s.find('-'); dash != std::string::npos) s = s.substr(0, dash);
    // WoS sometimes ends pages with '+' for continued articles.
    while (!s.empty() && s.back() == '+') s.pop_back();
    return text::trim(s);
}

// "V102" -> "102". Only strips the marker when a digit follows, so volumes
// that genuinely start with a letter survive repeated application.
inline std::string normalize_volume(std::string_view raw) {
    std::string s = text::trim(raw);
    if (s.size() > 1 && (s[0] == 'V' || s[0] == 'v') && s[1] >= '0' && s[1] <= '9')
        s = s.substr(1);
    return s;
}

// Initials comparison form: dots and spaces removed, case folded.
// "J. E." and "JE" compare equal.
inline std::string normalize_initials(std::string_view raw) {
    std::string out;
    for (char c : raw) {
        if (c == '.' || c == ' ' || c == '-') continue;
        out.push_back(text::ascii_lower(c));
    }
    return out;
}

// One case-folded author string for name similarity, e.g. "hirsch je".
inline std::string author_compare_form(std::string_view surname, std::string_view initials) {
    std::string out = text::fold(text::trim(surname));
    std::string ini = normalize_initials(initials);
    if (!ini.empty()) {
        out.push_back(' ');
        out += ini;
    }
    return out;
}

inline std::optional<std::string> normalize_opt_page(const std::optional<std::string>& v) {
    if (!v) return std::nullopt;
    std::string s = normalize_page(*v);
    if (s.empty()) return std::nullopt;
    return s;
}

inline std::optional<std::string> normalize_opt_volume(const std::optional<std::string>& v) {
    if (!v) return std::nullopt;
    std::string s = normalize_volume(*v);
    if (s.empty()) return std::nullopt;
    return s;
}

inline CitedRef normalize_ref(CitedRef r) {
    r.volume = normalize_opt_volume(r.volume);
    r.first_page = normalize_opt_page(r.first_page);
    if (r.year && !plausible_year(*r.year)) r.year.reset();
    if (r.surname) {
        std::string s = text::trim(*r.surname);
        if (s.empty()) r.surname.reset();
        else *r.surname = s;
    }
    if (r.source_name) *r.source_name = text::trim(*r.source_name);
    return r;
}

inline Record normalize_record(Record r) {
    r.volume = normalize_opt_volume(r.volume);
    r.first_page = normalize_opt_page(r.first_page);
    if (r.year && !plausible_year(*r.year)) r.year.reset();
    if (r.times_cited_wos && *r.times_cited_wos < 0) r.times_cited_wos = 0;
    if (r.times_cited_scopus && *r.times_cited_scopus < 0) r.times_cited_scopus = 0;
    for (auto& a : r.authors) a.surname = text::trim(a.surname);
    r.authors.erase(std::remove_if(r.authors.begin(), r.authors.end(),
                                   [](const Author& a) { return a.surname.empty(); }),
                    r.authors.end());
    for (auto& cr : r.cited_refs) cr = normalize_ref(std::move(cr));
    r.unlinkable = r.authors.empty() && !r.year.has_value();
    return r;
}

}  // namespace citekit
