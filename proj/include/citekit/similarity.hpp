#pragma once

// Jaro / Jaro-Winkler string similarity and the 5-field reference similarity
// used to decide whether two cited-reference variants denote one publication.

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "citekit/normalize.hpp"
#include "citekit/record.hpp"

namespace citekit {

// Jaro similarity. m characters match when equal and within a window of
// floor(max(len1,len2)/2)-1 positions; t is half the count of matched
// characters that appear in a different order.
inline double jaro(std::string_view s1, std::string_view s2) {
    const size_t l1 = s1.size(), l2 = s2.size();
    if (l1 == 0 && l2 == 0) return 1.0;
    if (l1 == 0 || l2 == 0) return 0.0;
    const size_t window = std::max(l1, l2) / 2 > 0 ? std::max(l1, l2) / 2 - 1 : 0;

    std::vector<bool> m1(l1, false), m2(l2, false);
    size_t matches = 0;
    for (size_t i = 0; i < l1; ++i) {
        const size_t lo = i > window ? i - window : 0;
        const size_t hi = std::min(l2, i + window + 1);
        for (size_t j = lo; j < hi; ++j) {
            if (!m2[j] && s1[i] == s2[j]) {
                m1[i] = m2[j] = true;
                ++matches;
                break;
            }
        }
    }
    if (matches == 0) return 0.0;

    size_t out_of_order = 0;
    size_t j = 0;
    for (size_t i = 0; i < l1; ++i) {
        if (!m1[i]) continue;
        while (!m2[j]) ++j;
        if (s1[i] != s2[j]) ++out_of_order;
        ++j;
    }
    const double m = static_cast<double>(matches);
    const double t = static_cast<double>(out_of_order) / 2.0;
    return (m / l1 + m / l2 + (m - t) / m) / 3.0;
}

// Jaro-Winkler: boosts Jaro by the shared prefix, d + l*p*(1-d) with p = 0.1
// and the prefix length l capped at 4.
inline double jaro_winkler(std::string_view s1, std::string_view s2, double p = 0.1) {
    const double d = jaro(s1, s2);
    size_t l = 0;
    const size_t cap = std::min({s1.size(), s2.size(), size_t{4}});
    while (l < cap && s1[l] == s2[l]) ++l;
    return d + static_cast<double>(l) * p * (1.0 - d);
}

// ---- 5-field reference similarity ------------------------------------------

// Mean over the comparable fields: author and source names score by
// Jaro-Winkler on case-folded text, year/volume/page score 1 on exact match
// and 0 when present but different. Fields absent on either side are left out
// of the average. Returns nullopt when fewer than two fields are comparable.
inline std::optional<double> try_overall_similarity(const CitedRef& a, const CitedRef& b) {
    double sum = 0.0;
    int n = 0;

    if (a.surname && b.surname) {
        const std::string fa = author_compare_form(*a.surname, a.initials.value_or(""));
        const std::string fb = author_compare_form(*b.surname, b.initials.value_or(""));
        sum += jaro_winkler(fa, fb);
        ++n;
    }
    if (a.source_name && b.source_name) {
        sum += jaro_winkler(text::fold(*a.source_name), text::fold(*b.source_name));
        ++n;
    }
    if (a.year && b.year) {
        sum += (*a.year == *b.year) ? 1.0 : 0.0;
        ++n;
    }
    if (a.volume && b.volume) {
        sum += (normalize_volume(*a.volume) == normalize_volume(*b.volume)) ? 1.0 : 0.0;
        ++n;
    }
    if (a.first_page && b.first_page) {
        sum += (normalize_page(*a.first_page) == normalize_page(*b.first_page)) ? 1.0 : 0.0;
        ++n;
    }
    if (n < 2) return std::nullopt;
    return sum / n;
}

inline double overall_similarity(const CitedRef& a, const CitedRef& b) {
    auto s = try_overall_similarity(a, b);
    if (!s) throw Error("overall_similarity: fewer than 2 comparable fields");
    return *s;
}

}  // namespace citekit
