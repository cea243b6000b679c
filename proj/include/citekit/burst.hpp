#pragma once

// Citation burst detection: a two-state automaton over yearly event
// proportions. The base state emits at the overall rate p0; the burst state
// at p1 = s * p0. Entering the burst state costs gamma * ln(number of
// years); staying or leaving is free. The minimum-cost state sequence is
// found by dynamic programming and each maximal burst run becomes an
// interval whose strength is the emission-cost saving it achieves.

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "citekit/text.hpp"

namespace citekit {

struct BurstInterval {
    std::string entity;
    std::optional<int> entity_year;  // the entity's publication year, for reports
    double strength = 0.0;
    int begin = 0;
    int end = 0;
    int duration() const { return end - begin + 1; }
};

struct BurstOptions {
    double s = 2.0;       // burst rate multiplier
    double gamma = 1.0;   // up-transition cost scale
    int min_duration = 1; // keep intervals at least this long
};

namespace detail {

inline double emission_cost(long r, long d, double p) {
    if (d == 0) return 0.0;
    double rd = static_cast<double>(r), dd = static_cast<double>(d);
    return -(rd * std::log(p) + (dd - rd) * std::log(1.0 - p));
}

}  // namespace detail

// series: the entity's yearly event counts; baseline: total events per year.
// Years missing from the baseline range count as zero.
inline std::vector<BurstInterval> detect_bursts(const std::map<int, long>& series,
                                                const std::map<int, long>& baseline,
                                                const BurstOptions& opts = {}) {
    if (series.empty() || baseline.empty()) return {};
    int y0 = baseline.begin()->first;
    int y1 = baseline.rbegin()->first;
    if (series.begin()->first < y0 || series.rbegin()->first > y1)
        throw Error("bursts: series year outside the baseline range");

    size_t n = static_cast<size_t>(y1 - y0 + 1);
    std::vector<long> r(n, 0), d(n, 0);
    long r_total = 0, d_total = 0;
    for (const auto& [y, c] : baseline) {
        d[y - y0] = c;
        d_total += c;
    }
    for (const auto& [y, c] : series) {
        if (c > d[y - y0]) throw Error("bursts: series exceeds baseline in " + std::to_string(y));
        r[y - y0] = c;
        r_total += c;
    }
    if (r_total == 0 || d_total == 0) return {};

    double p0 = static_cast<double>(r_total) / static_cast<double>(d_total);
    double p1 = std::min(opts.s * p0, 1.0 - 1e-9);
    if (p1 <= p0 || p0 >= 1.0) return {};
    double up_cost = opts.gamma * std::log(static_cast<double>(n));

    // suffix[t][s]: cheapest cost of years t..n-1 entering year t in state s.
    std::vector<std::array<double, 2>> suffix(n + 1, {0.0, 0.0});
    for (size_t t = n; t-- > 0;) {
        double e0 = detail::emission_cost(r[t], d[t], p0);
        double e1 = detail::emission_cost(r[t], d[t], p1);
        suffix[t][0] = e0 + std::min(suffix[t + 1][0], up_cost + suffix[t + 1][1]);
        suffix[t][1] = e1 + std::min(suffix[t + 1][0], suffix[t + 1][1]);
    }

    // Forward reconstruction preferring the base state on ties, which yields
    // the lexicographically smallest optimal sequence.
    std::vector<int> state(n, 0);
    int prev = 0;
    for (size_t t = 0; t < n; ++t) {
        double stay0 = (prev == 0 ? 0.0 : 0.0) + suffix[t][0];
        double go1 = (prev == 0 ? up_cost : 0.0) + suffix[t][1];
        state[t] = stay0 <= go1 ? 0 : 1;
        prev = state[t];
    }

    std::vector<BurstInterval> bursts;
    size_t t = 0;
    while (t < n) {
        if (state[t] == 0) {
            ++t;
            continue;
        }
        size_t begin = t;
        double strength = 0.0;
        while (t < n && state[t] == 1) {
            strength += detail::emission_cost(r[t], d[t], p0) -
                        detail::emission_cost(r[t], d[t], p1);
            ++t;
        }
        BurstInterval b;
        b.strength = strength;
        b.begin = y0 + static_cast<int>(begin);
        b.end = y0 + static_cast<int>(t - 1);
        if (b.duration() >= opts.min_duration) bursts.push_back(std::move(b));
    }
    return bursts;
}

inline void write_bursts_csv(std::ostream& os, const std::vector<BurstInterval>& bursts) {
    text::write_csv_row(os, {"reference", "year", "strength", "begin", "end"});
    for (const auto& b : bursts)
        text::write_csv_row(os, {b.entity, b.entity_year ? std::to_string(*b.entity_year) : "",
                                 text::format_double(b.strength, 4), std::to_string(b.begin),
                                 std::to_string(b.end)});
}

}  // namespace citekit
